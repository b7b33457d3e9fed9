#pragma once

#include <filesystem>
#include <string>

#include "mcs/model.hpp"

namespace mcs {

struct TasksetDocument {
  TaskSet tasks;
  Platform platform;

  bool operator==(const TasksetDocument&) const = default;
};

// Task-set file:
//   { "criticality_levels": L, "processors": m,
//     "tasks": [ { "id", "T", "D", "L", "C": [...] } ] }
// Parsing validates; malformed input raises Error(SyntaxError) naming the
// line or field, constraint violations raise ValidationError.
TasksetDocument parse_taskset(const std::string& text);
std::string serialize_taskset(const TasksetDocument& doc);

// Scenario file:
//   { "horizon", "tasks": { "<id>": { "arrivals": [...], "exec_times": [...] } },
//     "dmcr_requests": [ { "time", "target_level" } ] }
Scenario parse_scenario(const std::string& text, const TaskSet& ts);
Scenario parse_scenario_unchecked(const std::string& text);
std::string serialize_scenario(const Scenario& sc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace mcs
