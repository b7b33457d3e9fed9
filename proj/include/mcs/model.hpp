#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mcs/error.hpp"

namespace mcs {

// One simulator tick is one time unit.
using Time = std::int64_t;
using Level = int;
using TaskId = int;

struct Platform {
  int processors = 1;
};

// Sporadic mixed-criticality task. `wcet[l - 1]` is C(l). After validation the
// vector always has one entry per system level, constant beyond `criticality`.
struct MCTask {
  TaskId id = 0;
  Time period = 1;
  Time deadline = 1;
  Level criticality = 1;
  std::vector<Time> wcet;

  bool operator==(const MCTask&) const = default;
};

struct TaskSet {
  Level levels = 1;
  std::vector<MCTask> tasks;

  const MCTask* find(TaskId id) const;
  const MCTask& at(TaskId id) const;
  Time max_period() const;

  bool operator==(const TaskSet&) const = default;
};

// C(level), padded with C(L) above the task's own criticality.
Time effective_wcet(const MCTask& task, Level level, Level levels);

// True iff the task belongs to operating mode M_level.
bool mode_membership(const MCTask& task, Level level, Level levels);

// Returns the set with every WCET vector normalized to `levels` entries.
// Throws ValidationError listing every violated constraint.
TaskSet validate_taskset(const TaskSet& ts, const Platform& platform);

struct TaskArrivals {
  std::vector<Time> arrivals;
  std::vector<Time> exec_times;

  bool operator==(const TaskArrivals&) const = default;
};

struct DmcrRequest {
  Time time = 0;
  Level target = 1;

  bool operator==(const DmcrRequest&) const = default;
};

struct Scenario {
  Time horizon = 0;
  std::map<TaskId, TaskArrivals> tasks;
  std::vector<DmcrRequest> dmcr_requests;

  bool operator==(const Scenario&) const = default;
};

void validate_scenario(const Scenario& sc, const TaskSet& ts);

// Per task, one level per job; job k runs for exactly C(level_k).
using BasicLevelAssignment = std::map<TaskId, std::vector<Level>>;

void apply_basic_levels(Scenario& sc, const TaskSet& ts, const BasicLevelAssignment& levels);
bool is_basic(const Scenario& sc, const TaskSet& ts);

}  // namespace mcs
