#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mcs/analysis.hpp"
#include "mcs/gen.hpp"
#include "mcs/io.hpp"
#include "mcs/sim.hpp"
#include "mcs/verify.hpp"

namespace mcs {

struct ExperimentSpec {
  std::optional<TasksetDocument> taskset;  // from a file or inline
  std::optional<GenParams> generate;       // used when no taskset is given
  int scenarios = 1;
  std::vector<ImcrProtocol> protocols;
  Time horizon = 0;  // 0: 20 times the largest period
  std::uint64_t seed = 1;
  std::string output;  // directory for results.csv; empty: standard output
  RemOrder rem_order = RemOrder::CritThenEdf;
  ExecModel exec_model;
  DmcrPlan dmcr;
  bool cap = true;
  bool force = false;
};

// JSON experiment description. Relative taskset paths resolve against `base_dir`.
// Throws Error(SyntaxError) or Error(InvalidParameter).
ExperimentSpec parse_experiment_spec(const std::string& text, const std::filesystem::path& base_dir = {});

struct ExperimentRow {
  ImcrProtocol protocol = ImcrProtocol::Drop;
  std::uint64_t seed = 0;  // scenario seed
  int scenario_id = 0;
  std::size_t misses_hi = 0;
  std::size_t misses_enabled = 0;
  std::size_t rem_completed = 0;
  std::size_t rem_dropped = 0;
  double mean_tardiness = 0;
  Time max_tardiness = 0;
  double mean_susp_delay = 0;
  std::size_t chain_aborts = 0;
  // Not part of the CSV.
  std::size_t violations = 0;
  Time rem_response_sum = 0;  // f - r over kept rem-jobs, unfinished ones until the horizon
  std::size_t rem_kept = 0;
};

struct ExperimentResult {
  TaskSet tasks;
  Platform platform;
  AnalysisResult analysis;
  Time horizon = 0;
  std::vector<ExperimentRow> rows;  // sorted by (protocol, scenario_id)
  CheckReport report;               // findings from every run
};

// Simulates and checks every (scenario, protocol) pair, in parallel when
// `threads` != 1 (0: hardware concurrency). Output does not depend on threads.
// Throws Error(Infeasible) for an unschedulable set unless spec.force.
ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned threads = 0);

std::string experiment_csv(const ExperimentResult& result);

}  // namespace mcs
