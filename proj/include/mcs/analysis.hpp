#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

// Analysis functions expect tasks normalized by validate_taskset.

struct AnalysisOptions {
  // Cap each interfering workload at delta - C_i(l) + 1.
  bool cap_enabled = true;
};

struct InterferenceBound {
  Time nc = 0;
  Time ci = 0;
  Time diff = 0;
};

// Upper bound on execution of jobs released inside a window of length delta.
Time workload_nc(const MCTask& tj, Time delta, Level level);
// Same, when one job released before the window may execute inside it.
Time workload_ci(const MCTask& tj, Time delta, Level level);

InterferenceBound interfering_bounds(const MCTask& tj, const MCTask& ti, Time delta, Level level,
                                     const AnalysisOptions& opts = {});

// Sum of NC bounds plus the largest min(m-1, |hp|) DIFF terms (ties: smaller id).
Time total_interfering(const MCTask& ti, std::span<const MCTask* const> hp, Time delta, Level level,
                       int processors, const AnalysisOptions& opts = {});

struct WcrtResult {
  std::optional<Time> response;  // empty: an iterate exceeded D_i
  int iterations = 0;

  bool divergent() const { return !response.has_value(); }
};

// Least fixed point of R = C_i(l) + floor(I_i(R, l) / m), iterated from C_i(l).
WcrtResult wcrt(const MCTask& ti, std::span<const MCTask* const> hp, Level level, int processors,
                const AnalysisOptions& opts = {});

struct PriorityAssignment {
  // order[0] has rank 1 (highest priority).
  std::vector<TaskId> order;

  int rank_of(TaskId id) const;  // 0 when unranked
  bool operator==(const PriorityAssignment&) const = default;
};

struct WcrtTable {
  // entries[id][l - 1] = R_id(l), l = 1..L_id
  std::map<TaskId, std::vector<Time>> entries;

  bool has(TaskId id, Level level) const;
  Time at(TaskId id, Level level) const;
  bool operator==(const WcrtTable&) const = default;
};

enum class Verdict { Schedulable, Unschedulable };

struct AnalysisResult {
  Verdict verdict = Verdict::Schedulable;
  PriorityAssignment priorities;  // complete only when schedulable
  WcrtTable wcrt;
  std::vector<TaskId> witness;    // residual set no candidate could be placed from

  bool schedulable() const { return verdict == Verdict::Schedulable; }
};

// Audsley's lowest-priority-first assignment. `candidate_order` fixes the
// examination order (default: ascending id); the verdict does not depend on it.
AnalysisResult opa_assign(const TaskSet& ts, const Platform& platform, const AnalysisOptions& opts = {},
                          std::span<const TaskId> candidate_order = {});

// Deadline-monotonic order (ties: smaller id) with its WCRT table, used when
// simulating a set the analysis rejected. Divergent entries are set to D.
AnalysisResult forced_assignment(const TaskSet& ts, const Platform& platform, const AnalysisOptions& opts = {});

// Structured report: verdict, ranks, full R(i, l) table.
std::string analysis_report(const AnalysisResult& result, const TaskSet& ts);

}  // namespace mcs
