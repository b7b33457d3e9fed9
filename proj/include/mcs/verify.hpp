#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcs/analysis.hpp"
#include "mcs/trace.hpp"

namespace mcs {

struct LInterval {
  Time start = 0;
  Time end = 0;
  Level level = 1;
  bool operator==(const LInterval&) const = default;
};

// Partition of [0, horizon] by criticality level. Changes at BudgetExceeded
// and ReEnabled; zero-length entries appear when the level moves twice at one
// instant.
struct LIntervalSet {
  std::vector<LInterval> intervals;

  // Level in force for decisions taken at `t` after all same-instant mode events.
  Level level_at(Time t) const;
  // Highest level in force at any point of [a, b), including mode events at a.
  Level max_level(Time a, Time b) const;
  // True if a mode event happens strictly inside (a, b).
  bool changes_within(Time a, Time b) const;
};

LIntervalSet compute_l_intervals(const Trace& trace);

struct Segment {
  TaskId task = 0;
  int k = 0;
  int proc = 0;
  Time start = 0;
  Time end = 0;
  SlotKind slot = SlotKind::Job;
  std::optional<TaskId> lender_task;
  std::optional<int> lender_k;
};

struct JobRecord {
  TaskId task = 0;
  int k = 0;
  Time release = 0;
  Time deadline = 0;
  Level crit = 1;
  std::optional<Time> finish;
  std::optional<Time> exec;
  std::optional<Time> rem_since;
  std::optional<Time> dropped_at;
  std::optional<Time> miss_at;
  Time received = 0;  // sum of segment lengths
};

struct GhostRecord {
  TaskId task = 0;
  int k = 0;
  Time created = 0;
  Level level = 1;
  std::string kind;  // "wcet" or "wcrt"
  std::optional<Time> budget;
  std::optional<Time> until;
  std::optional<Time> retired;
};

using JobKey = std::pair<TaskId, int>;

// Everything the checkers need, reconstructed from the event stream alone.
struct TraceIndex {
  Time horizon = 0;
  int processors = 1;
  Level levels = 1;
  std::string protocol;
  LIntervalSet intervals;
  std::vector<Segment> segments;
  std::map<JobKey, JobRecord> jobs;
  std::map<JobKey, Time> suspended_arrivals;  // JobDropped "suspended"
  std::map<JobKey, GhostRecord> ghosts;
  std::vector<Time> idle;  // per processor, from Idle events
  std::vector<TraceEvent> mode_events;  // BudgetExceeded, ReEnabled and DMCR events, trace order
};

// Throws Error(MalformedTrace) on inconsistent event sequences.
TraceIndex index_trace(const Trace& trace);

struct Finding {
  std::string check;
  std::string kind;
  std::optional<TaskId> task;
  std::optional<int> k;
  Time t = 0;
  std::string detail;
};

struct CheckReport {
  std::vector<Finding> findings;
  std::size_t checked = 0;   // jobs or entries examined
  std::size_t spanning = 0;  // response-bound check: jobs crossing a mode boundary

  bool ok() const { return findings.empty(); }
  void merge(const CheckReport& other);
};

std::string format_report(const CheckReport& report);

// Jobs of tasks with L >= level throughout [r, min(f, d)) must receive c by d.
CheckReport check_feasibility(const TraceIndex& idx, const TaskSet& ts);
CheckReport check_feasibility(const Trace& trace, const TaskSet& ts);

// Arrivals of tasks with L >= level must be released exactly when they arrive.
CheckReport check_periodicity(const TraceIndex& idx, const TaskSet& ts, const Scenario& sc);
CheckReport check_periodicity(const Trace& trace, const TaskSet& ts, const Scenario& sc);

// f - r <= R(i, l) for jobs lying inside one l-interval with L_i >= l.
CheckReport check_response_bounds(const TraceIndex& idx, const WcrtTable& wt);
CheckReport check_response_bounds(const Trace& trace, const WcrtTable& wt);

// Global static-priority dispatching: at most m running, no enabled job
// waiting behind idle or lower-priority slots, rem-jobs fill idle processors.
CheckReport check_dispatch(const TraceIndex& idx, const PriorityAssignment& pa);
CheckReport check_dispatch(const Trace& trace, const PriorityAssignment& pa);

// WcetReclaim: c + lent <= C_i(l'). WcrtSimulate: lent time lies in [f, r + R_i(l')].
CheckReport check_reclaim_accounting(const TraceIndex& idx, const TaskSet& ts, const WcrtTable& wt);
CheckReport check_reclaim_accounting(const Trace& trace, const TaskSet& ts, const WcrtTable& wt);

// Chains crossed by an overrun are aborted; re-enablement without a later
// overrun causes no deadline miss of enabled tasks.
CheckReport check_dmcr(const TraceIndex& idx, const TaskSet& ts);
CheckReport check_dmcr(const Trace& trace, const TaskSet& ts);

// All of the above. Periodicity only when a scenario is given.
CheckReport check_all(const TraceIndex& idx, const TaskSet& ts, const PriorityAssignment& pa, const WcrtTable& wt,
                      const Scenario* sc = nullptr);
CheckReport check_all(const Trace& trace, const TaskSet& ts, const PriorityAssignment& pa, const WcrtTable& wt,
                      const Scenario* sc = nullptr);

// Largest execution a single task can place inside [0, delta) over all legal
// release patterns, each job executing at most C(level) inside [r, r + D).
// With carry_in the first release lies in [-T, 0), otherwise in [0, delta).
// Throws Error(ParameterTooLarge) when T > 12 or delta > 40.
Time brute_force_workload(const MCTask& tj, Time delta, Level level, bool carry_in);

// Odometer over per-job level choices (first task's first job varies fastest).
class BasicScenarioEnumerator {
 public:
  // Arrivals at or past the horizon are discarded. Throws
  // Error(ParameterTooLarge) above 12 jobs in total.
  BasicScenarioEnumerator(const TaskSet& ts, Time horizon, const std::map<TaskId, std::vector<Time>>& arrivals);

  std::size_t count() const { return count_; }
  bool next(Scenario& out);

 private:
  struct Slot {
    const MCTask* task;
    std::size_t index;
  };
  TaskSet ts_;
  Scenario base_;
  std::vector<Slot> slots_;
  std::vector<Level> digits_;
  std::size_t count_ = 1;
  bool done_ = false;
};

std::vector<Scenario> enumerate_basic_scenarios(const TaskSet& ts, Time horizon,
                                                const std::map<TaskId, std::vector<Time>>& arrivals);

struct ResponseStats {
  std::size_t count = 0;
  Time max = 0;
  double mean = 0;
};

struct RemJobOutcome {
  TaskId task = 0;
  int k = 0;
  Time release = 0;
  Time deadline = 0;
  Time demoted = 0;
  std::optional<Time> finish;
  bool dropped = false;
  Time tardiness = 0;  // max(0, f - d) for completed rem-jobs
};

struct SuspensionEpisode {
  TaskId task = 0;
  Time suspended = 0;
  std::optional<Time> reenabled;
};

struct TraceMetrics {
  std::map<TaskId, ResponseStats> response;
  std::map<TaskId, std::vector<Time>> interference;  // per job: f - r - c
  std::vector<RemJobOutcome> rem_jobs;
  std::vector<SuspensionEpisode> suspensions;
  std::vector<Time> idle;  // per processor
  std::size_t rem_completed = 0;
  std::size_t rem_dropped = 0;
  std::size_t misses = 0;     // enabled jobs past their deadline
  std::size_t misses_hi = 0;  // of which criticality equals the number of levels
  std::size_t chain_aborts = 0;
  double mean_tardiness = 0;
  Time max_tardiness = 0;
  double mean_susp_delay = 0;
  // Mean rem-job response f - r; unfinished rem-jobs count until the horizon.
  double mean_rem_response = 0;
};

TraceMetrics metrics(const TraceIndex& idx);
TraceMetrics metrics(const Trace& trace);

}  // namespace mcs
