#pragma once

#include "mcs/experiment.hpp"

namespace testutil {

using namespace mcs;

inline MCTask task(TaskId id, Time t, Time d, Level l, std::vector<Time> c) { return MCTask{id, t, d, l, std::move(c)}; }

inline TaskSet taskset(Level levels, std::vector<MCTask> tasks, int m = 1) {
  TaskSet ts;
  ts.levels = levels;
  ts.tasks = std::move(tasks);
  return validate_taskset(ts, Platform{m});
}

// Priorities in the listed order, WCRT from the analysis under that order.
inline AnalysisResult fixed_priorities(const TaskSet& ts, int m, std::vector<TaskId> order) {
  AnalysisResult res;
  res.priorities.order = order;
  std::vector<const MCTask*> hp;
  for (TaskId id : order) {
    const auto& t = ts.at(id);
    for (Level l = 1; l <= t.criticality; ++l) {
      const auto r = wcrt(t, hp, l, m);
      res.wcrt.entries[id].push_back(r.response.value_or(t.deadline));
    }
    hp.push_back(&t);
  }
  return res;
}

inline std::vector<TraceEvent> of_kind(const Trace& tr, EventKind k) {
  std::vector<TraceEvent> out;
  for (const auto& e : tr.events)
    if (e.kind == k) out.push_back(e);
  return out;
}

inline const TraceEvent* find(const Trace& tr, EventKind k, TaskId task, int job) {
  for (const auto& e : tr.events)
    if (e.kind == k && e.task == task && e.k == job) return &e;
  return nullptr;
}

}  // namespace testutil
