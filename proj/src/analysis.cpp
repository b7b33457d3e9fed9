#include "mcs/analysis.hpp"

#include <algorithm>
#include <tuple>

#include "json.hpp"

namespace mcs {

namespace {

Time wcet_at(const MCTask& t, Level level) {
  if (level < 1 || static_cast<std::size_t>(level) > t.wcet.size())
    throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(level) + " out of range for task " +
                                                std::to_string(t.id));
  return t.wcet[static_cast<std::size_t>(std::min(level, t.criticality) - 1)];
}

void check_delta(Time delta) {
  if (delta < 0) throw Error(ErrorCode::InvalidParameter, "window length must be >= 0");
}

}  // namespace

Time workload_nc(const MCTask& tj, Time delta, Level level) {
  check_delta(delta);
  const Time c = wcet_at(tj, level);
  return (delta / tj.period) * c + std::min(c, delta % tj.period);
}

Time workload_ci(const MCTask& tj, Time delta, Level level) {
  check_delta(delta);
  const Time c = wcet_at(tj, level);
  const Time rest = std::max<Time>(delta - c, 0);
  return std::min(delta, c * (1 + rest / tj.period) + std::min(c, rest % tj.period));
}

InterferenceBound interfering_bounds(const MCTask& tj, const MCTask& ti, Time delta, Level level,
                                     const AnalysisOptions& opts) {
  if (tj.id == ti.id) throw Error(ErrorCode::SameTask, "a task does not interfere with itself");
  InterferenceBound b;
  b.nc = workload_nc(tj, delta, level);
  b.ci = workload_ci(tj, delta, level);
  if (opts.cap_enabled) {
    const Time cap = std::max<Time>(delta - wcet_at(ti, level) + 1, 0);
    b.nc = std::min(b.nc, cap);
    b.ci = std::min(b.ci, cap);
  }
  b.diff = b.ci - b.nc;
  return b;
}

Time total_interfering(const MCTask& ti, std::span<const MCTask* const> hp, Time delta, Level level,
                       int processors, const AnalysisOptions& opts) {
  Time sum = 0;
  std::vector<std::pair<Time, TaskId>> diffs;
  diffs.reserve(hp.size());
  for (const MCTask* tj : hp) {
    const auto b = interfering_bounds(*tj, ti, delta, level, opts);
    sum += b.nc;
    diffs.emplace_back(b.diff, tj->id);
  }
  const auto carry = std::min<std::size_t>(static_cast<std::size_t>(std::max(processors - 1, 0)), diffs.size());
  std::partial_sort(diffs.begin(), diffs.begin() + static_cast<std::ptrdiff_t>(carry), diffs.end(),
                    [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  for (std::size_t i = 0; i < carry; ++i) sum += diffs[i].first;
  return sum;
}

WcrtResult wcrt(const MCTask& ti, std::span<const MCTask* const> hp, Level level, int processors,
                const AnalysisOptions& opts) {
  if (level > ti.criticality)
    throw Error(ErrorCode::LevelOutOfRange, "WCRT requested above the task's criticality");
  if (processors < 1) throw Error(ErrorCode::InvalidParameter, "processor count must be >= 1");
  const Time c = wcet_at(ti, level);
  WcrtResult out;
  Time delta = c;
  while (true) {
    ++out.iterations;
    if (delta > ti.deadline) return out;
    const Time next = c + total_interfering(ti, hp, delta, level, processors, opts) / processors;
    if (next == delta) {
      out.response = delta;
      return out;
    }
    delta = next;
  }
}

int PriorityAssignment::rank_of(TaskId id) const {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == id) return static_cast<int>(i) + 1;
  return 0;
}

bool WcrtTable::has(TaskId id, Level level) const {
  auto it = entries.find(id);
  return it != entries.end() && level >= 1 && static_cast<std::size_t>(level) <= it->second.size();
}

Time WcrtTable::at(TaskId id, Level level) const {
  if (!has(id, level))
    throw Error(ErrorCode::InconsistentInputs,
                "no WCRT for task " + std::to_string(id) + " at level " + std::to_string(level));
  return entries.at(id)[static_cast<std::size_t>(level - 1)];
}

AnalysisResult opa_assign(const TaskSet& ts, const Platform& platform, const AnalysisOptions& opts,
                          std::span<const TaskId> candidate_order) {
  std::vector<const MCTask*> remaining;
  if (candidate_order.empty()) {
    for (const auto& t : ts.tasks) remaining.push_back(&t);
    std::sort(remaining.begin(), remaining.end(), [](auto* a, auto* b) { return a->id < b->id; });
  } else {
    if (candidate_order.size() != ts.tasks.size())
      throw Error(ErrorCode::InconsistentInputs, "candidate order must list every task once");
    for (TaskId id : candidate_order) remaining.push_back(&ts.at(id));
  }

  AnalysisResult result;
  std::vector<TaskId> lowest_first;
  std::vector<const MCTask*> hp;
  while (!remaining.empty()) {
    bool placed = false;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const MCTask* cand = remaining[i];
      hp.clear();
      for (std::size_t j = 0; j < remaining.size(); ++j)
        if (j != i) hp.push_back(remaining[j]);
      std::vector<Time> responses;
      bool ok = true;
      for (Level l = 1; l <= cand->criticality && ok; ++l) {
        const auto r = wcrt(*cand, hp, l, platform.processors, opts);
        ok = r.response.has_value() && *r.response <= cand->deadline;
        if (ok) responses.push_back(*r.response);
      }
      if (!ok) continue;
      result.wcrt.entries[cand->id] = std::move(responses);
      lowest_first.push_back(cand->id);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
      placed = true;
      break;
    }
    if (!placed) {
      result.verdict = Verdict::Unschedulable;
      for (const auto* t : remaining) result.witness.push_back(t->id);
      std::sort(result.witness.begin(), result.witness.end());
      break;
    }
  }
  result.priorities.order.assign(lowest_first.rbegin(), lowest_first.rend());
  return result;
}

AnalysisResult forced_assignment(const TaskSet& ts, const Platform& platform, const AnalysisOptions& opts) {
  std::vector<const MCTask*> order;
  for (const auto& t : ts.tasks) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return std::tie(a->deadline, a->id) < std::tie(b->deadline, b->id);
  });
  AnalysisResult result;
  std::vector<const MCTask*> hp;
  for (const MCTask* t : order) {
    std::vector<Time> responses;
    for (Level l = 1; l <= t->criticality; ++l) {
      const auto r = wcrt(*t, hp, l, platform.processors, opts);
      responses.push_back(r.response && *r.response <= t->deadline ? *r.response : t->deadline);
      if (!r.response || *r.response > t->deadline) result.verdict = Verdict::Unschedulable;
    }
    result.wcrt.entries[t->id] = std::move(responses);
    result.priorities.order.push_back(t->id);
    hp.push_back(t);
  }
  return result;
}

std::string analysis_report(const AnalysisResult& result, const TaskSet& ts) {
  nlohmann::ordered_json j;
  j["verdict"] = result.schedulable() ? "schedulable" : "unschedulable";
  // Ranks of an unschedulable set are the ones OPA had fixed at the lowest
  // priorities before it failed.
  const int offset = static_cast<int>(ts.tasks.size() - result.priorities.order.size());
  j["ranks"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.priorities.order.size(); ++i) {
    nlohmann::ordered_json r;
    r["rank"] = offset + static_cast<int>(i) + 1;
    r["task"] = result.priorities.order[i];
    j["ranks"].push_back(r);
  }
  j["wcrt"] = nlohmann::ordered_json::array();
  for (TaskId id : result.priorities.order) {
    const auto& task = ts.at(id);
    nlohmann::ordered_json row;
    row["task"] = id;
    row["D"] = task.deadline;
    row["L"] = task.criticality;
    row["R"] = result.wcrt.entries.at(id);
    j["wcrt"].push_back(row);
  }
  j["witness"] = result.witness;
  return j.dump(2) + "\n";
}

}  // namespace mcs
