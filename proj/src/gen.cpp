#include "mcs/gen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mcs {

Time Rng::uniform_int(Time lo, Time hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidParameter, "empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<Time>(next());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return lo + static_cast<Time>(x % range);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::vector<double> uunifast(Rng& rng, int n, double total) {
  std::vector<double> u(static_cast<std::size_t>(n));
  double sum = total;
  for (int i = 0; i + 1 < n; ++i) {
    const double next = sum * std::pow(rng.uniform01(), 1.0 / static_cast<double>(n - i - 1));
    u[static_cast<std::size_t>(i)] = sum - next;
    sum = next;
  }
  u.back() = sum;
  return u;
}

double util(const std::vector<Time>& c, const std::vector<Time>& t) {
  double s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<double>(c[i]) / static_cast<double>(t[i]);
  return s;
}

// Nudges C(1) values one unit at a time towards the target utilization.
bool adjust(std::vector<Time>& c, const std::vector<Time>& t, double target) {
  for (int step = 0; step < 1000; ++step) {
    const double s = util(c, t);
    if (std::abs(s - target) <= 0.01 - 1e-12) return true;
    const int dir = s < target ? 1 : -1;
    std::size_t best = c.size();
    double best_err = std::abs(s - target);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Time nc = c[i] + dir;
      if (nc < 1 || nc > t[i]) continue;
      const double err = std::abs(s + dir / static_cast<double>(t[i]) - target);
      if (err < best_err) {
        best_err = err;
        best = i;
      }
    }
    if (best == c.size()) return false;
    c[best] += dir;
  }
  return false;
}

Level draw_crit(Rng& rng, const GenParams& gp) {
  if (gp.crit_weights.empty()) return static_cast<Level>(rng.uniform_int(1, gp.levels));
  const double total = std::accumulate(gp.crit_weights.begin(), gp.crit_weights.end(), 0.0);
  double x = rng.uniform01() * total;
  for (std::size_t i = 0; i < gp.crit_weights.size(); ++i) {
    x -= gp.crit_weights[i];
    if (x < 0) return static_cast<Level>(i + 1);
  }
  return static_cast<Level>(gp.crit_weights.size());
}

}  // namespace

TaskSet gen_taskset(const GenParams& gp) {
  if (gp.n < 1 || gp.processors < 1 || gp.levels < 1)
    throw Error(ErrorCode::InvalidParameter, "n, processors and levels must be positive");
  if (gp.utilization <= 0 || gp.utilization > gp.processors || gp.utilization > gp.n)
    throw Error(ErrorCode::InvalidParameter, "utilization must lie in (0, min(m, n)]");
  if (gp.period_min < 4 || gp.period_max > 1000 || gp.period_min > gp.period_max)
    throw Error(ErrorCode::InvalidParameter, "period range must lie within [4, 1000]");
  if (gp.deadline_ratio <= 0 || gp.deadline_ratio > 1)
    throw Error(ErrorCode::InvalidParameter, "deadline ratio must lie in (0, 1]");
  if (gp.wcet_factor < 1) throw Error(ErrorCode::InvalidParameter, "WCET factor below 1");
  if (!gp.crit_weights.empty()) {
    const bool bad = gp.crit_weights.size() != static_cast<std::size_t>(gp.levels) ||
                     std::any_of(gp.crit_weights.begin(), gp.crit_weights.end(), [](double w) { return w < 0; }) ||
                     std::accumulate(gp.crit_weights.begin(), gp.crit_weights.end(), 0.0) <= 0;
    if (bad) throw Error(ErrorCode::InvalidParameter, "criticality weights must be one non-negative weight per level");
  }

  Rng rng(gp.seed);
  const auto n = static_cast<std::size_t>(gp.n);
  for (int attempt = 0; attempt < gp.max_retries; ++attempt) {
    const auto u = uunifast(rng, gp.n, gp.utilization);
    if (std::any_of(u.begin(), u.end(), [](double x) { return x > 1.0; })) continue;
    std::vector<Time> period(n), c1(n);
    for (std::size_t i = 0; i < n; ++i) {
      period[i] = rng.uniform_int(gp.period_min, gp.period_max);
      c1[i] = std::clamp<Time>(std::llround(u[i] * static_cast<double>(period[i])), 1, period[i]);
    }
    if (!adjust(c1, period, gp.utilization)) continue;

    TaskSet ts;
    ts.levels = gp.levels;
    for (std::size_t i = 0; i < n; ++i) {
      MCTask t;
      t.id = static_cast<TaskId>(i + 1);
      t.period = period[i];
      const auto lo = std::max<Time>(c1[i], static_cast<Time>(std::ceil(gp.deadline_ratio * period[i] - 1e-9)));
      t.deadline = rng.uniform_int(std::min(lo, period[i]), period[i]);
      t.criticality = draw_crit(rng, gp);
      t.wcet.push_back(c1[i]);
      for (Level l = 2; l <= t.criticality; ++l) {
        const auto next = static_cast<Time>(std::ceil(gp.wcet_factor * static_cast<double>(t.wcet.back()) - 1e-9));
        t.wcet.push_back(std::min(next, t.deadline));
      }
      ts.tasks.push_back(std::move(t));
    }
    return validate_taskset(ts, Platform{gp.processors});
  }
  throw Error(ErrorCode::Infeasible, "no task set within utilization tolerance after " +
                                         std::to_string(gp.max_retries) + " attempts");
}

Scenario gen_scenario(const TaskSet& ts, Time horizon, std::uint64_t seed, const ExecModel& exec,
                      const DmcrPlan& dmcr) {
  Scenario sc;
  sc.horizon = std::max<Time>(horizon, 0);
  Rng rng(seed);
  const Level quiet = 1;
  for (const auto& task : ts.tasks) {
    TaskArrivals ta;
    const Time period = task.period;
    Time r = rng.uniform_int(0, period - 1);
    while (r < sc.horizon) {
      ta.arrivals.push_back(r);
      Time gap = period;
      if (rng.bernoulli(0.5)) gap += rng.uniform_int(1, std::max<Time>(1, period / 2));
      r += gap;
    }
    const Time cmax = effective_wcet(task, task.criticality, ts.levels);
    for (std::size_t k = 0; k < ta.arrivals.size(); ++k) {
      switch (exec.kind) {
        case ExecModel::Kind::Uniform:
          ta.exec_times.push_back(rng.uniform_int(1, cmax));
          break;
        case ExecModel::Kind::BasicRandom: {
          const auto l = static_cast<Level>(rng.uniform_int(1, task.criticality));
          ta.exec_times.push_back(effective_wcet(task, l, ts.levels));
          break;
        }
        case ExecModel::Kind::OverrunInjecting:
          ta.exec_times.push_back(rng.uniform_int(1, effective_wcet(task, quiet, ts.levels)));
          break;
      }
    }
    if (!ta.arrivals.empty()) sc.tasks.emplace(task.id, std::move(ta));
  }

  Time injected_at = 0;
  if (exec.kind == ExecModel::Kind::OverrunInjecting) {
    std::vector<const MCTask*> eligible;
    for (const auto& task : ts.tasks) {
      if (task.criticality <= exec.level || !sc.tasks.count(task.id)) continue;
      if (effective_wcet(task, exec.level, ts.levels) < effective_wcet(task, task.criticality, ts.levels))
        eligible.push_back(&task);
    }
    if (!eligible.empty()) {
      const MCTask& task = *eligible[static_cast<std::size_t>(rng.uniform_int(0, static_cast<Time>(eligible.size()) - 1))];
      auto& ta = sc.tasks.at(task.id);
      ta.exec_times[0] = rng.uniform_int(effective_wcet(task, exec.level, ts.levels) + 1,
                                         effective_wcet(task, task.criticality, ts.levels));
      injected_at = ta.arrivals[0];
    }
  }

  switch (dmcr.kind) {
    case DmcrPlan::Kind::None:
      break;
    case DmcrPlan::Kind::Fixed:
      sc.dmcr_requests = dmcr.fixed;
      break;
    case DmcrPlan::Kind::Random:
      if (ts.levels > 1 && sc.horizon > 0)
        for (int i = 0; i < dmcr.count; ++i) {
          const Time t = rng.uniform_int(0, sc.horizon - 1);
          const auto target = static_cast<Level>(rng.uniform_int(1, ts.levels - 1));
          sc.dmcr_requests.push_back({t, target});
        }
      break;
    case DmcrPlan::Kind::AfterOverrun:
      if (injected_at + dmcr.delay < sc.horizon) sc.dmcr_requests.push_back({injected_at + dmcr.delay, dmcr.target});
      break;
  }
  std::stable_sort(sc.dmcr_requests.begin(), sc.dmcr_requests.end(),
                   [](const DmcrRequest& a, const DmcrRequest& b) { return a.time < b.time; });
  return sc;
}

}  // namespace mcs
