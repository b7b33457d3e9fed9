#include "mcs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"

namespace mcs {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::SyntaxError, "experiment: " + msg); }

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    bad(std::string("field \"") + key + "\" has the wrong type");
  }
}

GenParams parse_gen(const json& j, std::uint64_t seed) {
  if (!j.is_object()) bad("\"generate\" must be an object");
  GenParams gp;
  gp.n = get_or(j, "n", gp.n);
  gp.processors = get_or(j, "processors", gp.processors);
  gp.levels = get_or(j, "levels", gp.levels);
  gp.utilization = get_or(j, "utilization", gp.utilization);
  gp.period_min = get_or(j, "period_min", gp.period_min);
  gp.period_max = get_or(j, "period_max", gp.period_max);
  gp.deadline_ratio = get_or(j, "deadline_ratio", gp.deadline_ratio);
  gp.wcet_factor = get_or(j, "wcet_factor", gp.wcet_factor);
  gp.crit_weights = get_or(j, "crit_weights", gp.crit_weights);
  gp.seed = get_or(j, "seed", seed);
  return gp;
}

ExecModel parse_exec(const json& j) {
  ExecModel em;
  const std::string kind = j.is_string() ? j.get<std::string>() : get_or<std::string>(j, "kind", "uniform");
  if (kind == "uniform")
    em.kind = ExecModel::Kind::Uniform;
  else if (kind == "basic-random")
    em.kind = ExecModel::Kind::BasicRandom;
  else if (kind == "overrun")
    em.kind = ExecModel::Kind::OverrunInjecting;
  else
    bad("unknown exec_model \"" + kind + "\"");
  if (j.is_object()) em.level = get_or(j, "level", em.level);
  return em;
}

DmcrPlan parse_dmcr(const json& j) {
  DmcrPlan plan;
  if (!j.is_object()) bad("\"dmcr\" must be an object");
  const auto kind = get_or<std::string>(j, "kind", "none");
  if (kind == "none") {
    plan.kind = DmcrPlan::Kind::None;
  } else if (kind == "fixed") {
    plan.kind = DmcrPlan::Kind::Fixed;
    for (const auto& r : get_or(j, "requests", json::array()))
      plan.fixed.push_back({get_or<Time>(r, "time", 0), get_or<Level>(r, "target_level", 1)});
  } else if (kind == "random") {
    plan.kind = DmcrPlan::Kind::Random;
    plan.count = get_or(j, "count", plan.count);
  } else if (kind == "after-overrun") {
    plan.kind = DmcrPlan::Kind::AfterOverrun;
    plan.delay = get_or(j, "delay", plan.delay);
    plan.target = get_or(j, "target_level", plan.target);
  } else {
    bad("unknown dmcr kind \"" + kind + "\"");
  }
  return plan;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

}  // namespace

ExperimentSpec parse_experiment_spec(const std::string& text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  ExperimentSpec spec;
  spec.seed = get_or<std::uint64_t>(j, "seed", spec.seed);
  if (auto it = j.find("taskset"); it != j.end()) {
    if (it->is_string()) {
      std::filesystem::path p = it->get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      spec.taskset = parse_taskset(read_file(p));
    } else {
      spec.taskset = parse_taskset(it->dump());
    }
  } else if (auto g = j.find("generate"); g != j.end()) {
    spec.generate = parse_gen(*g, spec.seed);
  } else {
    bad("needs \"taskset\" or \"generate\"");
  }
  spec.scenarios = get_or(j, "scenarios", spec.scenarios);
  if (spec.scenarios < 1) throw Error(ErrorCode::InvalidParameter, "experiment: scenarios must be >= 1");
  for (const auto& name : get_or(j, "protocols", std::vector<std::string>{"drop", "naive", "wcet-reclaim", "wcrt-simulate"})) {
    auto p = protocol_from_string(name);
    if (!p) bad("unknown protocol \"" + name + "\"");
    spec.protocols.push_back(*p);
  }
  if (spec.protocols.empty()) throw Error(ErrorCode::InvalidParameter, "experiment: at least one protocol");
  std::sort(spec.protocols.begin(), spec.protocols.end());
  spec.protocols.erase(std::unique(spec.protocols.begin(), spec.protocols.end()), spec.protocols.end());
  spec.horizon = get_or(j, "horizon", spec.horizon);
  if (spec.horizon < 0) throw Error(ErrorCode::InvalidParameter, "experiment: negative horizon");
  spec.output = get_or<std::string>(j, "output", "");
  if (!spec.output.empty() && std::filesystem::path(spec.output).is_relative())
    spec.output = (base_dir / spec.output).string();
  const auto order = get_or<std::string>(j, "rem_order", "crit-edf");
  if (auto o = rem_order_from_string(order))
    spec.rem_order = *o;
  else
    bad("unknown rem_order \"" + order + "\"");
  if (auto it = j.find("exec_model"); it != j.end()) spec.exec_model = parse_exec(*it);
  if (auto it = j.find("dmcr"); it != j.end()) spec.dmcr = parse_dmcr(*it);
  spec.cap = get_or(j, "cap", spec.cap);
  spec.force = get_or(j, "force", spec.force);
  return spec;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned threads) {
  ExperimentResult res;
  if (spec.taskset) {
    res.tasks = spec.taskset->tasks;
    res.platform = spec.taskset->platform;
  } else if (spec.generate) {
    res.tasks = gen_taskset(*spec.generate);
    res.platform.processors = spec.generate->processors;
  } else {
    throw Error(ErrorCode::InvalidParameter, "experiment has no task set");
  }
  const AnalysisOptions opts{spec.cap};
  res.analysis = opa_assign(res.tasks, res.platform, opts);
  if (!res.analysis.schedulable()) {
    if (!spec.force) throw Error(ErrorCode::Infeasible, "task set is not schedulable");
    res.analysis = forced_assignment(res.tasks, res.platform, opts);
  }
  res.horizon = spec.horizon > 0 ? spec.horizon : 20 * res.tasks.max_period();

  const std::size_t np = spec.protocols.size();
  const std::size_t total = static_cast<std::size_t>(spec.scenarios) * np;
  std::vector<ExperimentRow> rows(total);
  std::vector<CheckReport> reports(static_cast<std::size_t>(spec.scenarios) * np);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (;;) {
      const std::size_t s = next.fetch_add(1);
      if (s >= static_cast<std::size_t>(spec.scenarios)) return;
      try {
        const std::uint64_t seed = derive_seed(spec.seed, s);
        const Scenario sc = gen_scenario(res.tasks, res.horizon, seed, spec.exec_model, spec.dmcr);
        for (std::size_t p = 0; p < np; ++p) {
          ProtocolConfig cfg{spec.protocols[p], spec.rem_order, spec.cap};
          const Trace trace = simulate(res.tasks, res.platform, res.analysis.priorities, res.analysis.wcrt, sc, cfg);
          const TraceIndex idx = index_trace(trace);
          CheckReport rep = check_all(idx, res.tasks, res.analysis.priorities, res.analysis.wcrt, &sc);
          const TraceMetrics m = metrics(idx);
          ExperimentRow& row = rows[p * static_cast<std::size_t>(spec.scenarios) + s];
          row.protocol = spec.protocols[p];
          row.seed = seed;
          row.scenario_id = static_cast<int>(s);
          row.misses_hi = m.misses_hi;
          row.misses_enabled = m.misses;
          row.rem_completed = m.rem_completed;
          row.rem_dropped = m.rem_dropped;
          row.mean_tardiness = m.mean_tardiness;
          row.max_tardiness = m.max_tardiness;
          row.mean_susp_delay = m.mean_susp_delay;
          row.chain_aborts = m.chain_aborts;
          row.violations = rep.findings.size();
          for (const auto& o : m.rem_jobs) {
            if (o.dropped) continue;
            row.rem_response_sum += o.finish.value_or(res.horizon) - o.release;
            ++row.rem_kept;
          }
          for (auto& f : rep.findings) f.detail += " (scenario " + std::to_string(s) + ", " +
                                                   std::string(to_string(spec.protocols[p])) + ")";
          reports[p * static_cast<std::size_t>(spec.scenarios) + s] = std::move(rep);
        }
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = static_cast<std::size_t>(spec.scenarios);
        return;
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.scenarios));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  res.rows = std::move(rows);
  for (const auto& r : reports) res.report.merge(r);
  return res;
}

std::string experiment_csv(const ExperimentResult& result) {
  std::string out =
      "protocol,seed,scenario_id,misses_hi,misses_enabled,rem_completed,rem_dropped,mean_tardiness,max_tardiness,"
      "mean_susp_delay,chain_aborts\n";
  for (const auto& r : result.rows) {
    out += std::string(to_string(r.protocol)) + ',' + std::to_string(r.seed) + ',' + std::to_string(r.scenario_id) +
           ',' + std::to_string(r.misses_hi) + ',' + std::to_string(r.misses_enabled) + ',' +
           std::to_string(r.rem_completed) + ',' + std::to_string(r.rem_dropped) + ',' + fmt(r.mean_tardiness) +
           ',' + std::to_string(r.max_tardiness) + ',' + fmt(r.mean_susp_delay) + ',' +
           std::to_string(r.chain_aborts) + '\n';
  }
  return out;
}

}  // namespace mcs
