#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "CLI11.hpp"
#include "mcs/experiment.hpp"

namespace mcs::cli {

namespace {

struct Refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  TasksetDocument doc;
  AnalysisResult analysis;
};

Loaded load(const std::string& path, bool cap, bool force) {
  Loaded l;
  l.doc = parse_taskset(read_file(path));
  const AnalysisOptions opts{cap};
  l.analysis = opa_assign(l.doc.tasks, l.doc.platform, opts);
  if (!l.analysis.schedulable()) {
    if (!force) throw Refused("task set is not schedulable (use --force to simulate anyway)");
    l.analysis = forced_assignment(l.doc.tasks, l.doc.platform, opts);
  }
  return l;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

void print_summary(std::ostream& out, const TraceMetrics& m) {
  out << "misses " << m.misses << " (highest criticality " << m.misses_hi << ")\n"
      << "rem-jobs completed " << m.rem_completed << ", dropped " << m.rem_dropped << "\n"
      << "tardiness mean " << fmt(m.mean_tardiness) << ", max " << m.max_tardiness << "\n"
      << "suspension delay mean " << fmt(m.mean_susp_delay) << " over " << m.suspensions.size() << " episode(s)\n"
      << "chain aborts " << m.chain_aborts << "\n";
  for (const auto& [id, st] : m.response)
    out << "task " << id << ": jobs " << st.count << ", response max " << st.max << ", mean " << fmt(st.mean) << "\n";
}

ExecModel exec_model_from(const std::string& name, Level level) {
  ExecModel em;
  em.level = level;
  if (name == "uniform")
    em.kind = ExecModel::Kind::Uniform;
  else if (name == "basic-random")
    em.kind = ExecModel::Kind::BasicRandom;
  else if (name == "overrun")
    em.kind = ExecModel::Kind::OverrunInjecting;
  else
    throw Error(ErrorCode::InvalidParameter, "unknown exec model \"" + name + "\"");
  return em;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed-criticality global fixed-priority analysis and simulation", "mcsched"};
  app.require_subcommand(1);

  bool no_cap = false;
  bool force = false;

  auto* analyze = app.add_subcommand("analyze", "Schedulability analysis and priority assignment");
  std::string a_taskset;
  analyze->add_option("taskset", a_taskset, "Task set file")->required();
  analyze->add_flag("--no-cap", no_cap, "Disable the interfering workload cap");

  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate one scenario and write the trace");
  std::string s_taskset, s_scenario, s_out = "-";
  std::uint64_t s_seed = 1;
  Time s_horizon = 0;
  std::string s_protocol = "drop";
  std::string s_order = "crit-edf";
  std::string s_exec = "uniform";
  Level s_level = 1;
  simulate_cmd->add_option("taskset", s_taskset, "Task set file")->required();
  auto* scen_opt = simulate_cmd->add_option("scenario", s_scenario, "Scenario file");
  auto* seed_opt = simulate_cmd->add_option("--seed", s_seed, "Generate the scenario from this seed");
  simulate_cmd->add_option("--horizon", s_horizon, "Horizon of a generated scenario (default 20 * max T)");
  simulate_cmd->add_option("--exec-model", s_exec, "uniform | basic-random | overrun");
  simulate_cmd->add_option("--overrun-level", s_level, "Level at which the overrun model overruns");
  simulate_cmd->add_option("--protocol", s_protocol, "drop | naive | wcet-reclaim | wcrt-simulate")
      ->check(CLI::IsMember({"drop", "naive", "wcet-reclaim", "wcrt-simulate"}));
  simulate_cmd->add_option("--rem-order", s_order, "crit-edf | edf | srpt")
      ->check(CLI::IsMember({"crit-edf", "edf", "srpt"}));
  simulate_cmd->add_option("--out", s_out, "Trace output file (default: standard output)");
  simulate_cmd->add_flag("--force", force, "Simulate an unschedulable task set");
  simulate_cmd->add_flag("--no-cap", no_cap, "Disable the interfering workload cap");
  scen_opt->excludes(seed_opt);

  auto* check = app.add_subcommand("check", "Run every trace checker");
  std::string c_trace, c_taskset, c_scenario;
  check->add_option("trace", c_trace, "Trace file (JSON lines)")->required();
  check->add_option("taskset", c_taskset, "Task set file")->required();
  check->add_option("--scenario", c_scenario, "Scenario file, enables the periodicity check");
  check->add_flag("--no-cap", no_cap, "Disable the interfering workload cap");

  auto* experiment = app.add_subcommand("experiment", "Batch simulation and checking, CSV summary");
  std::string e_spec;
  unsigned e_threads = 0;
  experiment->add_option("spec", e_spec, "Experiment description (JSON)")->required();
  experiment->add_option("--threads", e_threads, "Worker threads (0: all cores)");

  auto* gen_ts = app.add_subcommand("gen-taskset", "Generate a random task set");
  GenParams gp;
  std::string g_out = "-";
  gen_ts->add_option("--n", gp.n, "Number of tasks");
  gen_ts->add_option("--processors", gp.processors, "Processors");
  gen_ts->add_option("--levels", gp.levels, "Criticality levels");
  gen_ts->add_option("--utilization", gp.utilization, "Target sum of C(1) / T");
  gen_ts->add_option("--period-min", gp.period_min, "Smallest period");
  gen_ts->add_option("--period-max", gp.period_max, "Largest period");
  gen_ts->add_option("--deadline-ratio", gp.deadline_ratio, "Lower bound of D / T");
  gen_ts->add_option("--wcet-factor", gp.wcet_factor, "WCET growth per level");
  gen_ts->add_option("--seed", gp.seed, "Seed");
  gen_ts->add_option("--out", g_out, "Output file (default: standard output)");

  auto* gen_sc = app.add_subcommand("gen-scenario", "Generate a random scenario for a task set");
  std::string gs_taskset, gs_out = "-", gs_exec = "uniform";
  Time gs_horizon = 0;
  std::uint64_t gs_seed = 1;
  Level gs_level = 1;
  int gs_dmcr = 0;
  gen_sc->add_option("taskset", gs_taskset, "Task set file")->required();
  gen_sc->add_option("--horizon", gs_horizon, "Horizon (default 20 * max T)");
  gen_sc->add_option("--seed", gs_seed, "Seed");
  gen_sc->add_option("--exec-model", gs_exec, "uniform | basic-random | overrun");
  gen_sc->add_option("--overrun-level", gs_level, "Level at which the overrun model overruns");
  gen_sc->add_option("--dmcr", gs_dmcr, "Number of random DMCR requests");
  gen_sc->add_option("--out", gs_out, "Output file (default: standard output)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) {
      const auto doc = parse_taskset(read_file(a_taskset));
      const auto res = opa_assign(doc.tasks, doc.platform, AnalysisOptions{!no_cap});
      out << analysis_report(res, doc.tasks);
      return res.schedulable() ? kOk : kViolation;
    }
    if (*simulate_cmd) {
      const Loaded l = load(s_taskset, !no_cap, force);
      Scenario sc;
      if (!s_scenario.empty()) {
        sc = parse_scenario(read_file(s_scenario), l.doc.tasks);
      } else {
        const Time h = s_horizon > 0 ? s_horizon : 20 * l.doc.tasks.max_period();
        sc = gen_scenario(l.doc.tasks, h, s_seed, exec_model_from(s_exec, s_level));
      }
      const ProtocolConfig cfg{*protocol_from_string(s_protocol), *rem_order_from_string(s_order), !no_cap};
      const Trace trace =
          mcs::simulate(l.doc.tasks, l.doc.platform, l.analysis.priorities, l.analysis.wcrt, sc, cfg);
      const bool to_stdout = s_out.empty() || s_out == "-";
      emit(s_out, to_jsonl(trace), out);
      print_summary(to_stdout ? err : out, metrics(trace));
      return kOk;
    }
    if (*check) {
      const Loaded l = load(c_taskset, !no_cap, true);
      const Trace trace = parse_jsonl(read_file(c_trace));
      std::optional<Scenario> sc;
      if (!c_scenario.empty()) sc = parse_scenario(read_file(c_scenario), l.doc.tasks);
      const TraceIndex idx = index_trace(trace);
      const CheckReport rep =
          check_all(idx, l.doc.tasks, l.analysis.priorities, l.analysis.wcrt, sc ? &*sc : nullptr);
      out << format_report(rep);
      return rep.ok() ? kOk : kViolation;
    }
    if (*experiment) {
      const std::filesystem::path spec_path = e_spec;
      ExperimentSpec spec = parse_experiment_spec(read_file(spec_path), spec_path.parent_path());
      if (force) spec.force = true;
      ExperimentResult res;
      try {
        res = run_experiment(spec, e_threads);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Infeasible && !spec.generate) throw Refused(e.what());
        throw;
      }
      const std::string csv = experiment_csv(res);
      if (spec.output.empty()) {
        out << csv;
      } else {
        std::filesystem::create_directories(spec.output);
        write_file(std::filesystem::path(spec.output) / "results.csv", csv);
        out << "wrote " << res.rows.size() << " rows to " << (std::filesystem::path(spec.output) / "results.csv").string()
            << "\n";
      }
      if (!res.report.ok()) {
        err << format_report(res.report);
        return kViolation;
      }
      return kOk;
    }
    if (*gen_ts) {
      const TaskSet ts = gen_taskset(gp);
      emit(g_out, serialize_taskset({ts, Platform{gp.processors}}), out);
      return kOk;
    }
    if (*gen_sc) {
      const auto doc = parse_taskset(read_file(gs_taskset));
      const Time h = gs_horizon > 0 ? gs_horizon : 20 * doc.tasks.max_period();
      DmcrPlan plan;
      if (gs_dmcr > 0) {
        plan.kind = DmcrPlan::Kind::Random;
        plan.count = gs_dmcr;
      }
      const Scenario sc = gen_scenario(doc.tasks, h, gs_seed, exec_model_from(gs_exec, gs_level), plan);
      emit(gs_out, serialize_scenario(sc), out);
      return kOk;
    }
  } catch (const Refused& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& issue : e.issues()) err << "  " << to_string(issue.code) << ": " << issue.message << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mcs::cli
