// Property-based acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mcs/experiment.hpp"

using namespace mcs;

namespace {

constexpr ImcrProtocol kProtocols[] = {ImcrProtocol::Drop, ImcrProtocol::Naive, ImcrProtocol::WcetReclaim,
                                       ImcrProtocol::WcrtSimulate};

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;  // first few failures

  void fail(const std::string& what) {
    pass = false;
    if (notes.size() < 8) notes.push_back(what);
  }
};

std::string describe(const Finding& f) {
  std::string s = f.check + "/" + f.kind + " t=" + std::to_string(f.t);
  if (f.task) s += " task " + std::to_string(*f.task);
  if (f.k) s += " job " + std::to_string(*f.k);
  if (!f.detail.empty()) s += " " + f.detail;
  return s;
}

ProtocolConfig config(ImcrProtocol p) {
  ProtocolConfig cfg;
  cfg.imcr_protocol = p;
  return cfg;
}

// Uniprocessor response time by the classical ceiling recurrence.
std::optional<Time> classical_rta(Time c, Time d, const std::vector<std::pair<Time, Time>>& hp) {
  Time r = c;
  while (true) {
    Time next = c;
    for (auto [t, cj] : hp) next += (r + t - 1) / t * cj;
    if (next > d) return std::nullopt;
    if (next == r) return r;
    r = next;
  }
}

// Oracle dominance over 200 random small tasks and every window up to 40.
Outcome ac1() {
  Outcome out;
  Rng rng(derive_seed(2024, 1));
  std::size_t comparisons = 0;
  for (int n = 0; n < 200; ++n) {
    const Level levels = static_cast<Level>(rng.uniform_int(1, 3));
    MCTask t;
    t.id = 1;
    t.period = rng.uniform_int(1, 12);
    t.deadline = rng.uniform_int(1, t.period);
    t.criticality = static_cast<Level>(rng.uniform_int(1, levels));
    Time c = rng.uniform_int(1, t.deadline);
    for (Level l = 1; l <= t.criticality; ++l) {
      t.wcet.push_back(c);
      c = std::min(t.deadline, c + rng.uniform_int(0, 2));
    }
    TaskSet ts{levels, {t}};
    ts = validate_taskset(ts, Platform{1});
    const MCTask& tj = ts.tasks[0];
    for (Level l = 1; l <= levels; ++l) {
      for (Time delta = 0; delta <= 40; ++delta) {
        const Time nc = workload_nc(tj, delta, l), ci = workload_ci(tj, delta, l);
        const Time bnc = brute_force_workload(tj, delta, l, false), bci = brute_force_workload(tj, delta, l, true);
        comparisons += 2;
        if (nc < bnc || ci < bci)
          out.fail("T=" + std::to_string(tj.period) + " D=" + std::to_string(tj.deadline) + " C=" +
                   std::to_string(effective_wcet(tj, l, levels)) + " delta=" + std::to_string(delta) + ": nc " +
                   std::to_string(nc) + "/" + std::to_string(bnc) + " ci " + std::to_string(ci) + "/" +
                   std::to_string(bci));
      }
    }
  }
  out.summary = std::to_string(comparisons) + " comparisons";
  return out;
}

// Single processor: the multiprocessor bound equals the classical recurrence.
Outcome ac2() {
  Outcome out;
  struct Case {
    std::vector<MCTask> tasks;  // priority order
    Level levels;
  };
  const std::vector<Case> cases = {
      {{{1, 10, 10, 1, {2}}, {2, 10, 10, 1, {3}}}, 1},
      {{{1, 5, 5, 1, {1}}, {2, 8, 8, 1, {2}}, {3, 20, 20, 1, {5}}}, 1},
      {{{1, 7, 7, 2, {1, 2}}, {2, 12, 12, 1, {3}}, {3, 40, 40, 2, {4, 9}}, {4, 60, 60, 2, {2, 3}}}, 2},
  };
  std::size_t compared = 0;
  for (std::size_t ci = 0; ci < cases.size(); ++ci) {
    const auto ts = validate_taskset(TaskSet{cases[ci].levels, cases[ci].tasks}, Platform{1});
    std::vector<const MCTask*> hp;
    for (const auto& t : ts.tasks) {
      for (Level l = 1; l <= t.criticality; ++l) {
        std::vector<std::pair<Time, Time>> classical;
        for (auto* j : hp) classical.push_back({j->period, effective_wcet(*j, std::min(l, j->criticality), ts.levels)});
        const auto want = classical_rta(effective_wcet(t, l, ts.levels), t.deadline, classical);
        const auto got = wcrt(t, hp, l, 1).response;
        ++compared;
        if (got != want)
          out.fail("case " + std::to_string(ci + 1) + " task " + std::to_string(t.id) + " level " + std::to_string(l));
      }
      hp.push_back(&t);
    }
    if (ci == 0) {
      const std::vector<const MCTask*> top{&ts.tasks[0]};
      if (wcrt(ts.tasks[1], top, 1, 1).response != 5) out.fail("R2(1) != 5");
    }
  }
  out.summary = std::to_string(compared) + " response times";
  return out;
}

struct CorpusSet {
  TaskSet ts;
  Platform platform;
  AnalysisResult analysis;
  std::uint64_t seed;
};

// Schedulable random sets: n <= 8, m in {2, 3}, up to 4 levels, periods 5..40.
std::vector<CorpusSet> sweep_corpus(std::size_t count) {
  std::vector<CorpusSet> out;
  for (std::uint64_t i = 1; out.size() < count; ++i) {
    Rng r(derive_seed(31337, i));
    GenParams gp;
    gp.seed = derive_seed(4242, i);
    gp.n = static_cast<int>(r.uniform_int(2, 8));
    gp.processors = static_cast<int>(r.uniform_int(2, 3));
    gp.levels = static_cast<Level>(r.uniform_int(1, 4));
    gp.period_min = 5;
    gp.period_max = 40;
    gp.deadline_ratio = r.bernoulli(0.5) ? 1.0 : 0.7;
    gp.utilization = std::min<double>(gp.n, gp.processors * (0.2 + 0.6 * r.uniform01()));
    TaskSet ts;
    try {
      ts = gen_taskset(gp);
    } catch (const Error&) {
      continue;
    }
    const Platform p{gp.processors};
    auto an = opa_assign(ts, p);
    if (!an.schedulable()) continue;
    out.push_back({std::move(ts), p, std::move(an), gp.seed});
  }
  return out;
}

struct SweepTotals {
  std::size_t runs = 0;
  std::size_t jobs_checked = 0;
  std::size_t feasibility = 0, periodicity = 0, response = 0, reclaim = 0;
  std::size_t response_checked = 0, response_spanning = 0, ghosts_checked = 0;
  std::vector<std::string> feas_notes, resp_notes, reclaim_notes;
  std::map<ImcrProtocol, std::pair<Time, std::size_t>> rem_response;  // sum, count
};

void note(std::vector<std::string>& notes, const std::string& s) {
  if (notes.size() < 8) notes.push_back(s);
}

// Criteria 3, 5, 6 and the data for 10 share these runs.
SweepTotals sweep(const std::vector<CorpusSet>& corpus, int scenarios) {
  SweepTotals tot;
  for (std::size_t si = 0; si < corpus.size(); ++si) {
    if (si % 50 == 0) std::fprintf(stderr, "sweep: %zu of %zu sets\n", si, corpus.size());
    const auto& cs = corpus[si];
    const Time h = 20 * cs.ts.max_period();
    for (int s = 0; s < scenarios; ++s) {
      ExecModel em;
      em.kind = static_cast<ExecModel::Kind>(s % 3);
      em.level = 1 + s % std::max(1, cs.ts.levels - 1);
      DmcrPlan dp;
      if (s % 2) {
        dp.kind = DmcrPlan::Kind::Random;
        dp.count = 2;
      }
      const auto sc = gen_scenario(cs.ts, h, derive_seed(cs.seed, static_cast<std::uint64_t>(s)), em, dp);
      for (auto prot : kProtocols) {
        const auto tr = simulate(cs.ts, cs.platform, cs.analysis.priorities, cs.analysis.wcrt, sc, config(prot));
        const auto idx = index_trace(tr);
        ++tot.runs;
        const std::string where = "set " + std::to_string(si) + " scenario " + std::to_string(s) + " " +
                                  std::string(to_string(prot)) + ": ";
        const auto feas = check_feasibility(idx, cs.ts);
        const auto per = check_periodicity(idx, cs.ts, sc);
        tot.jobs_checked += feas.checked;
        tot.feasibility += feas.findings.size();
        tot.periodicity += per.findings.size();
        for (const auto& f : feas.findings) note(tot.feas_notes, where + describe(f));
        for (const auto& f : per.findings) note(tot.feas_notes, where + describe(f));
        if (prot == ImcrProtocol::WcrtSimulate) {
          const auto rb = check_response_bounds(idx, cs.analysis.wcrt);
          tot.response += rb.findings.size();
          tot.response_checked += rb.checked;
          tot.response_spanning += rb.spanning;
          for (const auto& f : rb.findings) note(tot.resp_notes, where + describe(f));
        }
        if (prot == ImcrProtocol::WcetReclaim) {
          const auto ra = check_reclaim_accounting(idx, cs.ts, cs.analysis.wcrt);
          tot.reclaim += ra.findings.size();
          tot.ghosts_checked += ra.checked;
          for (const auto& f : ra.findings) note(tot.reclaim_notes, where + describe(f));
        }
        const auto m = metrics(idx);
        auto& acc = tot.rem_response[prot];
        for (const auto& o : m.rem_jobs) {
          if (o.dropped) continue;
          acc.first += o.finish.value_or(h) - o.release;
          ++acc.second;
        }
      }
    }
  }
  return tot;
}

// Every basic scenario of tiny sets, every protocol, every checker.
Outcome ac4() {
  Outcome out;
  std::size_t sets = 0, runs = 0, scenarios = 0;
  for (std::uint64_t i = 1; sets < 60; ++i) {
    Rng r(derive_seed(777, i));
    GenParams gp;
    gp.seed = derive_seed(778, i);
    gp.n = static_cast<int>(r.uniform_int(1, 3));
    gp.processors = static_cast<int>(r.uniform_int(1, std::min(3, gp.n)));
    gp.levels = static_cast<Level>(r.uniform_int(2, 3));
    gp.period_min = 4;
    gp.period_max = 8;
    gp.utilization = std::min<double>(gp.n, gp.processors * (0.4 + 0.5 * r.uniform01()));
    TaskSet ts;
    try {
      ts = gen_taskset(gp);
    } catch (const Error&) {
      continue;
    }
    const Platform p{gp.processors};
    const auto an = opa_assign(ts, p);
    if (!an.schedulable()) continue;
    const Time h = 3 * ts.max_period();
    const auto base = gen_scenario(ts, h, derive_seed(779, i));
    std::map<TaskId, std::vector<Time>> arrivals;
    std::size_t jobs = 0;
    double product = 1;
    for (const auto& [id, ta] : base.tasks) {
      arrivals[id] = ta.arrivals;
      jobs += ta.arrivals.size();
      product *= std::pow(ts.at(id).criticality, static_cast<double>(ta.arrivals.size()));
    }
    if (jobs == 0 || jobs > 12 || product > 5000) continue;
    ++sets;
    BasicScenarioEnumerator en(ts, h, arrivals);
    if (en.count() != static_cast<std::size_t>(product)) out.fail("enumeration count for set " + std::to_string(i));
    Scenario sc;
    while (en.next(sc)) {
      ++scenarios;
      for (int d = 0; d < 2; ++d) {
        sc.dmcr_requests.clear();
        if (d) sc.dmcr_requests = {{h / 3, 1}};
        for (auto prot : kProtocols) {
          const auto tr = simulate(ts, p, an.priorities, an.wcrt, sc, config(prot));
          ++runs;
          const auto rep = check_all(index_trace(tr), ts, an.priorities, an.wcrt, &sc);
          for (const auto& f : rep.findings)
            out.fail("set " + std::to_string(i) + " " + std::string(to_string(prot)) + ": " + describe(f));
        }
      }
    }
  }
  out.summary = std::to_string(sets) + " sets, " + std::to_string(scenarios) + " basic scenarios, " +
                std::to_string(runs) + " runs";
  return out;
}

// Overrun, quiet high-criticality demand, then a decreasing request; plus
// runs where a second overrun lands inside the chain.
Outcome ac7() {
  Outcome out;
  std::size_t runs = 0, reenabled = 0, aborted = 0, injected = 0, scenarios = 0;
  std::uint64_t i = 0;
  while (scenarios < 240) {
    ++i;
    Rng r(derive_seed(5150, i));
    GenParams gp;
    gp.seed = derive_seed(5151, i);
    gp.n = static_cast<int>(r.uniform_int(3, 8));
    gp.processors = static_cast<int>(r.uniform_int(1, 3));
    gp.levels = static_cast<Level>(r.uniform_int(2, 4));
    gp.period_min = 5;
    gp.period_max = 40;
    gp.utilization = std::min<double>(gp.n, gp.processors * (0.2 + 0.5 * r.uniform01()));
    TaskSet ts;
    try {
      ts = gen_taskset(gp);
    } catch (const Error&) {
      continue;
    }
    const Platform p{gp.processors};
    const auto an = opa_assign(ts, p);
    if (!an.schedulable()) continue;
    bool eligible = false;
    for (const auto& t : ts.tasks) eligible = eligible || t.wcet[0] < t.wcet[static_cast<std::size_t>(ts.levels - 1)];
    if (!eligible) continue;
    const Time h = 20 * ts.max_period();
    DmcrPlan dp;
    dp.kind = DmcrPlan::Kind::AfterOverrun;
    dp.delay = r.uniform_int(0, 2 * ts.max_period());
    dp.target = 1;
    const auto sc = gen_scenario(ts, h, derive_seed(5152, i), ExecModel{ExecModel::Kind::OverrunInjecting, 1}, dp);
    ++scenarios;

    auto run = [&](const Scenario& s, ImcrProtocol prot) {
      const auto tr = simulate(ts, p, an.priorities, an.wcrt, s, config(prot));
      ++runs;
      const auto idx = index_trace(tr);
      auto rep = check_dmcr(idx, ts);
      rep.merge(check_feasibility(idx, ts));
      for (const auto& f : rep.findings)
        out.fail("scenario " + std::to_string(i) + " " + std::string(to_string(prot)) + ": " + describe(f));
      bool open = false, crossed = false;
      for (const auto& ev : idx.mode_events) {
        if (ev.kind == EventKind::DmcrRequested && ev.status == "started") open = true, crossed = false;
        if (ev.kind == EventKind::BudgetExceeded && open) crossed = true;
        if (ev.kind == EventKind::ChainAborted) {
          ++aborted;
          if (!crossed) out.fail("abort without overrun, scenario " + std::to_string(i));
          open = crossed = false;
        }
        if (ev.kind == EventKind::ReEnabled) {
          ++reenabled;
          if (crossed) out.fail("re-enabled across an overrun, scenario " + std::to_string(i));
          open = crossed = false;
        }
      }
      return tr;
    };

    for (auto prot : kProtocols) {
      const auto tr = run(sc, prot);
      // Inject a second overrun: a top-criticality job released inside the chain
      // runs to C(L), which crosses the chain when the level is still raised.
      std::optional<Time> started, ended;
      for (const auto& ev : tr.events) {
        if (ev.kind == EventKind::DmcrRequested && ev.status == "started" && !started) started = ev.t;
        if (started && !ended && (ev.kind == EventKind::ReEnabled || ev.kind == EventKind::ChainAborted)) ended = ev.t;
      }
      if (!started) continue;
      Scenario faulty = sc;
      bool changed = false;
      for (auto& [id, ta] : faulty.tasks) {
        const MCTask& t = ts.at(id);
        if (t.criticality != ts.levels || t.wcet[0] == t.wcet.back()) continue;
        for (std::size_t k = 0; k < ta.arrivals.size() && !changed; ++k) {
          if (ta.arrivals[k] >= *started && (!ended || ta.arrivals[k] < *ended)) {
            ta.exec_times[k] = t.wcet.back();
            changed = true;
          }
        }
        if (changed) break;
      }
      if (!changed) continue;
      ++injected;
      run(faulty, prot);
    }
  }
  if (reenabled < 100) out.fail("only " + std::to_string(reenabled) + " re-enables observed");
  if (aborted < 20) out.fail("only " + std::to_string(aborted) + " aborted chains observed");
  out.summary = std::to_string(scenarios) + " scenarios, " + std::to_string(runs) + " runs, " +
                std::to_string(reenabled) + " re-enables, " + std::to_string(injected) + " injected, " +
                std::to_string(aborted) + " aborts";
  return out;
}

// The verdict of the priority assignment ignores candidate order.
Outcome ac8() {
  Outcome out;
  std::size_t schedulable = 0, sets = 0;
  for (std::uint64_t i = 1; sets < 100; ++i) {
    Rng r(derive_seed(8080, i));
    GenParams gp;
    gp.seed = derive_seed(8081, i);
    gp.n = static_cast<int>(r.uniform_int(2, 8));
    gp.processors = static_cast<int>(r.uniform_int(1, 3));
    gp.levels = static_cast<Level>(r.uniform_int(1, 4));
    gp.period_min = 5;
    gp.period_max = 100;
    gp.utilization = std::min<double>(gp.n, gp.processors * (0.3 + 0.6 * r.uniform01()));
    TaskSet ts;
    try {
      ts = gen_taskset(gp);
    } catch (const Error&) {
      continue;
    }
    ++sets;
    const Platform p{gp.processors};
    const bool base = opa_assign(ts, p).schedulable();
    schedulable += base;
    std::vector<TaskId> ids;
    for (const auto& t : ts.tasks) ids.push_back(t.id);
    for (int k = 0; k < 20; ++k) {
      for (std::size_t j = ids.size(); j > 1; --j)
        std::swap(ids[j - 1], ids[static_cast<std::size_t>(r.uniform_int(0, static_cast<Time>(j) - 1))]);
      if (opa_assign(ts, p, {}, ids).schedulable() != base) out.fail("set " + std::to_string(i));
    }
  }
  out.summary = "100 sets x 20 orders, " + std::to_string(schedulable) + " schedulable";
  return out;
}

// Same inputs, same bytes.
Outcome ac9(const std::vector<CorpusSet>& corpus) {
  Outcome out;
  std::size_t traces = 0;
  for (std::size_t si = 0; si < corpus.size() && si < 20; ++si) {
    const auto& cs = corpus[si];
    DmcrPlan dp;
    dp.kind = DmcrPlan::Kind::Random;
    dp.count = 3;
    const auto sc = gen_scenario(cs.ts, 20 * cs.ts.max_period(), cs.seed,
                                 ExecModel{ExecModel::Kind::OverrunInjecting, 1}, dp);
    if (gen_scenario(cs.ts, 20 * cs.ts.max_period(), cs.seed, ExecModel{ExecModel::Kind::OverrunInjecting, 1}, dp) !=
        sc)
      out.fail("scenario generation, set " + std::to_string(si));
    for (auto prot : kProtocols) {
      const auto a = to_jsonl(simulate(cs.ts, cs.platform, cs.analysis.priorities, cs.analysis.wcrt, sc, config(prot)));
      const auto b = to_jsonl(simulate(cs.ts, cs.platform, cs.analysis.priorities, cs.analysis.wcrt, sc, config(prot)));
      ++traces;
      if (a != b) out.fail("trace differs, set " + std::to_string(si) + " " + std::string(to_string(prot)));
    }
  }
  ExperimentSpec spec;
  GenParams gp;
  gp.n = 6;
  gp.processors = 2;
  gp.levels = 3;
  gp.utilization = 0.9;
  gp.seed = 17;
  spec.generate = gp;
  spec.scenarios = 40;
  spec.protocols.assign(std::begin(kProtocols), std::end(kProtocols));
  spec.exec_model = ExecModel{ExecModel::Kind::OverrunInjecting, 1};
  spec.dmcr.kind = DmcrPlan::Kind::Random;
  spec.seed = 99;
  spec.force = true;
  const auto csv1 = experiment_csv(run_experiment(spec, 1));
  const auto csv2 = experiment_csv(run_experiment(spec, 1));
  const auto csv3 = experiment_csv(run_experiment(spec, 4));
  if (csv1 != csv2 || csv1 != csv3) out.fail("experiment CSV differs");
  out.summary = std::to_string(traces) + " trace pairs, 3 CSV runs";
  return out;
}

double mean(const std::pair<Time, std::size_t>& acc) {
  return acc.second ? static_cast<double>(acc.first) / static_cast<double>(acc.second) : 0.0;
}

template <class F>
Outcome timed(const char* name, F&& fn, double& secs) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = fn();
  secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "%s done in %.1f s\n", name, secs);
  return o;
}

}  // namespace

// With arguments, only the listed criteria run (for example `acceptance 4 7`).
int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  auto want = [&](int n) { return wanted.empty() || wanted.count(n) > 0; };

  std::map<int, Outcome> results;
  std::map<int, double> secs;
  if (want(1)) results[1] = timed("AC1", ac1, secs[1]);
  if (want(2)) results[2] = timed("AC2", ac2, secs[2]);

  std::vector<CorpusSet> corpus;
  SweepTotals tot;
  if (want(3) || want(5) || want(6) || want(9) || want(10)) {
    const auto t0 = std::chrono::steady_clock::now();
    corpus = sweep_corpus(500);
    if (want(3) || want(5) || want(6) || want(10)) tot = sweep(corpus, 100);
    const double sweep_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "sweep done in %.1f s\n", sweep_secs);
    if (want(3)) secs[3] = sweep_secs;
  }

  if (want(3)) {
    Outcome& o3 = results[3];
    o3.summary = std::to_string(corpus.size()) + " sets, " + std::to_string(tot.runs) + " runs, " +
                 std::to_string(tot.jobs_checked) + " jobs";
    if (tot.feasibility || tot.periodicity)
      o3.fail(std::to_string(tot.feasibility) + " feasibility and " + std::to_string(tot.periodicity) +
              " periodicity violations");
    for (const auto& n : tot.feas_notes) o3.fail(n);
  }
  if (want(5)) {
    Outcome& o5 = results[5];
    o5.summary = std::to_string(tot.response_checked) + " jobs checked, " + std::to_string(tot.response_spanning) +
                 " spanning excluded";
    if (tot.response) o5.fail(std::to_string(tot.response) + " bound violations");
    for (const auto& n : tot.resp_notes) o5.fail(n);
  }
  if (want(6)) {
    Outcome& o6 = results[6];
    o6.summary = std::to_string(tot.ghosts_checked) + " ghosts checked";
    if (tot.reclaim) o6.fail(std::to_string(tot.reclaim) + " accounting violations");
    for (const auto& n : tot.reclaim_notes) o6.fail(n);
  }

  if (want(4)) results[4] = timed("AC4", ac4, secs[4]);
  if (want(7)) results[7] = timed("AC7", ac7, secs[7]);
  if (want(8)) results[8] = timed("AC8", ac8, secs[8]);
  if (want(9)) results[9] = timed("AC9", [&] { return ac9(corpus); }, secs[9]);

  if (want(10)) {
    Outcome& o10 = results[10];
    const double naive = mean(tot.rem_response[ImcrProtocol::Naive]);
    const double wcet = mean(tot.rem_response[ImcrProtocol::WcetReclaim]);
    const double wcrt_sim = mean(tot.rem_response[ImcrProtocol::WcrtSimulate]);
    char buf[160];
    std::snprintf(buf, sizeof buf, "mean rem-job response naive %.3f, wcet-reclaim %.3f, wcrt-simulate %.3f", naive,
                  wcet, wcrt_sim);
    o10.summary = buf;
    if (wcet > naive) o10.fail("wcet-reclaim slower than naive");
    if (wcrt_sim > naive) o10.fail("wcrt-simulate slower than naive");
  }

  int failed = 0;
  for (auto& [n, o] : results) {
    std::printf("AC%d %s: %s", n, o.pass ? "PASS" : "FAIL", o.summary.c_str());
    if (secs.count(n)) std::printf(" (%.1f s)", secs[n]);
    std::printf("\n");
    for (const auto& line : o.notes) std::printf("    %s\n", line.c_str());
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
