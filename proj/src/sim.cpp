#include "mcs/sim.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace mcs {

std::string_view to_string(ImcrProtocol p) {
  switch (p) {
    case ImcrProtocol::Drop: return "drop";
    case ImcrProtocol::Naive: return "naive";
    case ImcrProtocol::WcetReclaim: return "wcet-reclaim";
    case ImcrProtocol::WcrtSimulate: return "wcrt-simulate";
  }
  return "?";
}

std::optional<ImcrProtocol> protocol_from_string(std::string_view s) {
  for (auto p : {ImcrProtocol::Drop, ImcrProtocol::Naive, ImcrProtocol::WcetReclaim, ImcrProtocol::WcrtSimulate})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

std::string_view to_string(RemOrder o) {
  switch (o) {
    case RemOrder::CritThenEdf: return "crit-edf";
    case RemOrder::Edf: return "edf";
    case RemOrder::Srpt: return "srpt";
  }
  return "?";
}

std::optional<RemOrder> rem_order_from_string(std::string_view s) {
  for (auto o : {RemOrder::CritThenEdf, RemOrder::Edf, RemOrder::Srpt})
    if (to_string(o) == s) return o;
  return std::nullopt;
}

namespace {

constexpr Time kNever = std::numeric_limits<Time>::max();

struct TaskState {
  const MCTask* task = nullptr;
  int rank = 0;
  std::vector<Time> wcrt;
  const TaskArrivals* arrivals = nullptr;
  std::size_t next = 0;
};

struct Job {
  int task = 0;  // index into tasks
  int k = 0;
  Time release = 0;
  Time deadline = 0;
  Time exec = 0;
  Time executed = 0;
  bool rem = false;
  bool done = false;
  bool dropped = false;
  bool miss_logged = false;
  int proc = -1;
};

struct Ghost {
  int job = 0;
  GhostKind kind = GhostKind::WcetReclaim;
  Time budget = 0;
  Time until = 0;
  Time consumed = 0;
  Level level = 1;
};

struct Slot {
  int job = -1;
  int lender = -1;  // job index of the completed job whose ghost lends the slot
  SlotKind kind = SlotKind::Job;
  bool operator==(const Slot&) const = default;
};

struct Chain {
  Level target = 1;
  Level from = 1;
  std::vector<int> order;
  std::size_t cursor = 0;
};

}  // namespace

struct Simulator::Impl {
  TaskSet ts;
  int m = 1;
  ProtocolConfig cfg;
  Time horizon = 0;
  std::vector<TaskState> tasks;
  std::vector<int> by_rank;
  std::vector<DmcrRequest> requests;
  std::size_t next_request = 0;
  std::vector<Level> external;

  std::vector<Job> jobs;
  std::vector<int> active;
  std::vector<int> rem;
  std::vector<Ghost> ghosts;
  std::vector<int> completed_now;
  Level level = 1;
  Phase phase = Phase::Steady;
  std::optional<Chain> chain;
  std::optional<Level> pending;
  std::vector<Slot> procs;
  std::vector<std::optional<Time>> idle_since;
  std::vector<Level> idle_mode;
  Time now = 0;
  bool started = false;
  bool finished = false;
  Trace trace;

  Level crit(int ti) const { return tasks[ti].task->criticality; }
  Time wcet(int ti, Level l) const { return effective_wcet(*tasks[ti].task, l, ts.levels); }
  Time resp(int ti, Level l) const { return tasks[ti].wcrt.at(static_cast<std::size_t>(l - 1)); }

  TraceEvent& emit(EventKind kind, Time t) {
    TraceEvent ev;
    ev.t = t;
    ev.kind = kind;
    ev.mode = level;
    trace.events.push_back(std::move(ev));
    return trace.events.back();
  }

  TraceEvent& emit_job(EventKind kind, Time t, const Job& j) {
    auto& ev = emit(kind, t);
    ev.task = tasks[j.task].task->id;
    ev.k = j.k;
    if (j.proc >= 0) ev.proc = j.proc;
    return ev;
  }

  std::vector<TaskId> ids_where(auto pred) const {
    std::vector<TaskId> out;
    for (std::size_t i = 0; i < tasks.size(); ++i)
      if (pred(static_cast<int>(i))) out.push_back(tasks[i].task->id);
    std::sort(out.begin(), out.end());
    return out;
  }

  auto prio_key(int j) const { return std::make_tuple(tasks[jobs[j].task].rank, jobs[j].k); }

  void sort_by_prio(std::vector<int>& v) const {
    std::sort(v.begin(), v.end(), [&](int a, int b) { return prio_key(a) < prio_key(b); });
  }

  void free_proc(Job& job) {
    if (job.proc >= 0) procs[static_cast<std::size_t>(job.proc)] = Slot{};
    job.proc = -1;
  }

  static void erase(std::vector<int>& v, int x) { v.erase(std::remove(v.begin(), v.end(), x), v.end()); }

  Ghost* ghost_of(int job) {
    for (auto& g : ghosts)
      if (g.job == job) return &g;
    return nullptr;
  }

  void retire_ghost(std::size_t gi, Time t, const char* reason) {
    const Ghost g = ghosts[gi];
    ghosts.erase(ghosts.begin() + static_cast<std::ptrdiff_t>(gi));
    auto& ev = emit(EventKind::GhostRetired, t);
    ev.task = tasks[jobs[g.job].task].task->id;
    ev.k = jobs[g.job].k;
    ev.ghost = g.kind == GhostKind::WcetReclaim ? "wcet" : "wcrt";
    ev.consumed = g.consumed;
    ev.reason = reason;
  }

  void retire_ghosts_if(Time t, const char* reason, auto pred) {
    for (std::size_t gi = 0; gi < ghosts.size();) {
      if (pred(ghosts[gi]))
        retire_ghost(gi, t, reason);
      else
        ++gi;
    }
  }

  void maybe_create_ghost(int j, Time t) {
    if (phase != Phase::ImcrTransition || rem.empty()) return;
    const Job& job = jobs[j];
    if (cfg.imcr_protocol == ImcrProtocol::WcetReclaim) {
      const Time unused = wcet(job.task, level) - job.exec;
      if (unused <= 0) return;
      ghosts.push_back(Ghost{j, GhostKind::WcetReclaim, unused, 0, 0, level});
      auto& ev = emit_job(EventKind::GhostCreated, t, job);
      ev.ghost = "wcet";
      ev.budget = unused;
    } else if (cfg.imcr_protocol == ImcrProtocol::WcrtSimulate) {
      const Time until = job.release + resp(job.task, level);
      if (t >= until) return;
      ghosts.push_back(Ghost{j, GhostKind::WcrtSimulate, 0, until, 0, level});
      auto& ev = emit_job(EventKind::GhostCreated, t, job);
      ev.ghost = "wcrt";
      ev.until = until;
    }
  }

  void completions(Time t) {
    completed_now.clear();
    std::vector<int> fin;
    for (const auto& s : procs)
      if (s.job >= 0 && jobs[s.job].executed >= jobs[s.job].exec) fin.push_back(s.job);
    std::sort(fin.begin(), fin.end(), [&](int a, int b) {
      return std::make_tuple(!jobs[a].rem, tasks[jobs[a].task].rank, jobs[a].k) <
             std::make_tuple(!jobs[b].rem, tasks[jobs[b].task].rank, jobs[b].k);
    });
    for (int j : fin) {
      Job& job = jobs[j];
      job.done = true;
      auto& ev = emit_job(EventKind::Complete, t, job);
      ev.release = job.release;
      ev.exec = job.exec;
      free_proc(job);
      if (job.rem) {
        erase(rem, j);
      } else {
        erase(active, j);
        completed_now.push_back(j);
        maybe_create_ghost(j, t);
      }
    }
    retire_ghosts_if(t, "exhausted",
                     [&](const Ghost& g) { return g.kind == GhostKind::WcetReclaim && g.consumed >= g.budget; });
    retire_ghosts_if(t, "expired",
                     [&](const Ghost& g) { return g.kind == GhostKind::WcrtSimulate && g.until <= t; });
    if (phase == Phase::ImcrTransition && rem.empty()) {
      retire_ghosts_if(t, "no-rem-jobs", [](const Ghost&) { return true; });
      phase = Phase::Steady;
    }
  }

  void deadline_checks(Time t) {
    for (int j : active) {
      Job& job = jobs[j];
      if (job.miss_logged || job.deadline > t) continue;
      job.miss_logged = true;
      auto& ev = emit_job(EventKind::DeadlineMiss, t, job);
      ev.deadline = job.deadline;
      ev.crit = crit(job.task);
    }
  }

  void overruns(Time t) {
    for (;;) {
      int best = -1;
      for (int j : active) {
        const Job& job = jobs[j];
        if (job.executed >= wcet(job.task, level) && job.executed < job.exec)
          if (best < 0 || prio_key(j) < prio_key(best)) best = j;
      }
      if (best < 0) return;
      if (crit(jobs[best].task) <= level)
        throw Error(ErrorCode::ModelViolation, "job of task " + std::to_string(tasks[jobs[best].task].task->id) +
                                                   " exceeds C(L) of its own criticality");
      imcr(best, t);
    }
  }

  void imcr(int j, Time t) {
    const Level from = level;
    level = from + 1;
    {
      auto& ev = emit_job(EventKind::BudgetExceeded, t, jobs[j]);
      ev.from = from;
      ev.executed = jobs[j].executed;
      ev.tasks = ids_where([&](int i) { return crit(i) == from; });
    }
    if (chain) {
      auto& ev = emit(EventKind::ChainAborted, t);
      ev.target = chain->target;
      ev.cursor = static_cast<int>(chain->cursor);
      chain.reset();
    }
    std::vector<int> moved;
    for (int a : active)
      if (crit(jobs[a].task) < level) moved.push_back(a);
    sort_by_prio(moved);
    for (int a : moved) {
      erase(active, a);
      Job& job = jobs[a];
      if (cfg.imcr_protocol == ImcrProtocol::Drop) {
        job.dropped = true;
        auto& ev = emit_job(EventKind::JobDropped, t, job);
        ev.reason = "rem-job";
        free_proc(job);
      } else {
        job.rem = true;
        rem.push_back(a);
        auto& ev = emit_job(EventKind::RemJob, t, job);
        ev.deadline = job.deadline;
        ev.crit = crit(job.task);
      }
    }
    retire_ghosts_if(t, "suspended", [&](const Ghost& g) { return crit(jobs[g.job].task) < level; });
    for (auto& g : ghosts)
      if (g.kind == GhostKind::WcrtSimulate)
        g.until = std::min(g.until, jobs[g.job].release + resp(jobs[g.job].task, level));
    retire_ghosts_if(t, "expired",
                     [&](const Ghost& g) { return g.kind == GhostKind::WcrtSimulate && g.until <= t; });
    phase = rem.empty() ? Phase::Steady : Phase::ImcrTransition;
    if (phase == Phase::Steady) retire_ghosts_if(t, "no-rem-jobs", [](const Ghost&) { return true; });
  }

  void log_request(Time t, Level target, const char* status) {
    auto& ev = emit(EventKind::DmcrRequested, t);
    ev.target = target;
    ev.status = status;
  }

  void start_or_ignore(Level target, Time t) {
    if (target < 1 || target >= level) {
      log_request(t, target, "ignored");
      return;
    }
    Chain c;
    c.target = target;
    c.from = level;
    for (int i : by_rank)
      if (crit(i) >= level) c.order.push_back(i);
    chain = std::move(c);
    phase = Phase::DmcrChain;
    log_request(t, target, "started");
    if (chain->order.empty()) re_enable(t);
  }

  void dmcr_intake(Time t) {
    std::vector<Level> incoming;
    while (next_request < requests.size() && requests[next_request].time <= t)
      incoming.push_back(requests[next_request++].target);
    incoming.insert(incoming.end(), external.begin(), external.end());
    external.clear();
    if (!incoming.empty()) {
      for (Level target : incoming) {
        if (phase == Phase::Steady) {
          pending.reset();
          start_or_ignore(target, t);
        } else {
          pending = target;
          log_request(t, target, "deferred");
        }
      }
    } else if (pending && phase == Phase::Steady) {
      const Level target = *pending;
      pending.reset();
      start_or_ignore(target, t);
    }
  }

  void re_enable(Time t) {
    const Level from = level;
    const Level target = chain->target;
    level = target;
    auto& ev = emit(EventKind::ReEnabled, t);
    ev.from = from;
    ev.target = target;
    ev.tasks = ids_where([&](int i) { return crit(i) >= target && crit(i) < from; });
    chain.reset();
    phase = Phase::Steady;
  }

  bool chain_checks(Time t) {
    if (!chain) return false;
    sort_by_prio(completed_now);
    for (int j : completed_now) {
      const Job& job = jobs[j];
      if (job.task != chain->order[chain->cursor]) continue;
      if (t - job.release > resp(job.task, chain->target)) continue;
      auto& ev = emit_job(EventKind::ChainAdvance, t, job);
      ev.target = chain->target;
      ev.cursor = static_cast<int>(chain->cursor);
      if (++chain->cursor == chain->order.size()) {
        re_enable(t);
        return true;
      }
    }
    return false;
  }

  void releases(Time t) {
    for (int i : by_rank) {
      TaskState& st = tasks[i];
      if (!st.arrivals) continue;
      while (st.next < st.arrivals->arrivals.size() && st.arrivals->arrivals[st.next] <= t) {
        Job job;
        job.task = i;
        job.k = static_cast<int>(st.next) + 1;
        job.release = st.arrivals->arrivals[st.next];
        job.deadline = job.release + st.task->deadline;
        job.exec = st.arrivals->exec_times[st.next];
        ++st.next;
        if (crit(i) >= level) {
          jobs.push_back(job);
          active.push_back(static_cast<int>(jobs.size()) - 1);
          auto& ev = emit_job(EventKind::Release, t, job);
          ev.deadline = job.deadline;
          ev.crit = crit(i);
        } else {
          auto& ev = emit_job(EventKind::JobDropped, t, job);
          ev.reason = "suspended";
        }
      }
    }
  }

  bool rem_before(int a, int b) const {
    const Job& x = jobs[a];
    const Job& y = jobs[b];
    const auto tail = [&](const Job& j) { return std::make_tuple(j.deadline, tasks[j.task].task->id, j.k); };
    switch (cfg.rem_order) {
      case RemOrder::CritThenEdf:
        if (crit(x.task) != crit(y.task)) return crit(x.task) > crit(y.task);
        return tail(x) < tail(y);
      case RemOrder::Edf:
        return tail(x) < tail(y);
      case RemOrder::Srpt: {
        const Time rx = wcet(x.task, crit(x.task)) - x.executed;
        const Time ry = wcet(y.task, crit(y.task)) - y.executed;
        if (rx != ry) return rx < ry;
        return tail(x) < tail(y);
      }
    }
    return false;
  }

  void dispatch(Time t) {
    struct Cand {
      int rank, sub, k, job;
    };
    std::vector<Cand> cands;
    for (int j : active) cands.push_back({tasks[jobs[j].task].rank, 0, jobs[j].k, j});
    for (const auto& g : ghosts) cands.push_back({tasks[jobs[g.job].task].rank, 1, jobs[g.job].k, g.job});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return std::tie(a.rank, a.sub, a.k) < std::tie(b.rank, b.sub, b.k);
    });
    std::vector<int> remq = rem;
    std::sort(remq.begin(), remq.end(), [&](int a, int b) { return rem_before(a, b); });

    std::vector<Slot> want;
    std::vector<int> idle_ghosts;
    std::size_t rq = 0;
    const auto m_sz = static_cast<std::size_t>(m);
    for (const auto& c : cands) {
      if (want.size() == m_sz) break;
      if (c.sub == 0)
        want.push_back({c.job, -1, SlotKind::Job});
      else if (rq < remq.size())
        want.push_back({remq[rq++], c.job, SlotKind::Ghost});
      else
        idle_ghosts.push_back(c.job);
    }
    for (int gj : idle_ghosts)
      retire_ghosts_if(t, "idle-slot", [&](const Ghost& g) { return g.job == gj; });
    if (cfg.imcr_protocol != ImcrProtocol::Drop)
      while (want.size() < m_sz && rq < remq.size()) want.push_back({remq[rq++], -1, SlotKind::Background});

    std::vector<Slot> next(m_sz);
    std::vector<bool> placed(want.size(), false);
    for (std::size_t i = 0; i < want.size(); ++i) {
      const int p = jobs[want[i].job].proc;
      if (p >= 0 && procs[static_cast<std::size_t>(p)].job == want[i].job) {
        next[static_cast<std::size_t>(p)] = want[i];
        placed[i] = true;
      }
    }
    std::size_t free_p = 0;
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (placed[i]) continue;
      while (next[free_p].job >= 0) ++free_p;
      next[free_p] = want[i];
    }

    for (std::size_t p = 0; p < m_sz; ++p) {
      const Slot& old = procs[p];
      if (old.job >= 0 && !(old == next[p])) {
        Job& job = jobs[old.job];
        if (!job.done && !job.dropped) emit_job(EventKind::Preempt, t, job);
        job.proc = -1;
      }
    }
    for (std::size_t p = 0; p < m_sz; ++p) {
      const Slot& nw = next[p];
      if (nw.job < 0) continue;
      Job& job = jobs[nw.job];
      job.proc = static_cast<int>(p);
      if (procs[p] == nw) continue;
      auto& ev = emit_job(EventKind::Dispatch, t, job);
      ev.slot = nw.kind;
      if (nw.lender >= 0) {
        ev.lender_task = tasks[jobs[nw.lender].task].task->id;
        ev.lender_k = jobs[nw.lender].k;
      }
    }
    procs = std::move(next);
    for (std::size_t p = 0; p < m_sz; ++p) {
      if (procs[p].job < 0) {
        if (!idle_since[p]) {
          idle_since[p] = t;
          idle_mode[p] = level;
        }
      } else {
        close_idle(p, t);
      }
    }
  }

  void close_idle(std::size_t p, Time t) {
    if (!idle_since[p]) return;
    if (*idle_since[p] < t) {
      auto& ev = emit(EventKind::Idle, *idle_since[p]);
      ev.mode = idle_mode[p];
      ev.proc = static_cast<int>(p);
      ev.until = t;
    }
    idle_since[p].reset();
  }

  void process_instant(Time t) {
    completions(t);
    deadline_checks(t);
    overruns(t);
    dmcr_intake(t);
    if (chain_checks(t)) overruns(t);
    releases(t);
    dispatch(t);
  }

  void advance(Time t, Time limit) {
    Time next = limit;
    for (const auto& st : tasks)
      if (st.arrivals && st.next < st.arrivals->arrivals.size())
        next = std::min(next, st.arrivals->arrivals[st.next]);
    if (next_request < requests.size()) next = std::min(next, requests[next_request].time);
    for (const auto& s : procs) {
      if (s.job < 0) continue;
      const Job& job = jobs[s.job];
      next = std::min(next, t + job.exec - job.executed);
      if (s.kind == SlotKind::Job) {
        const Time budget = wcet(job.task, level);
        if (job.exec > budget && job.executed < budget) next = std::min(next, t + budget - job.executed);
      } else if (s.kind == SlotKind::Ghost) {
        const Ghost* g = ghost_of(s.lender);
        if (g && g->kind == GhostKind::WcetReclaim) next = std::min(next, t + g->budget - g->consumed);
      }
    }
    for (const auto& g : ghosts)
      if (g.kind == GhostKind::WcrtSimulate && g.until > t) next = std::min(next, g.until);
    for (int j : active)
      if (!jobs[j].miss_logged && jobs[j].deadline > t) next = std::min(next, jobs[j].deadline);
    if (next <= t) next = t + 1;
    const Time dt = next - t;
    for (const auto& s : procs) {
      if (s.job < 0) continue;
      jobs[s.job].executed += dt;
      if (s.kind == SlotKind::Ghost)
        if (Ghost* g = ghost_of(s.lender)) g->consumed += dt;
    }
    now = next;
  }

  void start() {
    if (started) return;
    started = true;
    auto& ev = emit(EventKind::Start, 0);
    ev.horizon = horizon;
    ev.processors = m;
    ev.levels = ts.levels;
    ev.protocol = std::string(to_string(cfg.imcr_protocol));
    ev.rem_order = std::string(to_string(cfg.rem_order));
  }

  void run_until(Time t) {
    if (finished) throw Error(ErrorCode::InvalidParameter, "simulation already finished");
    start();
    t = std::min(t, horizon);
    while (now < t) {
      process_instant(now);
      advance(now, t);
    }
  }
};

Simulator::Simulator(const TaskSet& ts, const Platform& platform, const PriorityAssignment& pa,
                     const WcrtTable& wt, const Scenario& sc, const ProtocolConfig& cfg)
    : impl_(std::make_unique<Impl>()) {
  auto& s = *impl_;
  s.ts = validate_taskset(ts, platform);
  validate_scenario(sc, s.ts);
  s.m = platform.processors;
  s.cfg = cfg;
  s.horizon = sc.horizon;
  for (const auto& t : s.ts.tasks) {
    TaskState st;
    st.task = &t;
    st.rank = pa.rank_of(t.id);
    if (st.rank == 0)
      throw Error(ErrorCode::InconsistentInputs, "task " + std::to_string(t.id) + " has no priority");
    for (Level l = 1; l <= t.criticality; ++l) st.wcrt.push_back(wt.at(t.id, l));
    if (auto it = sc.tasks.find(t.id); it != sc.tasks.end()) st.arrivals = &it->second;
    s.tasks.push_back(std::move(st));
  }
  if (pa.order.size() != s.tasks.size())
    throw Error(ErrorCode::InconsistentInputs, "priority order does not match the task set");
  for (std::size_t i = 0; i < s.tasks.size(); ++i) s.by_rank.push_back(static_cast<int>(i));
  std::sort(s.by_rank.begin(), s.by_rank.end(),
            [&](int a, int b) { return s.tasks[a].rank < s.tasks[b].rank; });
  s.requests = sc.dmcr_requests;
  std::stable_sort(s.requests.begin(), s.requests.end(),
                   [](const DmcrRequest& a, const DmcrRequest& b) { return a.time < b.time; });
  s.procs.assign(static_cast<std::size_t>(s.m), Slot{});
  s.idle_since.assign(static_cast<std::size_t>(s.m), std::nullopt);
  s.idle_mode.assign(static_cast<std::size_t>(s.m), 1);
}

Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

void Simulator::run_until(Time t) { impl_->run_until(t); }

void Simulator::request_dmcr(Level target) {
  if (target < 1 || target >= impl_->level)
    throw Error(ErrorCode::InvalidTarget, "DMCR target " + std::to_string(target) + " is not below the current level " +
                                              std::to_string(impl_->level));
  impl_->external.push_back(target);
}

Trace Simulator::finish() {
  auto& s = *impl_;
  s.run_until(s.horizon);
  const Time h = s.horizon;
  s.completions(h);
  s.deadline_checks(h);
  if (s.chain) {
    auto& ev = s.emit(EventKind::ChainStalled, h);
    ev.target = s.chain->target;
    ev.cursor = static_cast<int>(s.chain->cursor);
  }
  for (std::size_t p = 0; p < s.procs.size(); ++p) s.close_idle(p, h);
  s.emit(EventKind::End, h);
  std::stable_sort(s.trace.events.begin(), s.trace.events.end(),
                   [](const TraceEvent& a, const TraceEvent& b) { return a.t < b.t; });
  s.finished = true;
  return s.trace;
}

Time Simulator::now() const { return impl_->now; }

const Trace& Simulator::trace() const { return impl_->trace; }

ModeState Simulator::mode_state() const {
  const auto& s = *impl_;
  ModeState ms;
  ms.level = s.level;
  ms.phase = s.phase;
  ms.enabled = s.ids_where([&](int i) { return s.crit(i) >= s.level; });
  for (int j : s.rem) ms.rem_jobs.push_back({s.tasks[s.jobs[j].task].task->id, s.jobs[j].k});
  for (const auto& g : s.ghosts) {
    const Job& job = s.jobs[g.job];
    ms.ghosts.push_back({s.tasks[job.task].task->id, job.k, s.tasks[job.task].rank, g.kind, g.budget, g.until,
                         g.consumed, g.level});
  }
  if (s.chain) {
    ms.chain_target = s.chain->target;
    for (int i : s.chain->order) ms.chain_tasks.push_back(s.tasks[i].task->id);
    ms.chain_cursor = s.chain->cursor;
  }
  ms.pending_dmcr = s.pending;
  return ms;
}

Trace simulate(const TaskSet& ts, const Platform& platform, const PriorityAssignment& pa, const WcrtTable& wt,
               const Scenario& sc, const ProtocolConfig& cfg) {
  Simulator sim(ts, platform, pa, wt, sc, cfg);
  return sim.finish();
}

}  // namespace mcs
