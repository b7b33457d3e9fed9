#include "mcs/verify.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>
#include <tuple>

namespace mcs {

Level LIntervalSet::level_at(Time t) const {
  Level level = 1;
  for (const auto& iv : intervals) {
    if (iv.start > t) break;
    level = iv.level;
  }
  return level;
}

Level LIntervalSet::max_level(Time a, Time b) const {
  Level best = level_at(a);
  for (const auto& iv : intervals)
    if (iv.start > a && iv.start < b) best = std::max(best, iv.level);
  return best;
}

bool LIntervalSet::changes_within(Time a, Time b) const {
  for (std::size_t i = 1; i < intervals.size(); ++i)
    if (intervals[i].start > a && intervals[i].start < b) return true;
  return false;
}

namespace {

[[noreturn]] void malformed(const TraceEvent& ev, const std::string& what) {
  throw Error(ErrorCode::MalformedTrace, "t=" + std::to_string(ev.t) + " " + std::string(to_string(ev.kind)) +
                                             ": " + what);
}

Time trace_horizon(const Trace& trace) {
  for (const auto& ev : trace.events)
    if (ev.kind == EventKind::Start && ev.horizon) return *ev.horizon;
  for (const auto& ev : trace.events)
    if (ev.kind == EventKind::End) return ev.t;
  return trace.events.empty() ? 0 : trace.events.back().t;
}

LIntervalSet intervals_from(const Trace& trace, Time horizon) {
  LIntervalSet set;
  set.intervals.push_back({0, horizon, 1});
  Time last_t = 0;
  for (const auto& ev : trace.events) {
    if (ev.t < last_t) malformed(ev, "event times decrease");
    last_t = ev.t;
    if (ev.kind != EventKind::BudgetExceeded && ev.kind != EventKind::ReEnabled) continue;
    set.intervals.back().end = ev.t;
    set.intervals.push_back({ev.t, horizon, ev.mode});
  }
  return set;
}

JobKey key_of(const TraceEvent& ev) {
  if (!ev.task || !ev.k) malformed(ev, "missing task or k");
  return {*ev.task, *ev.k};
}

void add(CheckReport& rep, const char* check, const char* kind, std::optional<TaskId> task, std::optional<int> k,
         Time t, std::string detail) {
  rep.findings.push_back(Finding{check, kind, task, k, t, std::move(detail)});
}

void add(CheckReport& rep, const char* check, const char* kind, const JobRecord& job, Time t, std::string detail) {
  add(rep, check, kind, job.task, job.k, t, std::move(detail));
}

}  // namespace

LIntervalSet compute_l_intervals(const Trace& trace) { return intervals_from(trace, trace_horizon(trace)); }

TraceIndex index_trace(const Trace& trace) {
  TraceIndex idx;
  idx.horizon = trace_horizon(trace);
  idx.intervals = intervals_from(trace, idx.horizon);
  std::map<JobKey, std::size_t> open;  // job -> segment index
  auto close = [&](const TraceEvent& ev, JobKey key) {
    auto it = open.find(key);
    if (it == open.end()) return;
    auto& seg = idx.segments[it->second];
    seg.end = ev.t;
    idx.jobs[key].received += seg.end - seg.start;
    open.erase(it);
  };
  auto job = [&](const TraceEvent& ev) -> JobRecord& {
    auto it = idx.jobs.find(key_of(ev));
    if (it == idx.jobs.end()) malformed(ev, "unknown job");
    return it->second;
  };

  for (const auto& ev : trace.events) {
    switch (ev.kind) {
      case EventKind::Start:
        if (ev.processors) idx.processors = *ev.processors;
        if (ev.levels) idx.levels = *ev.levels;
        idx.protocol = ev.protocol;
        break;
      case EventKind::Release: {
        const auto key = key_of(ev);
        if (idx.jobs.count(key)) malformed(ev, "duplicate release");
        if (!ev.deadline || !ev.crit) malformed(ev, "missing d or crit");
        JobRecord rec;
        rec.task = key.first;
        rec.k = key.second;
        rec.release = ev.t;
        rec.deadline = *ev.deadline;
        rec.crit = *ev.crit;
        idx.jobs.emplace(key, rec);
        break;
      }
      case EventKind::Dispatch: {
        const auto key = key_of(ev);
        const auto& rec = job(ev);
        if (open.count(key)) malformed(ev, "job already running");
        if (!ev.proc || !ev.slot) malformed(ev, "missing proc or slot");
        if (rec.finish || rec.dropped_at) malformed(ev, "job no longer available");
        Segment seg;
        seg.task = key.first;
        seg.k = key.second;
        seg.proc = *ev.proc;
        seg.start = ev.t;
        seg.end = ev.t;
        seg.slot = *ev.slot;
        seg.lender_task = ev.lender_task;
        seg.lender_k = ev.lender_k;
        open.emplace(key, idx.segments.size());
        idx.segments.push_back(seg);
        break;
      }
      case EventKind::Preempt:
        job(ev);
        if (!open.count(key_of(ev))) malformed(ev, "job not running");
        close(ev, key_of(ev));
        break;
      case EventKind::Complete: {
        auto& rec = job(ev);
        if (rec.finish) malformed(ev, "job completed twice");
        close(ev, key_of(ev));
        rec.finish = ev.t;
        rec.exec = ev.exec;
        break;
      }
      case EventKind::JobDropped:
        if (ev.reason == "suspended") {
          idx.suspended_arrivals[key_of(ev)] = ev.t;
        } else {
          auto& rec = job(ev);
          close(ev, key_of(ev));
          rec.dropped_at = ev.t;
        }
        break;
      case EventKind::RemJob:
        job(ev).rem_since = ev.t;
        break;
      case EventKind::DeadlineMiss:
        job(ev).miss_at = ev.t;
        break;
      case EventKind::GhostCreated: {
        const auto key = key_of(ev);
        GhostRecord g;
        g.task = key.first;
        g.k = key.second;
        g.created = ev.t;
        g.level = ev.mode;
        g.kind = ev.ghost;
        g.budget = ev.budget;
        g.until = ev.until;
        idx.ghosts[key] = g;
        break;
      }
      case EventKind::GhostRetired: {
        auto it = idx.ghosts.find(key_of(ev));
        if (it == idx.ghosts.end()) malformed(ev, "unknown ghost");
        it->second.retired = ev.t;
        break;
      }
      case EventKind::BudgetExceeded:
      case EventKind::ReEnabled:
      case EventKind::DmcrRequested:
      case EventKind::ChainAdvance:
      case EventKind::ChainAborted:
      case EventKind::ChainStalled:
        idx.mode_events.push_back(ev);
        break;
      case EventKind::End: {
        std::vector<JobKey> keys;
        for (const auto& [key, seg] : open) keys.push_back(key);
        for (const auto& key : keys) close(ev, key);
        break;
      }
      case EventKind::Idle:
        if (ev.proc && ev.until && *ev.proc >= 0) {
          const auto p = static_cast<std::size_t>(*ev.proc);
          if (idx.idle.size() <= p) idx.idle.resize(p + 1, 0);
          idx.idle[p] += *ev.until - ev.t;
        }
        break;
    }
  }
  if (!open.empty()) {
    TraceEvent end;
    end.t = idx.horizon;
    end.kind = EventKind::End;
    std::vector<JobKey> keys;
    for (const auto& [key, seg] : open) keys.push_back(key);
    for (const auto& key : keys) close(end, key);
  }
  return idx;
}

void CheckReport::merge(const CheckReport& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  checked += other.checked;
  spanning += other.spanning;
}

std::string format_report(const CheckReport& report) {
  std::ostringstream out;
  for (const auto& f : report.findings) {
    out << f.check << ' ' << f.kind << " t=" << f.t;
    if (f.task) out << " task=" << *f.task;
    if (f.k) out << " k=" << *f.k;
    if (!f.detail.empty()) out << ' ' << f.detail;
    out << '\n';
  }
  out << (report.ok() ? "clean" : "violations") << ": " << report.findings.size() << " finding(s), "
      << report.checked << " checked, " << report.spanning << " spanning\n";
  return out.str();
}

CheckReport check_feasibility(const TraceIndex& idx, const TaskSet& ts) {
  CheckReport rep;
  for (const auto& seg : idx.segments) {
    const auto& job = idx.jobs.at({seg.task, seg.k});
    if (seg.start < job.release) add(rep, "feasibility", "early-execution", job, seg.start, "");
  }
  for (const auto& [key, job] : idx.jobs) {
    const MCTask* task = ts.find(job.task);
    if (!task) {
      add(rep, "feasibility", "unknown-task", job, job.release, "");
      continue;
    }
    if (job.finish && job.exec && job.received != *job.exec)
      add(rep, "feasibility", "execution-mismatch", job, *job.finish,
          "received " + std::to_string(job.received) + " of " + std::to_string(*job.exec));
    const Time end = std::min(job.finish.value_or(idx.horizon), job.deadline);
    const Time upto = std::max(end, job.release + 1);
    if (idx.intervals.max_level(job.release, upto) > task->criticality) continue;
    ++rep.checked;
    if (job.dropped_at) {
      add(rep, "feasibility", "dropped", job, *job.dropped_at, "enabled job dropped");
    } else if (job.finish) {
      if (*job.finish > job.deadline)
        add(rep, "feasibility", "deadline-miss", job, *job.finish,
            "f=" + std::to_string(*job.finish) + " d=" + std::to_string(job.deadline));
    } else if (job.deadline <= idx.horizon) {
      add(rep, "feasibility", "deadline-miss", job, job.deadline, "incomplete at d=" + std::to_string(job.deadline));
    }
  }
  return rep;
}

CheckReport check_periodicity(const TraceIndex& idx, const TaskSet& ts, const Scenario& sc) {
  CheckReport rep;
  std::set<JobKey> expected;
  for (const auto& [id, ta] : sc.tasks) {
    const MCTask* task = ts.find(id);
    if (!task) continue;
    for (std::size_t i = 0; i < ta.arrivals.size(); ++i) {
      const Time a = ta.arrivals[i];
      if (a >= idx.horizon) break;
      const JobKey key{id, static_cast<int>(i) + 1};
      expected.insert(key);
      ++rep.checked;
      const bool enabled = task->criticality >= idx.intervals.level_at(a);
      auto it = idx.jobs.find(key);
      if (!enabled) {
        if (it != idx.jobs.end()) add(rep, "periodicity", "suspended-release", id, key.second, a, "");
        continue;
      }
      if (it == idx.jobs.end()) {
        add(rep, "periodicity", "missing-release", id, key.second, a, "");
      } else if (it->second.release != a) {
        add(rep, "periodicity", "release-mismatch", id, key.second, it->second.release,
            "arrival " + std::to_string(a));
      } else if (i < ta.exec_times.size() && it->second.exec && *it->second.exec != ta.exec_times[i]) {
        add(rep, "periodicity", "exec-mismatch", id, key.second, a, "");
      }
    }
  }
  for (const auto& [key, job] : idx.jobs)
    if (!expected.count(key)) add(rep, "periodicity", "spurious-release", job, job.release, "");
  return rep;
}

CheckReport check_response_bounds(const TraceIndex& idx, const WcrtTable& wt) {
  CheckReport rep;
  for (const auto& [key, job] : idx.jobs) {
    if (!job.finish || job.rem_since || job.dropped_at) continue;
    const Level level = idx.intervals.level_at(job.release);
    if (job.crit < level) continue;
    if (idx.intervals.changes_within(job.release, *job.finish)) {
      ++rep.spanning;
      continue;
    }
    if (!wt.has(job.task, level)) {
      add(rep, "response", "missing-bound", job, job.release, "level " + std::to_string(level));
      continue;
    }
    ++rep.checked;
    const Time bound = wt.at(job.task, level);
    if (*job.finish - job.release > bound)
      add(rep, "response", "bound-exceeded", job, *job.finish,
          "f-r=" + std::to_string(*job.finish - job.release) + " R=" + std::to_string(bound) +
              " level=" + std::to_string(level));
  }
  return rep;
}

CheckReport check_dispatch(const TraceIndex& idx, const PriorityAssignment& pa) {
  CheckReport rep;
  std::vector<Time> instants{0, idx.horizon};
  for (const auto& s : idx.segments) {
    instants.push_back(s.start);
    instants.push_back(s.end);
  }
  for (const auto& [key, j] : idx.jobs) {
    instants.push_back(j.release);
    for (const auto& t : {j.finish, j.rem_since, j.dropped_at})
      if (t) instants.push_back(*t);
  }
  for (const auto& iv : idx.intervals.intervals) instants.push_back(iv.start);
  std::sort(instants.begin(), instants.end());
  instants.erase(std::unique(instants.begin(), instants.end()), instants.end());

  std::vector<const Segment*> segs;
  for (const auto& s : idx.segments)
    if (s.end > s.start) segs.push_back(&s);
  std::sort(segs.begin(), segs.end(), [](const Segment* a, const Segment* b) { return a->start < b->start; });
  std::vector<const JobRecord*> jobs;
  for (const auto& [key, j] : idx.jobs) jobs.push_back(&j);
  std::sort(jobs.begin(), jobs.end(), [](const JobRecord* a, const JobRecord* b) { return a->release < b->release; });

  using Key = std::tuple<int, int, int>;
  auto rank = [&](TaskId id) {
    const int r = pa.rank_of(id);
    return r == 0 ? INT_MAX - 1 : r;
  };
  const bool drop = idx.protocol == "drop";
  std::vector<const Segment*> running;
  std::vector<const JobRecord*> live;
  std::size_t si = 0, ji = 0;
  std::set<std::pair<JobKey, std::string>> reported;
  auto report_once = [&](const JobRecord& j, const char* kind, Time t, std::string detail) {
    if (reported.insert({{j.task, j.k}, kind}).second) add(rep, "dispatch", kind, j, t, std::move(detail));
  };

  for (std::size_t n = 0; n + 1 < instants.size(); ++n) {
    const Time a = instants[n];
    if (a >= idx.horizon) break;
    std::erase_if(running, [&](const Segment* s) { return s->end <= a; });
    while (si < segs.size() && segs[si]->start <= a) {
      if (segs[si]->end > a) running.push_back(segs[si]);
      ++si;
    }
    while (ji < jobs.size() && jobs[ji]->release <= a) live.push_back(jobs[ji++]);
    std::erase_if(live, [&](const JobRecord* j) {
      return (j->finish && *j->finish <= a) || (j->dropped_at && *j->dropped_at <= a);
    });
    ++rep.checked;

    if (static_cast<int>(running.size()) > idx.processors)
      add(rep, "dispatch", "overload", std::nullopt, std::nullopt, a, std::to_string(running.size()) + " running");
    std::set<int> procs;
    std::set<JobKey> run_jobs;
    Key worst{INT_MIN, INT_MIN, INT_MIN};
    for (const Segment* s : running) {
      if (!procs.insert(s->proc).second)
        add(rep, "dispatch", "processor-conflict", s->task, s->k, a, "proc " + std::to_string(s->proc));
      run_jobs.insert({s->task, s->k});
      const auto& j = idx.jobs.at({s->task, s->k});
      const bool rem = j.rem_since && *j.rem_since <= a;
      if ((j.finish && *j.finish <= a) || (j.dropped_at && *j.dropped_at <= a))
        report_once(j, "run-after-end", a, "");
      if (s->slot == SlotKind::Job && rem) report_once(j, "rem-job-in-job-slot", a, "");
      if (s->slot != SlotKind::Job && !rem) report_once(j, "enabled-job-in-rem-slot", a, "");
      if (s->slot != SlotKind::Job && drop) report_once(j, "rem-job-under-drop", a, "");
      Key key;
      if (s->slot == SlotKind::Job)
        key = {rank(s->task), 0, s->k};
      else if (s->slot == SlotKind::Ghost && s->lender_task)
        key = {rank(*s->lender_task), 1, s->lender_k.value_or(0)};
      else
        key = {INT_MAX, 0, 0};
      worst = std::max(worst, key);
    }
    const bool idle = static_cast<int>(running.size()) < idx.processors;
    for (const JobRecord* j : live) {
      if (run_jobs.count({j->task, j->k})) continue;
      const bool rem = j->rem_since && *j->rem_since <= a;
      if (rem) {
        if (idle && !drop) report_once(*j, "rem-job-waits-on-idle", a, "");
        continue;
      }
      if (idle)
        report_once(*j, "ready-job-waits-on-idle", a, "");
      else if (worst > Key{rank(j->task), 0, j->k})
        report_once(*j, "priority-inversion", a, "");
    }
  }
  return rep;
}

CheckReport check_reclaim_accounting(const TraceIndex& idx, const TaskSet& ts, const WcrtTable& wt) {
  CheckReport rep;
  std::map<JobKey, Time> lent;
  std::map<JobKey, std::vector<const Segment*>> lent_segs;
  for (const auto& s : idx.segments) {
    if (s.slot != SlotKind::Ghost) continue;
    if (!s.lender_task || !s.lender_k) {
      add(rep, "reclaim", "ghost-slot-without-lender", s.task, s.k, s.start, "");
      continue;
    }
    const JobKey lender{*s.lender_task, *s.lender_k};
    if (!idx.ghosts.count(lender)) {
      add(rep, "reclaim", "unknown-lender", s.task, s.k, s.start, "");
      continue;
    }
    lent[lender] += s.end - s.start;
    lent_segs[lender].push_back(&s);
  }
  for (const auto& [key, g] : idx.ghosts) {
    ++rep.checked;
    const auto jt = idx.jobs.find(key);
    const MCTask* task = ts.find(key.first);
    if (jt == idx.jobs.end() || !task || !jt->second.finish || !jt->second.exec) {
      add(rep, "reclaim", "ghost-of-unfinished-job", key.first, key.second, g.created, "");
      continue;
    }
    const JobRecord& job = jt->second;
    if (g.kind == "wcet") {
      const Time cap = effective_wcet(*task, g.level, ts.levels);
      if (*job.exec + lent[key] > cap)
        add(rep, "reclaim", "wcet-budget-exceeded", job, g.created,
            "c+lent=" + std::to_string(*job.exec + lent[key]) + " C=" + std::to_string(cap));
    } else {
      if (!wt.has(key.first, g.level)) {
        add(rep, "reclaim", "missing-bound", job, g.created, "");
        continue;
      }
      const Time limit = job.release + wt.at(key.first, g.level);
      for (const Segment* s : lent_segs[key]) {
        if (s->end > limit)
          add(rep, "reclaim", "ghost-past-wcrt", job, s->end, "limit " + std::to_string(limit));
        if (s->start < *job.finish) add(rep, "reclaim", "ghost-before-finish", job, s->start, "");
      }
    }
  }
  return rep;
}

CheckReport check_dmcr(const TraceIndex& idx, const TaskSet& ts) {
  CheckReport rep;
  struct ReEnable {
    Time t;
    Level target;
    Level from;
    Time start;
    std::size_t pos;
  };
  std::vector<ReEnable> reenables;
  std::vector<std::size_t> overrun_pos;
  bool active = false, crossed = false;
  Time start = 0, crossed_at = 0;
  for (std::size_t i = 0; i < idx.mode_events.size(); ++i) {
    const auto& ev = idx.mode_events[i];
    switch (ev.kind) {
      case EventKind::DmcrRequested:
        if (ev.status == "started") {
          active = true;
          crossed = false;
          start = ev.t;
        }
        break;
      case EventKind::BudgetExceeded:
        overrun_pos.push_back(i);
        if (active && !crossed) {
          crossed = true;
          crossed_at = ev.t;
        }
        break;
      case EventKind::ChainAborted:
        if (!active || !crossed)
          add(rep, "dmcr", "abort-without-overrun", std::nullopt, std::nullopt, ev.t, "");
        else if (ev.t != crossed_at)
          add(rep, "dmcr", "late-abort", std::nullopt, std::nullopt, ev.t, "overrun at " + std::to_string(crossed_at));
        active = crossed = false;
        break;
      case EventKind::ReEnabled:
        ++rep.checked;
        if (crossed)
          add(rep, "dmcr", "reenabled-after-overrun", std::nullopt, std::nullopt, ev.t, "");
        reenables.push_back({ev.t, ev.mode, ev.from.value_or(ev.mode), start, i});
        active = crossed = false;
        break;
      default:
        break;
    }
  }
  if (crossed) add(rep, "dmcr", "missing-abort", std::nullopt, std::nullopt, crossed_at, "");

  for (const auto& re : reenables) {
    const bool later_overrun =
        std::any_of(overrun_pos.begin(), overrun_pos.end(), [&](std::size_t p) { return p > re.pos; });
    if (later_overrun) continue;
    for (const auto& [key, job] : idx.jobs) {
      const MCTask* task = ts.find(job.task);
      const Level crit = task ? task->criticality : job.crit;
      const bool kept = crit >= re.from && job.deadline > re.start;
      const bool revived = crit >= re.target && crit < re.from && job.release >= re.t;
      if (!kept && !revived) continue;
      const bool missed = job.miss_at || (job.finish && *job.finish > job.deadline) ||
                          (!job.finish && job.deadline <= idx.horizon);
      if (missed)
        add(rep, "dmcr", kept ? "miss-across-transition" : "miss-after-reenable", job, job.deadline,
            "reenabled at " + std::to_string(re.t));
    }
  }
  return rep;
}

CheckReport check_all(const TraceIndex& idx, const TaskSet& ts, const PriorityAssignment& pa, const WcrtTable& wt,
                      const Scenario* sc) {
  CheckReport rep = check_feasibility(idx, ts);
  if (sc) rep.merge(check_periodicity(idx, ts, *sc));
  rep.merge(check_response_bounds(idx, wt));
  rep.merge(check_dispatch(idx, pa));
  rep.merge(check_reclaim_accounting(idx, ts, wt));
  rep.merge(check_dmcr(idx, ts));
  return rep;
}

CheckReport check_feasibility(const Trace& trace, const TaskSet& ts) { return check_feasibility(index_trace(trace), ts); }
CheckReport check_periodicity(const Trace& trace, const TaskSet& ts, const Scenario& sc) {
  return check_periodicity(index_trace(trace), ts, sc);
}
CheckReport check_response_bounds(const Trace& trace, const WcrtTable& wt) {
  return check_response_bounds(index_trace(trace), wt);
}
CheckReport check_dispatch(const Trace& trace, const PriorityAssignment& pa) {
  return check_dispatch(index_trace(trace), pa);
}
CheckReport check_reclaim_accounting(const Trace& trace, const TaskSet& ts, const WcrtTable& wt) {
  return check_reclaim_accounting(index_trace(trace), ts, wt);
}
CheckReport check_dmcr(const Trace& trace, const TaskSet& ts) { return check_dmcr(index_trace(trace), ts); }
CheckReport check_all(const Trace& trace, const TaskSet& ts, const PriorityAssignment& pa, const WcrtTable& wt,
                      const Scenario* sc) {
  return check_all(index_trace(trace), ts, pa, wt, sc);
}

Time brute_force_workload(const MCTask& tj, Time delta, Level level, bool carry_in) {
  if (tj.period > 12 || delta > 40)
    throw Error(ErrorCode::ParameterTooLarge, "brute force needs T <= 12 and delta <= 40");
  if (delta < 0 || level < 1) throw Error(ErrorCode::InvalidParameter, "negative window or level");
  const Level levels = std::max<Level>(level, static_cast<Level>(tj.wcet.size()));
  const Time c = effective_wcet(tj, level, levels);
  const Time t = tj.period;
  const Time d = tj.deadline;
  auto contrib = [&](Time r) { return std::min(c, std::max<Time>(0, std::min(r + d, delta) - std::max<Time>(r, 0))); };
  // best[x]: maximum over release sequences whose first release is >= x.
  std::vector<Time> best(static_cast<std::size_t>(delta + t + 1), 0);
  for (Time x = delta - 1; x >= 0; --x) {
    Time take = contrib(x) + (x + t <= delta ? best[static_cast<std::size_t>(x + t)] : 0);
    best[static_cast<std::size_t>(x)] = std::max(best[static_cast<std::size_t>(x + 1)], take);
  }
  auto tail = [&](Time x) { return x < delta ? best[static_cast<std::size_t>(x)] : 0; };
  if (!carry_in) return tail(0);
  Time out = 0;
  for (Time r = -t; r < 0; ++r) out = std::max(out, contrib(r) + tail(r + t));
  return out;
}

BasicScenarioEnumerator::BasicScenarioEnumerator(const TaskSet& ts, Time horizon,
                                                 const std::map<TaskId, std::vector<Time>>& arrivals)
    : ts_(ts) {
  base_.horizon = horizon;
  for (const auto& [id, times] : arrivals) {
    if (!ts_.find(id)) throw Error(ErrorCode::UnknownTask, "task " + std::to_string(id));
    auto& ta = base_.tasks[id];
    for (Time a : times)
      if (a < horizon) ta.arrivals.push_back(a);
    ta.exec_times.assign(ta.arrivals.size(), 0);
  }
  for (const auto& [id, ta] : base_.tasks)
    for (std::size_t i = 0; i < ta.arrivals.size(); ++i) slots_.push_back({&ts_.at(id), i});
  if (slots_.size() > 12) throw Error(ErrorCode::ParameterTooLarge, "more than 12 jobs to enumerate");
  digits_.assign(slots_.size(), 1);
  for (const auto& s : slots_) count_ *= static_cast<std::size_t>(s.task->criticality);
}

bool BasicScenarioEnumerator::next(Scenario& out) {
  if (done_) return false;
  out = base_;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    const auto& s = slots_[i];
    out.tasks[s.task->id].exec_times[s.index] = effective_wcet(*s.task, digits_[i], ts_.levels);
  }
  std::size_t i = 0;
  for (; i < slots_.size(); ++i) {
    if (digits_[i] < slots_[i].task->criticality) {
      ++digits_[i];
      break;
    }
    digits_[i] = 1;
  }
  if (i == slots_.size()) done_ = true;
  return true;
}

std::vector<Scenario> enumerate_basic_scenarios(const TaskSet& ts, Time horizon,
                                                const std::map<TaskId, std::vector<Time>>& arrivals) {
  BasicScenarioEnumerator en(ts, horizon, arrivals);
  std::vector<Scenario> out;
  out.reserve(en.count());
  Scenario sc;
  while (en.next(sc)) out.push_back(sc);
  return out;
}

TraceMetrics metrics(const TraceIndex& idx) {
  TraceMetrics m;
  m.idle = idx.idle;
  m.idle.resize(std::max(m.idle.size(), static_cast<std::size_t>(std::max(idx.processors, 0))), 0);
  std::map<TaskId, std::pair<Time, std::size_t>> sums;
  Time tard_sum = 0, rem_resp_sum = 0;
  std::size_t rem_resp_n = 0;
  for (const auto& [key, job] : idx.jobs) {
    if (job.miss_at) {
      ++m.misses;
      if (job.crit == idx.levels) ++m.misses_hi;
    }
    if (job.rem_since || job.dropped_at) {
      RemJobOutcome o;
      o.task = job.task;
      o.k = job.k;
      o.release = job.release;
      o.deadline = job.deadline;
      o.demoted = job.rem_since.value_or(job.dropped_at.value_or(0));
      o.finish = job.finish;
      o.dropped = job.dropped_at.has_value();
      if (o.dropped) {
        ++m.rem_dropped;
      } else {
        rem_resp_sum += job.finish.value_or(idx.horizon) - job.release;
        ++rem_resp_n;
      }
      if (job.finish) {
        ++m.rem_completed;
        o.tardiness = std::max<Time>(0, *job.finish - job.deadline);
        tard_sum += o.tardiness;
        m.max_tardiness = std::max(m.max_tardiness, o.tardiness);
      }
      m.rem_jobs.push_back(o);
      continue;
    }
    if (!job.finish) continue;
    const Time resp = *job.finish - job.release;
    auto& st = m.response[job.task];
    ++st.count;
    st.max = std::max(st.max, resp);
    sums[job.task].first += resp;
    if (job.exec) m.interference[job.task].push_back(resp - *job.exec);
  }
  for (auto& [id, st] : m.response) st.mean = static_cast<double>(sums[id].first) / static_cast<double>(st.count);
  if (m.rem_completed) m.mean_tardiness = static_cast<double>(tard_sum) / static_cast<double>(m.rem_completed);
  if (rem_resp_n) m.mean_rem_response = static_cast<double>(rem_resp_sum) / static_cast<double>(rem_resp_n);

  std::map<TaskId, std::size_t> open;
  for (const auto& ev : idx.mode_events) {
    if (ev.kind == EventKind::BudgetExceeded) {
      for (TaskId id : ev.tasks) {
        open[id] = m.suspensions.size();
        m.suspensions.push_back({id, ev.t, std::nullopt});
      }
    } else if (ev.kind == EventKind::ReEnabled) {
      for (TaskId id : ev.tasks) {
        auto it = open.find(id);
        if (it == open.end()) continue;
        m.suspensions[it->second].reenabled = ev.t;
        open.erase(it);
      }
    } else if (ev.kind == EventKind::ChainAborted) {
      ++m.chain_aborts;
    }
  }
  Time susp_sum = 0;
  std::size_t susp_n = 0;
  for (const auto& s : m.suspensions)
    if (s.reenabled) {
      susp_sum += *s.reenabled - s.suspended;
      ++susp_n;
    }
  if (susp_n) m.mean_susp_delay = static_cast<double>(susp_sum) / static_cast<double>(susp_n);
  return m;
}

TraceMetrics metrics(const Trace& trace) { return metrics(index_trace(trace)); }

}  // namespace mcs
