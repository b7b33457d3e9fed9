#include "mcs/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mcs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DeadlineExceedsPeriod: return "DeadlineExceedsPeriod";
    case ErrorCode::NonMonotoneWcet: return "NonMonotoneWcet";
    case ErrorCode::CriticalityAboveLambda: return "CriticalityAboveLambda";
    case ErrorCode::WcetExceedsDeadline: return "WcetExceedsDeadline";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownTask: return "UnknownTask";
    case ErrorCode::MinInterArrivalViolated: return "MinInterArrivalViolated";
    case ErrorCode::ExecTimeOutOfRange: return "ExecTimeOutOfRange";
    case ErrorCode::InvalidDmcrTarget: return "InvalidDmcrTarget";
    case ErrorCode::SameTask: return "SameTask";
    case ErrorCode::InconsistentInputs: return "InconsistentInputs";
    case ErrorCode::ModelViolation: return "ModelViolation";
    case ErrorCode::InvalidTarget: return "InvalidTarget";
    case ErrorCode::MalformedTrace: return "MalformedTrace";
    case ErrorCode::ParameterTooLarge: return "ParameterTooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) os << "; ";
    os << to_string(issues[i].code);
    if (issues[i].task) os << " (task " << *issues[i].task << ")";
    os << ": " << issues[i].message;
  }
  return os.str();
}

ErrorCode first_code(const std::vector<Issue>& issues) {
  return issues.empty() ? ErrorCode::InvalidParameter : issues.front().code;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(first_code(issues), join_issues(issues)), issues_(std::move(issues)) {}

bool ValidationError::has(ErrorCode code) const {
  return std::any_of(issues_.begin(), issues_.end(),
                     [code](const Issue& i) { return i.code == code; });
}

const MCTask* TaskSet::find(TaskId id) const {
  for (const auto& t : tasks)
    if (t.id == id) return &t;
  return nullptr;
}

const MCTask& TaskSet::at(TaskId id) const {
  if (const auto* t = find(id)) return *t;
  throw Error(ErrorCode::UnknownTask, "no task with id " + std::to_string(id));
}

Time TaskSet::max_period() const {
  Time best = 0;
  for (const auto& t : tasks) best = std::max(best, t.period);
  return best;
}

Time effective_wcet(const MCTask& task, Level level, Level levels) {
  if (level < 1 || level > levels)
    throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(level) +
                                                " outside [1, " + std::to_string(levels) + "]");
  const auto idx = static_cast<std::size_t>(std::min(level, task.criticality) - 1);
  if (idx >= task.wcet.size())
    throw Error(ErrorCode::InvalidParameter,
                "task " + std::to_string(task.id) + " has no WCET for level " + std::to_string(level));
  return task.wcet[idx];
}

bool mode_membership(const MCTask& task, Level level, Level levels) {
  if (level < 1 || level > levels)
    throw Error(ErrorCode::LevelOutOfRange, "level " + std::to_string(level) +
                                                " outside [1, " + std::to_string(levels) + "]");
  return level <= task.criticality;
}

TaskSet validate_taskset(const TaskSet& ts, const Platform& platform) {
  std::vector<Issue> issues;
  auto add = [&](ErrorCode c, std::optional<int> task, std::string msg) {
    issues.push_back({c, task, std::move(msg)});
  };

  if (platform.processors < 1) add(ErrorCode::InvalidParameter, std::nullopt, "processor count must be >= 1");
  if (ts.levels < 1) add(ErrorCode::InvalidParameter, std::nullopt, "criticality_levels must be >= 1");

  TaskSet out = ts;
  std::set<TaskId> seen;
  for (auto& task : out.tasks) {
    const TaskId id = task.id;
    if (!seen.insert(id).second) add(ErrorCode::DuplicateId, id, "task id appears more than once");
    if (task.period < 1) add(ErrorCode::InvalidParameter, id, "T must be >= 1");
    if (task.deadline < 1) add(ErrorCode::InvalidParameter, id, "D must be >= 1");
    if (task.deadline > task.period)
      add(ErrorCode::DeadlineExceedsPeriod, id,
          "D=" + std::to_string(task.deadline) + " exceeds T=" + std::to_string(task.period));
    if (task.criticality < 1) {
      add(ErrorCode::InvalidParameter, id, "L must be >= 1");
      continue;
    }
    if (task.criticality > ts.levels) {
      add(ErrorCode::CriticalityAboveLambda, id,
          "L=" + std::to_string(task.criticality) + " exceeds system level count " +
              std::to_string(ts.levels));
      continue;
    }
    const auto L = static_cast<std::size_t>(task.criticality);
    const auto n = task.wcet.size();
    if (n != L && n != static_cast<std::size_t>(ts.levels)) {
      add(ErrorCode::InvalidParameter, id,
          "C has " + std::to_string(n) + " entries; expected L or criticality_levels");
      continue;
    }
    bool ok = true;
    for (std::size_t l = 0; l < n; ++l) {
      if (task.wcet[l] < 1) {
        add(ErrorCode::InvalidParameter, id, "C(" + std::to_string(l + 1) + ") must be >= 1");
        ok = false;
      }
    }
    for (std::size_t l = 0; l + 1 < L; ++l) {
      if (task.wcet[l] > task.wcet[l + 1]) {
        add(ErrorCode::NonMonotoneWcet, id,
            "C(" + std::to_string(l + 1) + ") > C(" + std::to_string(l + 2) + ")");
        ok = false;
      }
    }
    for (std::size_t l = L; l < n; ++l) {
      if (task.wcet[l] != task.wcet[L - 1]) {
        add(ErrorCode::NonMonotoneWcet, id,
            "C(" + std::to_string(l + 1) + ") differs from C(L) above the task's criticality");
        ok = false;
      }
    }
    if (!ok) continue;
    if (task.wcet[L - 1] > task.deadline)
      add(ErrorCode::WcetExceedsDeadline, id,
          "C(L)=" + std::to_string(task.wcet[L - 1]) + " exceeds D=" + std::to_string(task.deadline));
    task.wcet.resize(static_cast<std::size_t>(ts.levels), task.wcet[L - 1]);
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));
  return out;
}

void validate_scenario(const Scenario& sc, const TaskSet& ts) {
  std::vector<Issue> issues;
  auto add = [&](ErrorCode c, std::optional<int> task, std::string msg) {
    issues.push_back({c, task, std::move(msg)});
  };

  if (sc.horizon < 0) add(ErrorCode::InvalidParameter, std::nullopt, "horizon must be >= 0");
  for (const auto& [id, ta] : sc.tasks) {
    const MCTask* task = ts.find(id);
    if (!task) {
      add(ErrorCode::UnknownTask, id, "scenario references an unknown task");
      continue;
    }
    if (ta.arrivals.size() != ta.exec_times.size()) {
      add(ErrorCode::InvalidParameter, id, "arrivals and exec_times differ in length");
      continue;
    }
    for (std::size_t k = 0; k < ta.arrivals.size(); ++k) {
      if (ta.arrivals[k] < 0) add(ErrorCode::InvalidParameter, id, "negative arrival time");
      if (k > 0 && ta.arrivals[k] - ta.arrivals[k - 1] < task->period)
        add(ErrorCode::MinInterArrivalViolated, id,
            "arrivals " + std::to_string(ta.arrivals[k - 1]) + " and " +
                std::to_string(ta.arrivals[k]) + " closer than T=" + std::to_string(task->period));
      const Time c_max = task->wcet.at(static_cast<std::size_t>(task->criticality - 1));
      if (ta.exec_times[k] < 1 || ta.exec_times[k] > c_max)
        add(ErrorCode::ExecTimeOutOfRange, id,
            "exec time " + std::to_string(ta.exec_times[k]) + " outside [1, " + std::to_string(c_max) + "]");
    }
  }
  for (const auto& r : sc.dmcr_requests) {
    if (r.time < 0) add(ErrorCode::InvalidParameter, std::nullopt, "negative DMCR request time");
    if (r.target < 1 || r.target >= ts.levels)
      add(ErrorCode::InvalidDmcrTarget, std::nullopt,
          "DMCR target " + std::to_string(r.target) + " outside [1, " + std::to_string(ts.levels) + ")");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

void apply_basic_levels(Scenario& sc, const TaskSet& ts, const BasicLevelAssignment& levels) {
  for (const auto& [id, per_job] : levels) {
    const MCTask& task = ts.at(id);
    auto& ta = sc.tasks[id];
    if (per_job.size() != ta.arrivals.size())
      throw Error(ErrorCode::InvalidParameter, "level assignment length mismatch for task " + std::to_string(id));
    ta.exec_times.resize(per_job.size());
    for (std::size_t k = 0; k < per_job.size(); ++k) {
      if (per_job[k] < 1 || per_job[k] > task.criticality)
        throw Error(ErrorCode::LevelOutOfRange, "basic level outside [1, L]");
      ta.exec_times[k] = task.wcet.at(static_cast<std::size_t>(per_job[k] - 1));
    }
  }
}

bool is_basic(const Scenario& sc, const TaskSet& ts) {
  for (const auto& [id, ta] : sc.tasks) {
    const MCTask& task = ts.at(id);
    for (Time c : ta.exec_times) {
      bool found = false;
      for (Level l = 1; l <= task.criticality && !found; ++l)
        found = task.wcet.at(static_cast<std::size_t>(l - 1)) == c;
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace mcs
