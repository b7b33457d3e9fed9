#include "mcs/trace.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

namespace mcs {

using nlohmann::ordered_json;

namespace {

constexpr std::array<std::string_view, 18> kKindNames = {
    "Start",         "Release",      "Dispatch",     "Preempt",      "Complete",   "BudgetExceeded",
    "RemJob",        "JobDropped",   "GhostCreated", "GhostRetired", "DmcrRequested", "ChainAdvance",
    "ChainAborted",  "ChainStalled", "ReEnabled",    "DeadlineMiss", "Idle",       "End"};

template <typename T>
void put(ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

void put(ordered_json& j, const char* key, const std::string& v) {
  if (!v.empty()) j[key] = v;
}

template <typename T>
void get(const ordered_json& j, const char* key, std::optional<T>& out) {
  auto it = j.find(key);
  if (it != j.end() && !it->is_null()) out = it->get<T>();
}

void get(const ordered_json& j, const char* key, std::string& out) {
  auto it = j.find(key);
  if (it != j.end() && !it->is_null()) out = it->get<std::string>();
}

}  // namespace

std::string_view to_string(EventKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<EventKind> event_kind_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == s) return static_cast<EventKind>(i);
  return std::nullopt;
}

std::string_view to_string(SlotKind slot) {
  switch (slot) {
    case SlotKind::Job: return "job";
    case SlotKind::Ghost: return "ghost";
    case SlotKind::Background: return "background";
  }
  return "job";
}

std::string to_json_line(const TraceEvent& ev) {
  ordered_json j;
  j["t"] = ev.t;
  j["kind"] = to_string(ev.kind);
  j["task"] = ev.task ? ordered_json(*ev.task) : ordered_json(nullptr);
  j["k"] = ev.k ? ordered_json(*ev.k) : ordered_json(nullptr);
  j["proc"] = ev.proc ? ordered_json(*ev.proc) : ordered_json(nullptr);
  j["mode"] = ev.mode;
  put(j, "horizon", ev.horizon);
  put(j, "processors", ev.processors);
  put(j, "levels", ev.levels);
  put(j, "protocol", ev.protocol);
  put(j, "rem_order", ev.rem_order);
  put(j, "d", ev.deadline);
  put(j, "crit", ev.crit);
  if (ev.slot) j["slot"] = to_string(*ev.slot);
  put(j, "lender_task", ev.lender_task);
  put(j, "lender_k", ev.lender_k);
  put(j, "r", ev.release);
  put(j, "c", ev.exec);
  put(j, "from", ev.from);
  put(j, "executed", ev.executed);
  if (ev.kind == EventKind::BudgetExceeded || ev.kind == EventKind::ReEnabled) j["tasks"] = ev.tasks;
  put(j, "ghost", ev.ghost);
  put(j, "budget", ev.budget);
  put(j, "until", ev.until);
  put(j, "consumed", ev.consumed);
  put(j, "reason", ev.reason);
  put(j, "target", ev.target);
  put(j, "status", ev.status);
  put(j, "cursor", ev.cursor);
  return j.dump();
}

std::string to_jsonl(const Trace& trace) {
  std::string out;
  for (const auto& ev : trace.events) {
    out += to_json_line(ev);
    out += '\n';
  }
  return out;
}

Trace parse_jsonl(const std::string& text) {
  Trace trace;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "trace line " + std::to_string(lineno);
    try {
      const auto j = ordered_json::parse(line);
      TraceEvent ev;
      ev.t = j.at("t").get<Time>();
      const auto kind = event_kind_from_string(j.at("kind").get<std::string>());
      if (!kind) throw Error(ErrorCode::MalformedTrace, where + ": unknown event kind");
      ev.kind = *kind;
      get(j, "task", ev.task);
      get(j, "k", ev.k);
      get(j, "proc", ev.proc);
      ev.mode = j.at("mode").get<Level>();
      get(j, "horizon", ev.horizon);
      get(j, "processors", ev.processors);
      get(j, "levels", ev.levels);
      get(j, "protocol", ev.protocol);
      get(j, "rem_order", ev.rem_order);
      get(j, "d", ev.deadline);
      get(j, "crit", ev.crit);
      if (auto it = j.find("slot"); it != j.end()) {
        const auto s = it->get<std::string>();
        if (s == "job") ev.slot = SlotKind::Job;
        else if (s == "ghost") ev.slot = SlotKind::Ghost;
        else if (s == "background") ev.slot = SlotKind::Background;
        else throw Error(ErrorCode::MalformedTrace, where + ": unknown slot kind");
      }
      get(j, "lender_task", ev.lender_task);
      get(j, "lender_k", ev.lender_k);
      get(j, "r", ev.release);
      get(j, "c", ev.exec);
      get(j, "from", ev.from);
      get(j, "executed", ev.executed);
      if (auto it = j.find("tasks"); it != j.end()) ev.tasks = it->get<std::vector<TaskId>>();
      get(j, "ghost", ev.ghost);
      get(j, "budget", ev.budget);
      get(j, "until", ev.until);
      get(j, "consumed", ev.consumed);
      get(j, "reason", ev.reason);
      get(j, "target", ev.target);
      get(j, "status", ev.status);
      get(j, "cursor", ev.cursor);
      trace.events.push_back(std::move(ev));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::MalformedTrace, where + ": " + e.what());
    }
  }
  return trace;
}

}  // namespace mcs
