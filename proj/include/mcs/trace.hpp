#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

enum class EventKind {
  Start,
  Release,
  Dispatch,
  Preempt,
  Complete,
  BudgetExceeded,
  RemJob,
  JobDropped,
  GhostCreated,
  GhostRetired,
  DmcrRequested,
  ChainAdvance,
  ChainAborted,
  ChainStalled,
  ReEnabled,
  DeadlineMiss,
  Idle,
  End,
};

std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view s);

// Which kind of processor slot a Dispatch fills.
enum class SlotKind { Job, Ghost, Background };

std::string_view to_string(SlotKind slot);

// One trace record. The first six fields are present on every line; the rest
// are filled only for the kinds that use them.
struct TraceEvent {
  Time t = 0;
  EventKind kind = EventKind::Start;
  std::optional<TaskId> task;
  std::optional<int> k;
  std::optional<int> proc;
  Level mode = 1;

  // Start
  std::optional<Time> horizon;
  std::optional<int> processors;
  std::optional<Level> levels;
  std::string protocol;
  std::string rem_order;
  // Release, RemJob, DeadlineMiss
  std::optional<Time> deadline;
  std::optional<Level> crit;
  // Dispatch
  std::optional<SlotKind> slot;
  std::optional<TaskId> lender_task;
  std::optional<int> lender_k;
  // Complete
  std::optional<Time> release;
  std::optional<Time> exec;
  // BudgetExceeded, ReEnabled
  std::optional<Level> from;
  std::optional<Time> executed;
  std::vector<TaskId> tasks;
  // GhostCreated, GhostRetired, JobDropped
  std::string ghost;
  std::optional<Time> budget;
  std::optional<Time> until;  // also Idle
  std::optional<Time> consumed;
  std::string reason;
  // DMCR
  std::optional<Level> target;
  std::string status;
  std::optional<int> cursor;

  bool operator==(const TraceEvent&) const = default;
};

struct Trace {
  std::vector<TraceEvent> events;

  bool operator==(const Trace&) const = default;
};

// One JSON object per line, fixed field order.
std::string to_jsonl(const Trace& trace);
std::string to_json_line(const TraceEvent& ev);
Trace parse_jsonl(const std::string& text);

}  // namespace mcs
