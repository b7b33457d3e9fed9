#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "mcs/analysis.hpp"
#include "mcs/trace.hpp"

namespace mcs {

// How rem-jobs (available jobs of freshly suspended tasks) are handled after a
// budget overrun raises the criticality level.
enum class ImcrProtocol {
  Drop,          // discard them at the mode change
  Naive,         // run them below every enabled task
  WcetReclaim,   // also lend them the unused WCET budget of completed jobs
  WcrtSimulate,  // also lend them the slot a completed job would hold until r + R(l)
};

enum class RemOrder {
  CritThenEdf,  // higher criticality, then earlier deadline
  Edf,
  Srpt,         // least remaining WCET budget C(L) - executed
};

std::string_view to_string(ImcrProtocol p);
std::optional<ImcrProtocol> protocol_from_string(std::string_view s);
std::string_view to_string(RemOrder o);
std::optional<RemOrder> rem_order_from_string(std::string_view s);

struct ProtocolConfig {
  ImcrProtocol imcr_protocol = ImcrProtocol::Drop;
  RemOrder rem_order = RemOrder::CritThenEdf;
  bool cap_enabled = true;  // analysis setting the WCRT table was computed with
};

enum class Phase { Steady, ImcrTransition, DmcrChain };

enum class GhostKind { WcetReclaim, WcrtSimulate };

struct GhostJob {
  TaskId task = 0;
  int k = 0;
  int priority = 0;
  GhostKind kind = GhostKind::WcetReclaim;
  Time budget = 0;    // WcetReclaim: C(l') - c
  Time until = 0;     // WcrtSimulate: r + R(l')
  Time consumed = 0;
  Level level = 1;    // level when created
};

struct JobRef {
  TaskId task = 0;
  int k = 0;
  bool operator==(const JobRef&) const = default;
};

struct ModeState {
  Level level = 1;
  Phase phase = Phase::Steady;
  std::vector<TaskId> enabled;
  std::vector<JobRef> rem_jobs;
  std::vector<GhostJob> ghosts;
  std::optional<Level> chain_target;
  std::vector<TaskId> chain_tasks;  // tasks of the old mode, priority order
  std::size_t chain_cursor = 0;
  std::optional<Level> pending_dmcr;
};

// Integer-time simulation of global preemptive static-priority scheduling
// with execution monitoring, task suspension and the mode-change protocols.
// Same-instant order: completions, deadline checks, overrun detection, DMCR
// intake, chain qualification, releases, dispatch.
class Simulator {
 public:
  Simulator(const TaskSet& ts, const Platform& platform, const PriorityAssignment& pa, const WcrtTable& wt,
            const Scenario& sc, const ProtocolConfig& cfg);
  ~Simulator();
  Simulator(Simulator&&) noexcept;
  Simulator& operator=(Simulator&&) noexcept;

  // Processes every instant strictly before `t` (capped at the horizon).
  void run_until(Time t);
  // Queues a decreasing mode change request for the current instant.
  // Throws Error(InvalidTarget) unless 1 <= target < current level.
  void request_dmcr(Level target);
  // Runs to the horizon and returns the trace.
  Trace finish();

  Time now() const;
  ModeState mode_state() const;
  const Trace& trace() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Trace simulate(const TaskSet& ts, const Platform& platform, const PriorityAssignment& pa, const WcrtTable& wt,
               const Scenario& sc, const ProtocolConfig& cfg);

}  // namespace mcs
