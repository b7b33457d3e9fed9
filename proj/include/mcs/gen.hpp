#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mcs/model.hpp"

namespace mcs {

// Seeded generator with a portable output sequence: std::mt19937_64 (its
// recurrence and seeding are fixed by the C++ standard) plus our own range
// reduction, because the standard distributions differ across libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform integer in [lo, hi] by rejection sampling.
  Time uniform_int(Time lo, Time hi);
  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 eng_;
};

// splitmix64 finalizer over (seed, index): child seeds for parallel work.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct GenParams {
  int n = 4;
  int processors = 2;
  Level levels = 2;
  double utilization = 1.0;  // target for the sum of C_i(1) / T_i
  Time period_min = 10;
  Time period_max = 100;
  double deadline_ratio = 1.0;  // D drawn from [max(C(1), ceil(ratio * T)), T]
  double wcet_factor = 1.5;     // C(l + 1) = ceil(factor * C(l)), clamped to D
  std::vector<double> crit_weights;  // weight of levels 1..levels; empty means uniform
  std::uint64_t seed = 1;
  int max_retries = 1000;
};

// UUniFast-discard utilizations, integer periods, WCET inflation per level.
// Throws Error(InvalidParameter) for bad parameters and Error(Infeasible)
// when no set within the utilization tolerance is found.
TaskSet gen_taskset(const GenParams& gp);

struct ExecModel {
  enum class Kind {
    Uniform,          // c drawn from [1, C(L)]
    BasicRandom,      // one level per job, c = C(level)
    OverrunInjecting, // one job overruns C(level); every other c within [1, C(1)]
  };
  Kind kind = Kind::Uniform;
  Level level = 1;
};

struct DmcrPlan {
  enum class Kind {
    None,
    Fixed,         // requests as listed
    Random,        // `count` requests, uniform time, uniform target in [1, levels - 1]
    AfterOverrun,  // one request `delay` after the injected job arrives, to `target`
  };
  Kind kind = Kind::None;
  std::vector<DmcrRequest> fixed;
  int count = 1;
  Time delay = 0;
  Level target = 1;
};

// Sporadic arrivals: first within [0, T), then gaps of T plus, with
// probability 1/2, an extra delay drawn from [1, max(1, T / 2)].
Scenario gen_scenario(const TaskSet& ts, Time horizon, std::uint64_t seed, const ExecModel& exec = {},
                      const DmcrPlan& dmcr = {});

}  // namespace mcs
