#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copath/cut_count.hpp"
#include "copath/graph.hpp"

namespace copath {

enum class Engine { kAuto, kDp, kBrute };

struct SolverConfig {
  int degree_cap = 10;       // valid range 10..17 for the dp/auto engines
  double confidence = 0.99;  // target success probability for yes-instances
  std::uint64_t seed = 1;
  Engine engine = Engine::kAuto;
  bool use_kernel = true;
  JoinPolicy join_policy = JoinPolicy::kAuto;
  int threads = 0;      // 0 = library default
  bool trace_dp = false;  // per-node table sizes to stderr; forces serial runs
};

struct Witness {
  int k1 = 0;
  int instance = 0;
  std::uint64_t seed = 0;  // weight seed that produced odd parity (dp jobs)
};

// Outcome plus enough bookkeeping to reproduce it. Deterministic for a fixed
// config regardless of thread schedule: jobs are ranked (k1, instance,
// repetition) and the reported answer is the first yes in that order.
struct Decision {
  bool yes = false;
  int k = 0;
  int runs = 0;  // jobs consumed in canonical order
  std::optional<Witness> witness;

  int kernel_n = 0, kernel_m = 0, kernel_k = 0;
  bool kernel_forced_no = false;
  std::vector<int> k1_values;
  std::vector<std::size_t> instances_per_k1;
  std::vector<std::uint64_t> leaf_bound_per_k1;
  int repetitions = 0;  // dp repetitions per instance
  int max_bag = 0;
  std::size_t table_peak = 0;
  double kernel_ms = 0, branch_ms = 0, solve_ms = 0, total_ms = 0;
  std::string engine_used;
};

// Repetitions needed to push the one-sided failure probability 1/3 below
// 1 - confidence.
int amplification_rounds(double confidence);

// Kernel, then a sweep over branch budgets k1 (multiples of degree_cap - 1;
// other values provably produce nothing), then per reduced instance either
// the exhaustive check (auto engine, small instances) or the randomized DP
// with fresh weights per repetition. Yes answers are exact; a no is wrong
// with probability at most 1 - confidence per yes-instance.
Decision copath_decide(const Graph& g, int k, const SolverConfig& cfg);

}  // namespace copath
