#pragma once

#include <cstdint>
#include <vector>

#include "copath/graph.hpp"

namespace copath {

// Two independent weights per edge, indexed by edge id: one for the edge's
// role in a surviving path system, one for its role as a marker. Both drawn
// uniformly from [1, N] with N = 6|E|, which keeps the chance that random
// weights fail to isolate a minimum-weight solution below 1/3.
struct WeightAssignment {
  int upper = 0;                    // N = 6|E|
  std::vector<int> edge_weight;     // by edge id; 0 where the id is absent
  std::vector<int> marker_weight;

  int edge_w(int id) const { return edge_weight[id]; }
  int marker_w(int id) const { return marker_weight[id]; }
};

// Deterministic for a fixed seed. Edgeless graphs yield an empty assignment.
WeightAssignment sample_weights(const Graph& g, std::uint64_t seed);

// splitmix64; used to derive independent per-job seeds from one base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

}  // namespace copath
