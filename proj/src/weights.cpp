#include "copath/weights.hpp"

#include <random>

namespace copath {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

WeightAssignment sample_weights(const Graph& g, std::uint64_t seed) {
  WeightAssignment w;
  if (g.edge_count() == 0) return w;
  w.upper = 6 * g.edge_count();
  w.edge_weight.assign(g.max_edge_id() + 1, 0);
  w.marker_weight.assign(g.max_edge_id() + 1, 0);
  // Draw via modulo rather than uniform_int_distribution: the latter is not
  // reproducible across standard library implementations.
  std::mt19937_64 rng(seed);
  for (int id : g.edge_ids()) {
    w.edge_weight[id] = 1 + static_cast<int>(rng() % w.upper);
    w.marker_weight[id] = 1 + static_cast<int>(rng() % w.upper);
  }
  return w;
}

}  // namespace copath
