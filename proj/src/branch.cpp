#include "copath/branch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace copath {

namespace {

void branch_rec(const Graph& g, int degree_cap, int budget,
                std::set<std::vector<int>>& survivors) {
  int v = 0, best = -1;
  for (int u = 1; u <= g.vertex_count(); ++u)
    if (g.degree(u) > best) {
      best = g.degree(u);
      v = u;
    }
  const int deg = v == 0 ? 0 : g.degree(v);

  if (deg >= degree_cap + 1 && budget >= degree_cap - 1) {
    const auto& nbrs = g.neighbors(v);  // sorted by neighbor id
    std::vector<int> incident;          // edge ids of the D+1 chosen edges
    for (int i = 0; i <= degree_cap; ++i) incident.push_back(nbrs[i].second);
    for (std::size_t a = 0; a < incident.size(); ++a) {
      for (std::size_t b = a + 1; b < incident.size(); ++b) {
        std::vector<int> removed;
        for (std::size_t j = 0; j < incident.size(); ++j)
          if (j != a && j != b) removed.push_back(incident[j]);
        branch_rec(g.delete_edges(removed), degree_cap,
                   budget - (degree_cap - 1), survivors);
      }
    }
    return;
  }
  if (budget == 0 && deg <= degree_cap) {
    survivors.insert(g.edge_ids());
    return;
  }
  // Dead branch: budget left over or still too dense.
}

}  // namespace

std::vector<ReducedInstance> deg_branch(const Graph& g, int k,
                                        int total_deleted, int degree_cap,
                                        int budget) {
  if (degree_cap < 3) throw std::invalid_argument("degree cap below 3");
  if (total_deleted < 0 || budget < 0)
    throw std::invalid_argument("negative deletion budget");

  std::set<std::vector<int>> survivors;
  branch_rec(g, degree_cap, budget, survivors);

  std::vector<ReducedInstance> out;
  out.reserve(survivors.size());
  for (const auto& ids : survivors) {
    // Complement the surviving set against the input's edge ids.
    std::vector<int> removed;
    std::set_difference(g.edge_ids().begin(), g.edge_ids().end(), ids.begin(),
                        ids.end(), std::back_inserter(removed));
    out.push_back(ReducedInstance{g.delete_edges(removed), k - total_deleted});
  }
  return out;  // std::set iteration is already the canonical order
}

std::uint64_t leaf_bound(int total_deleted, int degree_cap) {
  if (degree_cap < 2) throw std::invalid_argument("degree cap below 2");
  if (total_deleted == 0) return 1;
  const std::uint64_t base =
      static_cast<std::uint64_t>(degree_cap + 1) * degree_cap / 2;
  const int step = degree_cap - 1;
  if (total_deleted % step == 0) {
    std::uint64_t result = 1;
    for (int i = 0; i < total_deleted / step; ++i) {
      if (result > std::numeric_limits<std::uint64_t>::max() / base)
        return std::numeric_limits<std::uint64_t>::max();
      result *= base;
    }
    return result;
  }
  const long double value =
      std::pow(static_cast<long double>(base),
               static_cast<long double>(total_deleted) / step);
  if (value >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(value));
}

}  // namespace copath
