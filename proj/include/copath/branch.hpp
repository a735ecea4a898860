#pragma once

#include <cstdint>
#include <vector>

#include "copath/graph.hpp"

namespace copath {

// Bounded-degree subgraph of the input plus its residual budget.
struct ReducedInstance {
  Graph graph;
  int k = 0;

  friend bool operator==(const ReducedInstance&, const ReducedInstance&) = default;
};

// Degree branching: picks a maximum-degree vertex v; while deg(v) > D and
// the deletion budget allows, keeps each unordered pair of the D+1 lowest-id
// incident edges and recurses on the graph minus the other D-1. A branch
// survives only if its budget lands exactly on zero with max degree <= D.
// Results are dedup'd on the surviving edge set and sorted canonically.
//
// At the top-level call, budget = total_deleted. Only total_deleted values
// divisible by D-1 can produce instances.
std::vector<ReducedInstance> deg_branch(const Graph& g, int k,
                                        int total_deleted, int degree_cap,
                                        int budget);

// ceil(C(D+1,2)^(l/(D-1))); exact integer power when (D-1) | l, saturating
// at uint64 max.
std::uint64_t leaf_bound(int total_deleted, int degree_cap);

}  // namespace copath
