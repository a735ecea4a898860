#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "copath/graph.hpp"

namespace copath {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;           // sorted vertex lists
  std::vector<std::pair<int, int>> tree_edges;  // indices into bags

  int width() const;
};

enum class NodeType {
  kLeaf,
  kIntroduceVertex,
  kIntroduceEdge,
  kForgetVertex,
  kJoin,
};

struct NiceNode {
  NodeType type = NodeType::kLeaf;
  int vertex = -1;       // introduce-vertex / forget-vertex
  int edge_id = -1;      // introduce-edge
  std::vector<int> bag;  // sorted
  int left = -1, right = -1;
};

// Nodes are stored in post-order (children precede parents), so a bottom-up
// DP is a single forward sweep. The root is the last node and is a forget
// node with an empty bag (a lone leaf for the vertexless graph).
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
  int count(NodeType t) const;
};

struct Violation {
  std::string name;
  std::string detail;
};

// Elimination-ordering heuristic decomposition: runs min-degree and min-fill,
// keeps whichever yields the smaller width. Valid for every input; no width
// guarantee.
TreeDecomposition greedy_decomposition(const Graph& g);

// Violations of the three decomposition axioms plus tree shape; empty if valid.
std::vector<Violation> check_decomposition(const TreeDecomposition& td,
                                           const Graph& g);

// Converts to nice form of the same width. Each edge is introduced exactly
// once, immediately below the deeper of its endpoints' forget nodes (stacked
// by edge id). Throws std::invalid_argument on an invalid decomposition.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g);

std::vector<Violation> validate_nice(const NiceTreeDecomposition& ntd,
                                     const Graph& g);

// Degree-sequence width bound: sum of c_i * n_i for i in [3,17], plus
// n_{>=18} + eps * n.
double tw_upper_bound(const DegreeHistogram& h, double eps);

// max(0, 2k - sum_{i>=4} (i-2) n_i). A graph whose degree-3 count exceeds
// this is a certifiable no-instance for budget k.
std::int64_t n3_bound(int k, const DegreeHistogram& h);

// k/3 + eps*n, diagnostics only (the additive constant is not computable).
double analytic_k_bound(int k, int n, double eps);

// PACE-style .td text.
std::string to_pace_td(const TreeDecomposition& td, const Graph& g);

}  // namespace copath
