#pragma once

#include "copath/graph.hpp"

namespace copath {

// Output of preprocessing. When forced_no is false, (graph, k) decides the
// same as the input instance.
struct KernelResult {
  Graph graph;              // reduced instance
  int k = 0;                // residual budget
  int deleted = 0;          // input k minus residual k
  bool forced_no = false;   // budget cannot be met even with padding
  int removed_isolates = 0;
  int removed_path_edges = 0;  // edges inside removed path components
};

// Safe local reductions:
//   R1  drop degree-0 vertices,
//   R2  k > |E| is an immediate no,
//   R3  drop components that are already paths; their edges remain available
//       as padding, so the residual budget is clamped to the surviving edge
//       count (deleting extra edges of a path keeps a linear forest).
// Pass-through output is valid; no size bound is promised.
KernelResult kernelize(const Graph& g, int k);

}  // namespace copath
