#include "copath/kernel.hpp"

#include <algorithm>
#include <numeric>

namespace copath {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

KernelResult kernelize(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative budget");
  KernelResult out;

  const int n = g.vertex_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> comp_has_cycle(n + 1, 0);
  for (const Edge& e : g.edges()) {
    int ru = find_root(parent, e.u), rv = find_root(parent, e.v);
    if (ru == rv) {
      comp_has_cycle[ru] = 1;
    } else {
      parent[ru] = rv;
      comp_has_cycle[rv] |= comp_has_cycle[ru];
    }
  }
  std::vector<char> comp_high_degree(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) > 2) comp_high_degree[find_root(parent, v)] = 1;

  // A component is a path iff it is acyclic with max degree <= 2.
  std::vector<char> keep(n + 1, 0);
  std::vector<int> new_id(n + 1, 0);
  int kept = 0;
  for (int v = 1; v <= n; ++v) {
    int r = find_root(parent, v);
    if (comp_has_cycle[r] || comp_high_degree[r]) {
      keep[v] = 1;
      new_id[v] = ++kept;
    } else if (g.degree(v) == 0) {
      ++out.removed_isolates;
    }
  }

  std::vector<int> ids;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (keep[e.u]) {
      ids.push_back(g.edge_ids()[i]);
      edges.push_back(Edge{new_id[e.u], new_id[e.v]});
    } else {
      ++out.removed_path_edges;
    }
  }
  out.graph = Graph(kept, std::move(ids), std::move(edges));

  const int surviving = out.graph.edge_count();
  if (k <= surviving) {
    out.k = k;
  } else if (k - surviving <= out.removed_path_edges) {
    // Excess deletions are padded into removed path components.
    out.k = surviving;
  } else {
    out.k = surviving;
    out.forced_no = true;  // k > |E| overall
  }
  out.deleted = k - out.k;
  return out;
}

}  // namespace copath
