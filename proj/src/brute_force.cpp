#include "copath/brute_force.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace copath {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Degree check + cycle check for the edge subset `mask` (bit i = edge i of
// g.edges()). Avoids building Graph objects in the inner loop.
bool subset_is_linear_forest(const Graph& g, std::uint32_t mask,
                             std::vector<int>& deg, std::vector<int>& parent) {
  std::fill(deg.begin(), deg.end(), 0);
  std::iota(parent.begin(), parent.end(), 0);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    const Edge& e = edges[i];
    if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
    int ru = find_root(parent, e.u), rv = find_root(parent, e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

}  // namespace

bool is_marked_consistent_cut(const Graph& g, const MarkedCut& cut) {
  std::vector<int> side(g.vertex_count() + 1, 0);  // 1 or 2, 0 = unassigned
  for (int v : cut.v1) {
    if (v < 1 || v > g.vertex_count() || side[v]) return false;
    side[v] = 1;
  }
  for (int v : cut.v2) {
    if (v < 1 || v > g.vertex_count() || side[v]) return false;
    side[v] = 2;
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!side[v]) return false;                       // not a partition
    if (g.degree(v) == 0 && side[v] != 1) return false;  // isolate not in V1
  }
  for (const Edge& e : g.edges())
    if (side[e.u] != side[e.v]) return false;  // crossing edge
  for (int id : cut.markers) {
    if (!g.has_edge_id(id)) return false;
    Edge e = g.edge(id);
    if (side[e.u] != 1 || side[e.v] != 1) return false;  // marker outside V1
  }
  std::set<int> uniq(cut.markers.begin(), cut.markers.end());
  return uniq.size() == cut.markers.size();
}

bool brute_force_decide(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative budget");
  if (g.vertex_count() > kBruteMaxVertices)
    throw OracleLimitError("brute_force_decide: graph exceeds " +
                           std::to_string(kBruteMaxVertices) + " vertices");
  const int m = g.edge_count();
  if (k > m) return false;
  std::vector<int> deg(g.vertex_count() + 1);
  std::vector<int> parent(g.vertex_count() + 1);
  // Enumerate k-subsets of edge positions as the deleted set F.
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  const std::uint32_t full = (m >= 32) ? ~0u : ((1u << m) - 1);
  while (true) {
    std::uint32_t deleted = 0;
    for (int p : pick) deleted |= 1u << p;
    if (subset_is_linear_forest(g, full & ~deleted, deg, parent)) return true;
    // next combination
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return false;
}

std::int64_t count_consistent_cuts(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kCutCountMaxVertices)
    throw OracleLimitError("count_consistent_cuts: graph exceeds " +
                           std::to_string(kCutCountMaxVertices) + " vertices");
  std::int64_t total = 0;
  for (std::uint32_t v1 = 0; v1 < (1u << n); ++v1) {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v)
      if (g.degree(v) == 0 && !(v1 >> (v - 1) & 1)) ok = false;
    for (const Edge& e : g.edges()) {
      if (!ok) break;
      if ((v1 >> (e.u - 1) & 1) != (v1 >> (e.v - 1) & 1)) ok = false;
    }
    if (ok) ++total;
  }
  return total;
}

namespace {

// Components of the subgraph (V, S). Returns component index per vertex
// (-1 for isolates) and the component count.
int subset_components(const Graph& g, std::uint32_t mask,
                      std::vector<int>& comp) {
  const int n = g.vertex_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> touched(n + 1, false);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    touched[edges[i].u] = touched[edges[i].v] = true;
    parent[find_root(parent, edges[i].u)] = find_root(parent, edges[i].v);
  }
  comp.assign(n + 1, -1);
  int count = 0;
  std::vector<int> label(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    if (!touched[v]) continue;
    int r = find_root(parent, v);
    if (label[r] < 0) label[r] = count++;
    comp[v] = label[r];
  }
  return count;
}

}  // namespace

std::map<CandidateKey, int> cc_candidate_parities(const Graph& g,
                                                  const WeightAssignment& w) {
  const int m = g.edge_count();
  if (m > kCandidateMaxEdges)
    throw OracleLimitError("cc_candidate_parities: graph exceeds " +
                           std::to_string(kCandidateMaxEdges) + " edges");
  std::map<CandidateKey, int> parity;
  std::vector<int> deg(g.vertex_count() + 1);
  std::vector<int> comp;
  const auto& edges = g.edges();
  const auto& ids = g.edge_ids();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    bool ok = true;
    long edge_sum = 0;
    int e = 0;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (++deg[edges[i].u] > 2 || ++deg[edges[i].v] > 2) ok = false;
      edge_sum += w.edge_w(ids[i]);
      ++e;
    }
    if (!ok) continue;
    int a = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
      if (deg[v] > 0) ++a;
    const int comps = subset_components(g, mask, comp);
    // Every side assignment of the non-isolate components, then every marker
    // subset of the edges landing in V1.
    for (std::uint32_t sides = 0; sides < (1u << comps); ++sides) {
      std::vector<int> v1_edges;  // positions
      for (int i = 0; i < m; ++i) {
        if (!(mask >> i & 1)) continue;
        int c = comp[edges[i].u];
        if (!(sides >> c & 1)) v1_edges.push_back(i);  // bit 0 = V1 side
      }
      for (std::uint32_t msk = 0; msk < (1u << v1_edges.size()); ++msk) {
        int markers = 0;
        long total = edge_sum;
        for (std::size_t j = 0; j < v1_edges.size(); ++j) {
          if (!(msk >> j & 1)) continue;
          ++markers;
          total += w.marker_w(ids[v1_edges[j]]);
        }
        parity[{a, e, markers, total}] ^= 1;
      }
    }
  }
  std::erase_if(parity, [](const auto& kv) { return kv.second == 0; });
  return parity;
}

int count_cc_candidates(const Graph& g, const WeightAssignment& w, int a,
                        int e, int m, long weight) {
  auto map = cc_candidate_parities(g, w);
  auto it = map.find({a, e, m, weight});
  return it == map.end() ? 0 : it->second;
}

std::map<std::pair<int, long>, int> marked_cc_solution_parities(
    const Graph& g, const WeightAssignment& w) {
  const int m = g.edge_count();
  if (m > kCandidateMaxEdges)
    throw OracleLimitError("marked_cc_solution_parities: graph exceeds " +
                           std::to_string(kCandidateMaxEdges) + " edges");
  std::map<std::pair<int, long>, int> parity;
  std::vector<int> deg(g.vertex_count() + 1);
  std::vector<int> parent(g.vertex_count() + 1);
  std::vector<int> comp;
  const auto& edges = g.edges();
  const auto& ids = g.edge_ids();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (!subset_is_linear_forest(g, mask, deg, parent)) continue;
    long edge_sum = 0;
    int e = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      edge_sum += w.edge_w(ids[i]);
      ++e;
    }
    const int comps = subset_components(g, mask, comp);
    // One marker per component: walk the cross product of per-component
    // edge choices.
    std::vector<std::vector<int>> by_comp(comps);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) by_comp[comp[edges[i].u]].push_back(i);
    std::vector<std::size_t> choice(comps, 0);
    while (true) {
      long total = edge_sum;
      for (int c = 0; c < comps; ++c)
        total += w.marker_w(ids[by_comp[c][choice[c]]]);
      parity[{e, total}] ^= 1;
      int c = comps - 1;
      while (c >= 0 && choice[c] + 1 == by_comp[c].size()) choice[c--] = 0;
      if (c < 0) break;
      ++choice[c];
    }
  }
  std::erase_if(parity, [](const auto& kv) { return kv.second == 0; });
  return parity;
}

}  // namespace copath
