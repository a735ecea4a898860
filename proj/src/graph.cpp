#include "copath/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

namespace copath {

namespace {

// Union-find over 1..n used for cycle detection and component counting.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> ids(edges.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<Edge> recs;
  recs.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    recs.push_back(Edge{u, v});
  }
  *this = Graph(n, std::move(ids), std::move(recs));
}

Graph::Graph(int n, std::vector<int> ids, std::vector<Edge> edges)
    : n_(n), ids_(std::move(ids)), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (ids_.size() != edges_.size())
    throw std::invalid_argument("edge id / endpoint list size mismatch");
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0 && ids_[i] <= ids_[i - 1])
      throw std::invalid_argument("edge ids must be strictly increasing");
    if (ids_[i] < 0) throw std::invalid_argument("negative edge id");
    Edge& e = edges_[i];
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.u < 1 || e.v > n_) throw std::invalid_argument("endpoint out of range");
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("parallel edge");
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  adj_.assign(n_ + 1, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adj_[edges_[i].u].push_back({edges_[i].v, ids_[i]});
    adj_[edges_[i].v].push_back({edges_[i].u, ids_[i]});
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_index(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return static_cast<int>(it - ids_.begin());
}

bool Graph::has_edge_id(int id) const { return edge_index(id) >= 0; }

Edge Graph::edge(int id) const {
  int idx = edge_index(id);
  if (idx < 0) throw std::invalid_argument("unknown edge id");
  return edges_[idx];
}

const std::vector<std::pair<int, int>>& Graph::neighbors(int v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
  return adj_[v];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 1; v <= n_; ++v)
    best = std::max(best, static_cast<int>(adj_[v].size()));
  return best;
}

Graph Graph::delete_edges(const std::vector<int>& ids) const {
  std::set<int> drop;
  for (int id : ids) {
    if (!has_edge_id(id)) throw std::invalid_argument("unknown edge id");
    drop.insert(id);
  }
  std::vector<int> keep_ids;
  std::vector<Edge> keep_edges;
  keep_ids.reserve(ids_.size() - drop.size());
  keep_edges.reserve(ids_.size() - drop.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!drop.count(ids_[i])) {
      keep_ids.push_back(ids_[i]);
      keep_edges.push_back(edges_[i]);
    }
  }
  return Graph(n_, std::move(keep_ids), std::move(keep_edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long declared_m = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0)
        throw ParseError(ParseError::Kind::kHeader, "duplicate header line");
      std::string fmt;
      long nn = -1, mm = -1;
      if (!(ls >> fmt >> nn >> mm) || fmt != "edge" || nn < 0 || mm < 0)
        throw ParseError(ParseError::Kind::kHeader,
                         "malformed header at line " + std::to_string(lineno));
      std::string rest;
      if (ls >> rest)
        throw ParseError(ParseError::Kind::kHeader, "trailing header tokens");
      n = static_cast<int>(nn);
      declared_m = mm;
      continue;
    }
    if (tag == "e") {
      if (n < 0)
        throw ParseError(ParseError::Kind::kHeader, "edge before header");
      long u = 0, v = 0;
      if (!(ls >> u >> v))
        throw ParseError(ParseError::Kind::kEdgeLine,
                         "malformed edge at line " + std::to_string(lineno));
      if (u == v)
        throw ParseError(ParseError::Kind::kSelfLoop,
                         "self-loop at line " + std::to_string(lineno));
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(ParseError::Kind::kEndpoint,
                         "endpoint out of range at line " + std::to_string(lineno));
      int a = static_cast<int>(std::min(u, v));
      int b = static_cast<int>(std::max(u, v));
      if (!seen.insert({a, b}).second)
        throw ParseError(ParseError::Kind::kDuplicateEdge,
                         "duplicate edge at line " + std::to_string(lineno));
      edges.push_back({a, b});
      continue;
    }
    throw ParseError(ParseError::Kind::kEdgeLine,
                     "unrecognized line " + std::to_string(lineno));
  }
  if (n < 0) throw ParseError(ParseError::Kind::kHeader, "missing header");
  if (declared_m != static_cast<long>(edges.size()))
    throw ParseError(ParseError::Kind::kEdgeCount,
                     "header declares " + std::to_string(declared_m) +
                         " edges, found " + std::to_string(edges.size()));
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "c copath instance\n";
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t i = 0; i < g.edge_ids().size(); ++i) {
    const Edge& e = g.edges()[i];
    out << "e " << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

bool is_linear_forest(const Graph& g) {
  if (g.max_degree() > 2) return false;
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges())
    if (!uf.unite(e.u, e.v)) return false;  // cycle
  return true;
}

DegreeHistogram degree_histogram(const Graph& g) {
  DegreeHistogram h;
  h.max_degree = g.max_degree();
  h.counts.assign(h.max_degree + 1, 0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int d = g.degree(v);
    ++h.counts[d];
    if (d >= 18) ++h.n_at_least_18;
  }
  return h;
}

ComponentCounts components_and_isolates(const Graph& g) {
  UnionFind uf(g.vertex_count());
  int merges = 0;
  for (const Edge& e : g.edges())
    if (uf.unite(e.u, e.v)) ++merges;
  ComponentCounts c;
  c.components = g.vertex_count() - merges;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) == 0) ++c.isolates;
  return c;
}

}  // namespace copath
