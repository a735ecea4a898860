#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace copath {

struct Edge {
  int u = 0, v = 0;  // endpoints with u < v

  friend bool operator==(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kHeader,         // missing or malformed `p edge n m` line
    kEdgeLine,       // malformed `e u v` line
    kEndpoint,       // endpoint outside 1..n
    kSelfLoop,       // e u u
    kDuplicateEdge,  // edge listed twice
    kEdgeCount,      // header m does not match the number of edge lines
  };

  ParseError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Simple undirected graph. Vertices are 1..n. Every edge carries a stable id:
// ids are assigned 0..m-1 in input order and survive deletion unchanged, so
// weight tables and DP bookkeeping indexed by edge id stay valid across
// subgraph construction. Instances are immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Edges given as endpoint pairs; ids assigned 0..m-1 in list order.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  // Edges with explicit ids (strictly increasing). Used by delete_edges and
  // the kernel, which must preserve ids of surviving edges.
  Graph(int n, std::vector<int> ids, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& edge_ids() const { return ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge_id(int id) const;
  Edge edge(int id) const;
  int max_edge_id() const { return ids_.empty() ? -1 : ids_.back(); }

  // (neighbor, edge id) pairs sorted by neighbor id.
  const std::vector<std::pair<int, int>>& neighbors(int v) const;
  int degree(int v) const;
  int max_degree() const;

  // Same vertex set, edges minus `ids`; surviving edges keep their ids.
  Graph delete_edges(const std::vector<int>& ids) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void build_adjacency();
  int edge_index(int id) const;  // -1 if absent

  int n_ = 0;
  std::vector<int> ids_;     // sorted ascending
  std::vector<Edge> edges_;  // parallel to ids_
  std::vector<std::vector<std::pair<int, int>>> adj_;  // 1-indexed
};

struct DegreeHistogram {
  std::vector<std::int64_t> counts;  // counts[d] = vertices of degree d
  int max_degree = 0;
  std::int64_t n_at_least_18 = 0;

  std::int64_t count(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(counts.size())) return 0;
    return counts[degree];
  }
};

struct ComponentCounts {
  int components = 0;  // connected components, isolates included
  int isolates = 0;    // degree-0 vertices
};

// DIMACS-style text: `c` comments, one `p edge n m` header, `e u v` lines.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// True iff max degree <= 2 and acyclic. Isolated vertices count as paths.
bool is_linear_forest(const Graph& g);

DegreeHistogram degree_histogram(const Graph& g);
ComponentCounts components_and_isolates(const Graph& g);

}  // namespace copath
