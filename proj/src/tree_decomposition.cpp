#include "copath/tree_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace copath {

namespace {

// Table of degree coefficients c_3..c_17 for the treewidth bound.
constexpr double kDegreeCoeff[18] = {
    0, 0, 0, 0.1667, 0.3334, 0.4334, 0.5112, 0.5699, 0.6163,
    0.6538, 0.6847, 0.7105, 0.7325, 0.7514, 0.7678, 0.7822, 0.7949, 0.8062};

}  // namespace

int TreeDecomposition::width() const {
  int best = 0;
  for (const auto& b : bags) best = std::max(best, static_cast<int>(b.size()));
  return best - 1;
}

int NiceTreeDecomposition::width() const {
  int best = 0;
  for (const auto& n : nodes)
    best = std::max(best, static_cast<int>(n.bag.size()));
  return best - 1;
}

int NiceTreeDecomposition::count(NodeType t) const {
  int c = 0;
  for (const auto& n : nodes) c += n.type == t;
  return c;
}

namespace {

struct EliminationResult {
  TreeDecomposition td;
  bool valid = false;
};

// Elimination game: bag of v is {v} + its neighborhood at elimination time;
// eliminating v turns that neighborhood into a clique. The bag of v hangs
// below the bag of its earliest-eliminated remaining neighbor.
TreeDecomposition eliminate(const Graph& g, bool min_fill) {
  const int n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::set<int>> adj(n + 1);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<int> order;
  std::vector<int> pos(n + 1, -1);
  std::vector<char> alive(n + 1, 1);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_score = -1;
    for (int v = 1; v <= n; ++v) {
      if (!alive[v]) continue;
      long score;
      if (min_fill) {
        score = 0;
        for (int a : adj[v])
          for (int b : adj[v])
            if (a < b && !adj[a].count(b)) ++score;
      } else {
        score = static_cast<long>(adj[v].size());
      }
      if (best < 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    pos[best] = step;
    order.push_back(best);
    std::vector<int> bag(adj[best].begin(), adj[best].end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    for (int a : adj[best])
      for (int b : adj[best])
        if (a != b) adj[a].insert(b);
    for (int a : adj[best]) adj[a].erase(best);
    adj[best].clear();
    alive[best] = 0;
  }
  // Bag index equals elimination position of its vertex.
  for (int step = 0; step < n; ++step) {
    int v = order[step];
    int parent_pos = -1;
    for (int u : td.bags[step])
      if (u != v && (parent_pos < 0 || pos[u] < parent_pos)) parent_pos = pos[u];
    if (parent_pos < 0) {
      // Lone bag; attach to the next elimination step to keep one tree.
      if (step + 1 < n) parent_pos = step + 1;
    }
    if (parent_pos >= 0) td.tree_edges.push_back({step, parent_pos});
  }
  return td;
}

}  // namespace

TreeDecomposition greedy_decomposition(const Graph& g) {
  TreeDecomposition by_degree = eliminate(g, false);
  TreeDecomposition by_fill = eliminate(g, true);
  return by_fill.width() <= by_degree.width() ? by_fill : by_degree;
}

std::vector<Violation> check_decomposition(const TreeDecomposition& td,
                                           const Graph& g) {
  std::vector<Violation> out;
  const int b = static_cast<int>(td.bags.size());
  if (b == 0) {
    out.push_back({"no-bags", ""});
    return out;
  }
  for (auto [x, y] : td.tree_edges)
    if (x < 0 || x >= b || y < 0 || y >= b) {
      out.push_back({"tree-edge-out-of-range", ""});
      return out;
    }
  // Tree shape: b-1 edges and connected.
  if (static_cast<int>(td.tree_edges.size()) != b - 1)
    out.push_back({"tree-edge-count", std::to_string(td.tree_edges.size())});
  std::vector<std::vector<int>> nbr(b);
  for (auto [x, y] : td.tree_edges) {
    nbr[x].push_back(y);
    nbr[y].push_back(x);
  }
  std::vector<char> seen(b, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : nbr[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  if (std::count(seen.begin(), seen.end(), 1) != b)
    out.push_back({"tree-not-connected", ""});

  std::vector<std::vector<int>> holding(g.vertex_count() + 1);
  for (int i = 0; i < b; ++i)
    for (int v : td.bags[i]) {
      if (v < 1 || v > g.vertex_count()) {
        out.push_back({"bag-vertex-out-of-range", std::to_string(v)});
        return out;
      }
      holding[v].push_back(i);
    }
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (holding[v].empty())
      out.push_back({"vertex-not-covered", std::to_string(v)});
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int i : holding[e.u]) {
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      out.push_back({"edge-not-covered",
                     std::to_string(e.u) + "-" + std::to_string(e.v)});
  }
  // Connectivity of each vertex's occurrence set, via BFS restricted to it.
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (holding[v].empty()) continue;
    std::set<int> members(holding[v].begin(), holding[v].end());
    std::vector<int> work = {holding[v][0]};
    std::set<int> reached = {holding[v][0]};
    while (!work.empty()) {
      int x = work.back();
      work.pop_back();
      for (int y : nbr[x])
        if (members.count(y) && !reached.count(y)) {
          reached.insert(y);
          work.push_back(y);
        }
    }
    if (reached.size() != members.size())
      out.push_back({"vertex-occurrences-disconnected", std::to_string(v)});
  }
  return out;
}

namespace {

struct NiceBuilder {
  const Graph& g;
  std::vector<NiceNode> nodes;

  int add(NiceNode n) {
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size()) - 1;
  }

  int leaf_chain(const std::vector<int>& bag) {
    int cur = add(NiceNode{NodeType::kLeaf, -1, -1, {}, -1, -1});
    std::vector<int> have;
    for (int v : bag) {
      have.push_back(v);
      cur = add(NiceNode{NodeType::kIntroduceVertex, v, -1, have, cur, -1});
    }
    return cur;
  }

  // Chain from bag `from` (at node `cur`) to bag `to`: forgets, then introduces.
  int morph(int cur, std::vector<int> from, const std::vector<int>& to) {
    std::vector<int> drop, gain;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(),
                        std::back_inserter(drop));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(),
                        std::back_inserter(gain));
    for (int v : drop) {
      from.erase(std::find(from.begin(), from.end(), v));
      cur = add(NiceNode{NodeType::kForgetVertex, v, -1, from, cur, -1});
    }
    for (int v : gain) {
      from.insert(std::upper_bound(from.begin(), from.end(), v), v);
      cur = add(NiceNode{NodeType::kIntroduceVertex, v, -1, from, cur, -1});
    }
    return cur;
  }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g) {
  if (!check_decomposition(td, g).empty())
    throw std::invalid_argument("invalid tree decomposition");

  NiceTreeDecomposition ntd;
  if (g.vertex_count() == 0) {
    ntd.nodes.push_back(NiceNode{NodeType::kLeaf, -1, -1, {}, -1, -1});
    ntd.root = 0;
    return ntd;
  }

  const int b = static_cast<int>(td.bags.size());
  int root = -1;
  for (int i = 0; i < b && root < 0; ++i)
    if (!td.bags[i].empty()) root = i;
  assert(root >= 0);  // some bag holds a vertex since n >= 1

  std::vector<std::vector<int>> nbr(b);
  for (auto [x, y] : td.tree_edges) {
    nbr[x].push_back(y);
    nbr[y].push_back(x);
  }

  NiceBuilder builder{g, {}};
  // Iterative post-order over the rooted bag tree.
  struct Frame {
    int bag;
    int parent;
    std::size_t next_child = 0;
    std::vector<int> child_tops;
  };
  std::vector<Frame> stack;
  stack.push_back({root, -1, 0, {}});
  int top = -1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool descended = false;
    while (f.next_child < nbr[f.bag].size()) {
      int c = nbr[f.bag][f.next_child++];
      if (c == f.parent) continue;
      stack.push_back({c, f.bag, 0, {}});
      descended = true;
      break;
    }
    if (descended) continue;
    // All children done; combine.
    int cur;
    if (f.child_tops.empty()) {
      cur = builder.leaf_chain(td.bags[f.bag]);
    } else {
      cur = f.child_tops[0];
      for (std::size_t i = 1; i < f.child_tops.size(); ++i)
        cur = builder.add(NiceNode{NodeType::kJoin, -1, -1, td.bags[f.bag],
                                   cur, f.child_tops[i]});
    }
    stack.pop_back();
    if (!stack.empty()) {
      // Morph this bag into the parent's bag and hand the top up.
      cur = builder.morph(cur, td.bags[f.bag], td.bags[stack.back().bag]);
      stack.back().child_tops.push_back(cur);
    } else {
      top = cur;
    }
  }
  // Forget the root bag so the root node is a forget with an empty bag.
  {
    std::vector<int> remaining = td.bags[root];
    while (!remaining.empty()) {
      int v = remaining.front();
      remaining.erase(remaining.begin());
      top = builder.add(
          NiceNode{NodeType::kForgetVertex, v, -1, remaining, top, -1});
    }
  }

  // Locate each vertex's forget node and its depth from the root.
  std::vector<NiceNode>& sk = builder.nodes;
  std::vector<int> depth(sk.size(), 0);
  for (int i = static_cast<int>(sk.size()) - 1; i >= 0; --i) {
    if (sk[i].left >= 0) depth[sk[i].left] = depth[i] + 1;
    if (sk[i].right >= 0) depth[sk[i].right] = depth[i] + 1;
  }
  std::vector<int> forget_of(g.vertex_count() + 1, -1);
  for (std::size_t i = 0; i < sk.size(); ++i)
    if (sk[i].type == NodeType::kForgetVertex) {
      assert(forget_of[sk[i].vertex] < 0);
      forget_of[sk[i].vertex] = static_cast<int>(i);
    }

  // Assign every edge to the deeper of its endpoints' forget nodes; the bag
  // just below that node holds both endpoints.
  std::vector<std::vector<int>> edges_at(sk.size());
  for (std::size_t i = 0; i < g.edge_ids().size(); ++i) {
    const Edge& e = g.edges()[i];
    int fu = forget_of[e.u], fv = forget_of[e.v];
    assert(fu >= 0 && fv >= 0);
    int anchor = depth[fu] > depth[fv] ? fu : fv;
    const std::vector<int>& below = sk[sk[anchor].left].bag;
    if (!std::binary_search(below.begin(), below.end(), e.u) ||
        !std::binary_search(below.begin(), below.end(), e.v))
      throw std::invalid_argument("decomposition rejects edge placement");
    edges_at[anchor].push_back(g.edge_ids()[i]);
  }
  for (auto& lst : edges_at) std::sort(lst.begin(), lst.end());

  // Rebuild in post-order, splicing introduce-edge chains below each forget.
  std::vector<int> remap(sk.size(), -1);
  struct CopyFrame {
    int old;
    int stage = 0;
  };
  std::vector<CopyFrame> work;
  work.push_back({top, 0});
  while (!work.empty()) {
    CopyFrame& f = work.back();
    const NiceNode& n = sk[f.old];
    if (f.stage == 0) {
      f.stage = 1;
      if (n.left >= 0) work.push_back({n.left, 0});
      continue;
    }
    if (f.stage == 1) {
      f.stage = 2;
      if (n.right >= 0) work.push_back({n.right, 0});
      continue;
    }
    NiceNode copy = n;
    copy.left = n.left >= 0 ? remap[n.left] : -1;
    copy.right = n.right >= 0 ? remap[n.right] : -1;
    if (n.type == NodeType::kForgetVertex && !edges_at[f.old].empty()) {
      int cur = copy.left;
      const std::vector<int>& bag_below = sk[n.left].bag;
      for (int id : edges_at[f.old]) {
        ntd.nodes.push_back(
            NiceNode{NodeType::kIntroduceEdge, -1, id, bag_below, cur, -1});
        cur = static_cast<int>(ntd.nodes.size()) - 1;
      }
      copy.left = cur;
    }
    ntd.nodes.push_back(std::move(copy));
    remap[f.old] = static_cast<int>(ntd.nodes.size()) - 1;
    work.pop_back();
  }
  ntd.root = remap[top];
  assert(ntd.root == static_cast<int>(ntd.nodes.size()) - 1);
  assert(ntd.width() == td.width());
  return ntd;
}

std::vector<Violation> validate_nice(const NiceTreeDecomposition& ntd,
                                     const Graph& g) {
  std::vector<Violation> out;
  const int count = static_cast<int>(ntd.nodes.size());
  if (count == 0 || ntd.root < 0 || ntd.root >= count) {
    out.push_back({"no-root", ""});
    return out;
  }
  std::vector<int> parent(count, -1);
  for (int i = 0; i < count; ++i) {
    const NiceNode& n = ntd.nodes[i];
    for (int c : {n.left, n.right}) {
      if (c == -1) continue;
      if (c < 0 || c >= count || parent[c] != -1) {
        out.push_back({"not-a-tree", "node " + std::to_string(i)});
        return out;
      }
      parent[c] = i;
    }
  }
  if (parent[ntd.root] != -1) {
    out.push_back({"not-a-tree", "root has a parent"});
    return out;
  }

  const NiceNode& root = ntd.nodes[ntd.root];
  if (g.vertex_count() == 0) {
    if (root.type != NodeType::kLeaf)
      out.push_back({"root-not-forget", "expected lone leaf for empty graph"});
  } else if (root.type != NodeType::kForgetVertex) {
    out.push_back({"root-not-forget", ""});
  }
  if (!root.bag.empty()) out.push_back({"root-bag-not-empty", ""});

  std::map<int, int> edge_introductions;
  for (int i = 0; i < count; ++i) {
    const NiceNode& n = ntd.nodes[i];
    const std::string at = "node " + std::to_string(i);
    if (!std::is_sorted(n.bag.begin(), n.bag.end())) {
      out.push_back({"bag-not-sorted", at});
      continue;
    }
    switch (n.type) {
      case NodeType::kLeaf:
        if (!n.bag.empty()) out.push_back({"leaf-bag-not-empty", at});
        if (n.left != -1 || n.right != -1)
          out.push_back({"leaf-has-children", at});
        break;
      case NodeType::kIntroduceVertex: {
        if (n.left < 0 || n.right != -1) {
          out.push_back({"introduce-arity", at});
          break;
        }
        std::vector<int> expect = ntd.nodes[n.left].bag;
        if (std::binary_search(expect.begin(), expect.end(), n.vertex)) {
          out.push_back({"introduce-vertex-already-present", at});
          break;
        }
        expect.insert(std::upper_bound(expect.begin(), expect.end(), n.vertex),
                      n.vertex);
        if (expect != n.bag) out.push_back({"introduce-bag-mismatch", at});
        break;
      }
      case NodeType::kForgetVertex: {
        if (n.left < 0 || n.right != -1) {
          out.push_back({"forget-arity", at});
          break;
        }
        std::vector<int> expect = ntd.nodes[n.left].bag;
        auto it = std::find(expect.begin(), expect.end(), n.vertex);
        if (it == expect.end()) {
          out.push_back({"forget-vertex-absent", at});
          break;
        }
        expect.erase(it);
        if (expect != n.bag) out.push_back({"forget-bag-mismatch", at});
        break;
      }
      case NodeType::kIntroduceEdge: {
        if (n.left < 0 || n.right != -1) {
          out.push_back({"introduce-edge-arity", at});
          break;
        }
        if (ntd.nodes[n.left].bag != n.bag)
          out.push_back({"introduce-edge-bag-mismatch", at});
        if (!g.has_edge_id(n.edge_id)) {
          out.push_back({"unknown-edge-introduced", at});
          break;
        }
        Edge e = g.edge(n.edge_id);
        if (!std::binary_search(n.bag.begin(), n.bag.end(), e.u) ||
            !std::binary_search(n.bag.begin(), n.bag.end(), e.v))
          out.push_back({"introduce-edge-endpoints-absent", at});
        ++edge_introductions[n.edge_id];
        break;
      }
      case NodeType::kJoin: {
        if (n.left < 0 || n.right < 0) {
          out.push_back({"join-arity", at});
          break;
        }
        if (ntd.nodes[n.left].bag != n.bag || ntd.nodes[n.right].bag != n.bag)
          out.push_back({"join-bag-mismatch", at});
        break;
      }
    }
  }
  for (int id : g.edge_ids()) {
    auto it = edge_introductions.find(id);
    if (it == edge_introductions.end())
      out.push_back({"missing-introduce-edge", "edge " + std::to_string(id)});
    else if (it->second > 1)
      out.push_back({"duplicate-introduce-edge", "edge " + std::to_string(id)});
  }
  // Vertex coverage and occurrence connectivity: each vertex's bag set must
  // have exactly one topmost node.
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int tops = 0, occurrences = 0;
    for (int i = 0; i < count; ++i) {
      const NiceNode& n = ntd.nodes[i];
      if (!std::binary_search(n.bag.begin(), n.bag.end(), v)) continue;
      ++occurrences;
      int p = parent[i];
      if (p < 0 || !std::binary_search(ntd.nodes[p].bag.begin(),
                                       ntd.nodes[p].bag.end(), v))
        ++tops;
    }
    if (occurrences == 0)
      out.push_back({"vertex-not-covered", std::to_string(v)});
    else if (tops != 1)
      out.push_back({"vertex-occurrences-disconnected", std::to_string(v)});
  }
  return out;
}

double tw_upper_bound(const DegreeHistogram& h, double eps) {
  if (eps < 0) throw std::invalid_argument("negative epsilon");
  double total = 0;
  std::int64_t n = 0;
  for (int d = 0; d < static_cast<int>(h.counts.size()); ++d) {
    n += h.counts[d];
    if (d >= 3 && d <= 17) total += kDegreeCoeff[d] * h.counts[d];
  }
  total += static_cast<double>(h.n_at_least_18);
  total += eps * static_cast<double>(n);
  return total;
}

std::int64_t n3_bound(int k, const DegreeHistogram& h) {
  std::int64_t rhs = 2 * static_cast<std::int64_t>(k);
  for (int d = 4; d < static_cast<int>(h.counts.size()); ++d)
    rhs -= static_cast<std::int64_t>(d - 2) * h.counts[d];
  return std::max<std::int64_t>(rhs, 0);
}

double analytic_k_bound(int k, int n, double eps) {
  return k / 3.0 + eps * n;
}

std::string to_pace_td(const TreeDecomposition& td, const Graph& g) {
  std::ostringstream out;
  int max_bag = 0;
  for (const auto& b : td.bags)
    max_bag = std::max(max_bag, static_cast<int>(b.size()));
  out << "s td " << td.bags.size() << ' ' << max_bag << ' '
      << g.vertex_count() << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << ' ' << v;
    out << '\n';
  }
  for (auto [x, y] : td.tree_edges) out << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

}  // namespace copath
