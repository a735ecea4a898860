#include <doctest.h>

#include <set>

#include "copath/tree_decomposition.hpp"
#include "support/corpus.hpp"

using namespace copath;

namespace {

bool has_violation(const std::vector<Violation>& vs, const std::string& name) {
  for (const auto& v : vs)
    if (v.name == name) return true;
  return false;
}

}  // namespace

TEST_CASE("greedy width on known shapes") {
  Graph path(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(greedy_decomposition(path).width() == 1);
  Graph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(greedy_decomposition(triangle).width() == 2);
  Graph golden = testing::golden_graph();
  TreeDecomposition td = greedy_decomposition(golden);
  CHECK(check_decomposition(td, golden).empty());
  CHECK(td.width() >= 2);  // the 4-cycle 1-2-4-3 rules out width 1
  CHECK(td.width() <= 3);
}

TEST_CASE("greedy output is always a valid decomposition") {
  for (const Graph& g : testing::random_corpus(71, 80, 12, 40)) {
    TreeDecomposition td = greedy_decomposition(g);
    CHECK(check_decomposition(td, g).empty());
  }
}

TEST_CASE("nice form of a single edge has the forced shape") {
  Graph g(2, {{1, 2}});
  NiceTreeDecomposition ntd = make_nice(greedy_decomposition(g), g);
  CHECK(validate_nice(ntd, g).empty());
  CHECK(ntd.count(NodeType::kLeaf) == 1);
  CHECK(ntd.count(NodeType::kIntroduceVertex) == 2);
  CHECK(ntd.count(NodeType::kIntroduceEdge) == 1);
  CHECK(ntd.count(NodeType::kForgetVertex) == 2);
  CHECK(ntd.count(NodeType::kJoin) == 0);
  CHECK(ntd.nodes[ntd.root].type == NodeType::kForgetVertex);
  CHECK(ntd.nodes[ntd.root].bag.empty());
}

TEST_CASE("one introduce-edge node per edge") {
  Graph path(3, {{1, 2}, {2, 3}});
  NiceTreeDecomposition p = make_nice(greedy_decomposition(path), path);
  CHECK(p.count(NodeType::kIntroduceEdge) == 2);

  Graph golden = testing::golden_graph();
  NiceTreeDecomposition ntd = make_nice(greedy_decomposition(golden), golden);
  CHECK(ntd.count(NodeType::kIntroduceEdge) == 7);
  CHECK(validate_nice(ntd, golden).empty());
}

TEST_CASE("make_nice preserves width and validates over the corpus") {
  for (const Graph& g : testing::random_corpus(73, 80, 12, 40)) {
    TreeDecomposition td = greedy_decomposition(g);
    NiceTreeDecomposition ntd = make_nice(td, g);
    CHECK(validate_nice(ntd, g).empty());
    CHECK(ntd.width() == td.width());
    CHECK(ntd.count(NodeType::kIntroduceEdge) == g.edge_count());
    CHECK(ntd.nodes[ntd.root].bag.empty());
  }
}

TEST_CASE("validator names broken decompositions") {
  Graph g(2, {{1, 2}});
  NiceTreeDecomposition ntd = make_nice(greedy_decomposition(g), g);

  // Duplicate an introduce-edge node in the middle of the chain.
  NiceTreeDecomposition dup = ntd;
  for (std::size_t i = 0; i < dup.nodes.size(); ++i) {
    if (dup.nodes[i].type != NodeType::kIntroduceEdge) continue;
    NiceNode extra = dup.nodes[i];  // same edge, same bag
    const int child = dup.nodes[i].left;
    dup.nodes.insert(dup.nodes.begin() + i, extra);
    // Reindex children >= i and wire the pair.
    for (auto& n : dup.nodes) {
      if (n.left >= static_cast<int>(i)) ++n.left;
      if (n.right >= static_cast<int>(i)) ++n.right;
    }
    dup.nodes[i].left = child;
    dup.nodes[i + 1].left = static_cast<int>(i);
    ++dup.root;
    break;
  }
  CHECK(has_violation(validate_nice(dup, g), "duplicate-introduce-edge"));

  // Rewire the root into a join; flagged by name.
  NiceTreeDecomposition bad_root = ntd;
  bad_root.nodes[bad_root.root] =
      NiceNode{NodeType::kJoin,
               -1,
               -1,
               bad_root.nodes[bad_root.root].bag,
               bad_root.nodes[bad_root.root].left,
               bad_root.nodes[bad_root.root].left};
  CHECK(has_violation(validate_nice(bad_root, g), "root-not-forget"));

  // Losing the introduce-edge node entirely.
  NiceTreeDecomposition missing = ntd;
  for (auto& n : missing.nodes)
    if (n.type == NodeType::kIntroduceEdge) n.type = NodeType::kIntroduceVertex;
  CHECK(has_violation(validate_nice(missing, g), "missing-introduce-edge"));
}

TEST_CASE("tw upper bound reproduces hand values") {
  DegreeHistogram h;
  h.counts = {0, 0, 0, 6};
  h.max_degree = 3;
  CHECK(tw_upper_bound(h, 0.0) == doctest::Approx(1.0002).epsilon(1e-9));

  DegreeHistogram zero;
  CHECK(tw_upper_bound(zero, 0.0) == 0.0);

  DegreeHistogram h4;
  h4.counts = {0, 0, 0, 0, 3};
  h4.max_degree = 4;
  CHECK(tw_upper_bound(h4, 0.0) == doctest::Approx(1.0002).epsilon(1e-9));

  // Degree >= 18 vertices count with coefficient 1; eps adds per vertex.
  DegreeHistogram big;
  big.counts.assign(21, 0);
  big.counts[20] = 2;
  big.max_degree = 20;
  big.n_at_least_18 = 2;
  CHECK(tw_upper_bound(big, 0.5) == doctest::Approx(2.0 + 1.0));
}

TEST_CASE("n3 bound") {
  DegreeHistogram none;
  CHECK(n3_bound(3, none) == 6);
  DegreeHistogram one4;
  one4.counts = {0, 0, 0, 0, 1};
  one4.max_degree = 4;
  CHECK(n3_bound(3, one4) == 4);
  CHECK(n3_bound(0, one4) == 0);  // floored at zero
}

TEST_CASE("analytic k bound") {
  CHECK(analytic_k_bound(3, 18, 0.0) == doctest::Approx(1.0));
  CHECK(analytic_k_bound(0, 7, 0.25) == doctest::Approx(1.75));
  CHECK(analytic_k_bound(9, 54, 1e-5) == doctest::Approx(3.00054));
}

TEST_CASE("pace td emitter") {
  Graph g(3, {{1, 2}, {2, 3}});
  const std::string text = to_pace_td(greedy_decomposition(g), g);
  CHECK(text.find("s td ") == 0);
  CHECK(text.find("b 1") != std::string::npos);
}

TEST_CASE("vertexless and isolate-only graphs") {
  Graph empty(0, {});
  NiceTreeDecomposition e = make_nice(greedy_decomposition(empty), empty);
  CHECK(validate_nice(e, empty).empty());

  Graph isolates(3, {});
  NiceTreeDecomposition i = make_nice(greedy_decomposition(isolates), isolates);
  CHECK(validate_nice(i, isolates).empty());
  CHECK(i.nodes[i.root].type == NodeType::kForgetVertex);
}
