#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "copath/graph.hpp"
#include "copath/weights.hpp"

namespace copath {

// Exhaustive reference implementations. Correctness anchors only: every
// routine carries a hard size guard and fails loudly instead of hanging.

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kBruteMaxVertices = 16;
inline constexpr int kCutCountMaxVertices = 8;
inline constexpr int kCandidateMaxEdges = 12;

// A vertex bipartition with no crossing edge, all isolates in v1, and marker
// edges lying inside v1.
struct MarkedCut {
  std::vector<int> v1, v2;      // vertex ids
  std::vector<int> markers;     // edge ids
};

bool is_marked_consistent_cut(const Graph& g, const MarkedCut& cut);

// True iff some F with |F| = k exactly leaves a linear forest. Enumerates
// all k-subsets of edges. k > |E| returns false.
bool brute_force_decide(const Graph& g, int k);

// Direct enumeration over all 2^n bipartitions.
std::int64_t count_consistent_cuts(const Graph& g);

// Key (a, e, m, w): non-isolated vertices, edges, markers, total weight.
using CandidateKey = std::tuple<int, int, int, long>;

// Parity of the number of triples (G', (V1,V2), M) where G' is a subgraph
// with max degree <= 2 and (V1,V2,M) is a marked consistent cut of G',
// grouped by (a, e, m, w). Absent keys are parity 0.
std::map<CandidateKey, int> cc_candidate_parities(const Graph& g,
                                                  const WeightAssignment& w);

int count_cc_candidates(const Graph& g, const WeightAssignment& w, int a,
                        int e, int m, long weight);

// Parity of the number of (linear-forest subgraph, proper marking) pairs with
// exactly one marker per non-isolate component, grouped by (e, w).
std::map<std::pair<int, long>, int> marked_cc_solution_parities(
    const Graph& g, const WeightAssignment& w);

}  // namespace copath
