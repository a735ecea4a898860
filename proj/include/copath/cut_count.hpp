#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "copath/graph.hpp"
#include "copath/tree_decomposition.hpp"
#include "copath/weights.hpp"

namespace copath {

// Bag-local vertex state: degree so far, with the cut side tracked while the
// degree is 1. Packed two bits per bag position (bag kept sorted).
enum BagDigit : int {
  kDigit0 = 0,      // degree 0, implicitly on the V1 side
  kDigit1Side1 = 1,
  kDigit1Side2 = 2,
  kDigit2 = 3,      // degree 2, side no longer relevant
};

// One parity-1 cell of a DP table, packed into 128 bits:
//   high 64: key  [a:12][e:12][m:12][w:28]  (counts of non-isolated
//            vertices, chosen edges, markers, and accumulated weight)
//   low 64:  state code, two bits per bag position.
// The field layout makes a componentwise key sum a plain integer add.
using DpEntry = unsigned __int128;

inline constexpr int kShiftW = 0, kShiftM = 28, kShiftE = 40, kShiftA = 52;
inline constexpr std::uint64_t kFieldMask12 = 0xfff;
inline constexpr std::uint64_t kFieldMaskW = (1ull << 28) - 1;

inline std::uint64_t pack_key(int a, int e, int m, long w) {
  return (static_cast<std::uint64_t>(a) << kShiftA) |
         (static_cast<std::uint64_t>(e) << kShiftE) |
         (static_cast<std::uint64_t>(m) << kShiftM) |
         static_cast<std::uint64_t>(w);
}

struct DpEntryView {
  int a, e, m;
  long w;
  std::uint64_t scode;
};

inline DpEntryView unpack_entry(DpEntry entry) {
  const std::uint64_t key = static_cast<std::uint64_t>(entry >> 64);
  return DpEntryView{
      static_cast<int>(key >> kShiftA & kFieldMask12),
      static_cast<int>(key >> kShiftE & kFieldMask12),
      static_cast<int>(key >> kShiftM & kFieldMask12),
      static_cast<long>(key & kFieldMaskW),
      static_cast<std::uint64_t>(entry),
  };
}

inline DpEntry make_entry(std::uint64_t key, std::uint64_t scode) {
  return (static_cast<DpEntry>(key) << 64) | scode;
}

inline int scode_digit(std::uint64_t s, int pos) { return s >> (2 * pos) & 3; }

// Parity table at one decomposition node: sorted parity-1 cells only.
struct DpTable {
  std::vector<int> bag;          // sorted vertex ids
  std::vector<DpEntry> entries;  // sorted

  bool parity(int a, int e, int m, long w, std::uint64_t scode) const;
  std::size_t size() const { return entries.size(); }
};

enum class JoinPolicy { kAuto, kDirect, kFast };

DpTable dp_leaf();
DpTable dp_introduce_vertex(const DpTable& child, int v);
// Both endpoints must be in the bag. Extends every stored candidate with the
// choice skip / take on V2 / take on V1 (marked or not).
DpTable dp_introduce_edge(const DpTable& child, int u, int v, int edge_w,
                          int marker_w);
DpTable dp_forget(const DpTable& child, int v);
// Children carry identical bags. kAuto picks the pairwise merge for small
// bags or sparse tables and the transform join otherwise; both give
// identical tables.
DpTable dp_join(const DpTable& left, const DpTable& right,
                JoinPolicy policy = JoinPolicy::kAuto);

// True iff some root cell has e = |E|-k and m = a-e, i.e. odd parity for a
// properly marked linear forest of the right size.
bool root_check(const DpTable& root, int edge_total, int k);

struct DpRunStats {
  std::size_t peak_entries = 0;   // max total live cells
  std::size_t peak_table = 0;     // largest single table
  int max_bag = 0;
  std::vector<std::pair<int, std::size_t>> per_node;  // (node, cells)
};

struct DpEvalOptions {
  // Budget used for reachability pruning: cells that cannot reach any
  // queried root key are dropped. Negative disables pruning (required when
  // intermediate tables are inspected or the full k spectrum is wanted).
  int prune_k = -1;
  JoinPolicy join_policy = JoinPolicy::kAuto;
  bool collect_per_node = false;
};

// Bottom-up sweep over the post-ordered nice decomposition; returns the root
// table. The observer, when set, sees every node's finished table.
DpTable evaluate_dp(const Graph& g, const NiceTreeDecomposition& ntd,
                    const WeightAssignment& w, const DpEvalOptions& opts,
                    DpRunStats* stats = nullptr,
                    const std::function<void(int, const DpTable&)>& observer = {});

// One-sided decision: yes answers are certificates, a no is wrong with
// probability at most 1/3 over the weight draw.
bool cut_count_decide(const Graph& g, int k, const NiceTreeDecomposition& ntd,
                      const WeightAssignment& w, DpRunStats* stats = nullptr,
                      JoinPolicy policy = JoinPolicy::kAuto);

// Decisions for every k in [0, |E|] from a single unpruned run.
std::vector<bool> cut_count_all_k(const Graph& g,
                                  const NiceTreeDecomposition& ntd,
                                  const WeightAssignment& w,
                                  DpRunStats* stats = nullptr);

}  // namespace copath
