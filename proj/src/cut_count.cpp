#include "copath/cut_count.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>

#include "copath/z4.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace copath {

namespace {

constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;
constexpr std::uint64_t kHighBits = 0xAAAAAAAAAAAAAAAAULL;
constexpr int kMaxBagForState = 30;  // 2 bits per position in a 64-bit code

int bag_position(const std::vector<int>& bag, int v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v) return -1;
  return static_cast<int>(it - bag.begin());
}

// Degree sum of a state: digit values 0,1,1,2 are exactly the per-digit
// popcounts.
inline int rho_sum(std::uint64_t s) { return std::popcount(s); }

inline int twos_count(std::uint64_t s) {
  return std::popcount(s & (s >> 1) & kLowBits);
}

// Digit map 0,1_1,1_2,2 -> 0,1,3,2: swaps the two high digit values, its own
// inverse.
inline std::uint64_t phi_code(std::uint64_t s) {
  return s ^ ((s & kHighBits) >> 1);
}

inline std::uint64_t set_digit(std::uint64_t s, int pos, int d) {
  return (s & ~(std::uint64_t{3} << (2 * pos))) |
         (static_cast<std::uint64_t>(d) << (2 * pos));
}

void sort_entries(std::vector<DpEntry>& v) {
#ifdef _OPENMP
  if (v.size() >= (1u << 17) && omp_get_max_threads() > 1 &&
      !omp_in_parallel()) {
    const std::size_t half = v.size() / 2;
#pragma omp parallel sections
    {
#pragma omp section
      std::sort(v.begin(), v.begin() + half);
#pragma omp section
      std::sort(v.begin() + half, v.end());
    }
    std::inplace_merge(v.begin(), v.begin() + half, v.end());
    return;
  }
#endif
  std::sort(v.begin(), v.end());
}

// Sort and cancel duplicate cells pairwise: the table is a parity vector.
void normalize(std::vector<DpEntry>& events) {
  sort_entries(events);
  std::size_t out = 0;
  for (std::size_t i = 0; i < events.size();) {
    std::size_t j = i + 1;
    while (j < events.size() && events[j] == events[i]) ++j;
    if ((j - i) & 1) events[out++] = events[i];
    i = j;
  }
  events.resize(out);
}

}  // namespace

bool DpTable::parity(int a, int e, int m, long w, std::uint64_t scode) const {
  return std::binary_search(entries.begin(), entries.end(),
                            make_entry(pack_key(a, e, m, w), scode));
}

DpTable dp_leaf() {
  DpTable t;
  t.entries.push_back(make_entry(pack_key(0, 0, 0, 0), 0));
  return t;
}

DpTable dp_introduce_vertex(const DpTable& child, int v) {
  if (bag_position(child.bag, v) >= 0)
    throw std::invalid_argument("introduce: vertex already in bag");
  if (child.bag.size() >= kMaxBagForState)
    throw std::invalid_argument("bag too large for packed state");
  DpTable t;
  t.bag = child.bag;
  auto ins = std::upper_bound(t.bag.begin(), t.bag.end(), v);
  const int p = static_cast<int>(ins - t.bag.begin());
  t.bag.insert(ins, v);
  const std::uint64_t low_mask = (std::uint64_t{1} << (2 * p)) - 1;
  t.entries.reserve(child.entries.size());
  // New digit is 0; the shift is monotone, so order is preserved.
  for (DpEntry entry : child.entries) {
    const std::uint64_t s = static_cast<std::uint64_t>(entry);
    const std::uint64_t shifted = ((s & ~low_mask) << 2) | (s & low_mask);
    t.entries.push_back((entry >> 64 << 64) | shifted);
  }
  return t;
}

DpTable dp_introduce_edge(const DpTable& child, int u, int v, int edge_w,
                          int marker_w) {
  const int pu = bag_position(child.bag, u);
  const int pv = bag_position(child.bag, v);
  if (pu < 0 || pv < 0)
    throw std::invalid_argument("introduce-edge: endpoint not in bag");
  DpTable t;
  t.bag = child.bag;
  std::vector<DpEntry> events;
  events.reserve(child.entries.size() * 3);
  const std::uint64_t take_delta =
      (std::uint64_t{1} << kShiftE) + static_cast<std::uint64_t>(edge_w);
  const std::uint64_t mark_delta =
      (std::uint64_t{1} << kShiftM) + static_cast<std::uint64_t>(marker_w);
  for (DpEntry entry : child.entries) {
    events.push_back(entry);  // the edge stays out of the candidate
    const std::uint64_t key = static_cast<std::uint64_t>(entry >> 64);
    const std::uint64_t s = static_cast<std::uint64_t>(entry);
    const int du = scode_digit(s, pu);
    const int dv = scode_digit(s, pv);
    const std::uint64_t newly_nonisolated =
        static_cast<std::uint64_t>((du == kDigit0) + (dv == kDigit0))
        << kShiftA;
    // Take on the V1 side: endpoints must be isolated or degree 1 on V1.
    if ((du == kDigit0 || du == kDigit1Side1) &&
        (dv == kDigit0 || dv == kDigit1Side1)) {
      std::uint64_t s1 = set_digit(s, pu, du == kDigit0 ? kDigit1Side1 : kDigit2);
      s1 = set_digit(s1, pv, dv == kDigit0 ? kDigit1Side1 : kDigit2);
      const std::uint64_t k1 = key + newly_nonisolated + take_delta;
      events.push_back(make_entry(k1, s1));
      events.push_back(make_entry(k1 + mark_delta, s1));  // edge as marker
    }
    // Take on the V2 side; markers are not available there.
    if ((du == kDigit0 || du == kDigit1Side2) &&
        (dv == kDigit0 || dv == kDigit1Side2)) {
      std::uint64_t s2 = set_digit(s, pu, du == kDigit0 ? kDigit1Side2 : kDigit2);
      s2 = set_digit(s2, pv, dv == kDigit0 ? kDigit1Side2 : kDigit2);
      events.push_back(make_entry(key + newly_nonisolated + take_delta, s2));
    }
  }
  normalize(events);
  t.entries = std::move(events);
  return t;
}

DpTable dp_forget(const DpTable& child, int v) {
  const int p = bag_position(child.bag, v);
  if (p < 0) throw std::invalid_argument("forget: vertex not in bag");
  DpTable t;
  t.bag = child.bag;
  t.bag.erase(t.bag.begin() + p);
  const std::uint64_t low_mask = (std::uint64_t{1} << (2 * p)) - 1;
  std::vector<DpEntry> events;
  events.reserve(child.entries.size());
  for (DpEntry entry : child.entries) {
    const std::uint64_t s = static_cast<std::uint64_t>(entry);
    const std::uint64_t shrunk = ((s >> 2) & ~low_mask) | (s & low_mask);
    events.push_back((entry >> 64 << 64) | shrunk);
  }
  normalize(events);
  t.entries = std::move(events);
  return t;
}

namespace {

DpTable join_direct(const DpTable& left, const DpTable& right) {
  DpTable t;
  t.bag = left.bag;
  std::vector<DpEntry> events;
  for (DpEntry el : left.entries) {
    const std::uint64_t kl = static_cast<std::uint64_t>(el >> 64);
    const std::uint64_t s1 = static_cast<std::uint64_t>(el);
    const std::uint64_t nz1 = (s1 | (s1 >> 1)) & kLowBits;
    for (DpEntry er : right.entries) {
      const std::uint64_t s2 = static_cast<std::uint64_t>(er);
      const std::uint64_t nz2 = (s2 | (s2 >> 1)) & kLowBits;
      const std::uint64_t both = nz1 & nz2;
      const std::uint64_t both_mask = both | (both << 1);
      // Where both sides are non-isolated the digits must agree and be
      // degree 1; those vertices merge into degree 2.
      if ((s1 ^ s2) & both_mask) continue;
      if (s1 & (s1 >> 1) & both) continue;
      const std::uint64_t s = s1 | s2 | both_mask;
      const std::uint64_t overlap = static_cast<std::uint64_t>(
          std::popcount(both));
      const std::uint64_t key =
          kl + static_cast<std::uint64_t>(er >> 64) - (overlap << kShiftA);
      events.push_back(make_entry(key, s));
    }
  }
  normalize(events);
  t.entries = std::move(events);
  return t;
}

// Group key for the transform join: (d, key with the a-field shifted by the
// number of degree-2 digits). Both components sum componentwise across the
// join, which makes the overlap correction a plain vector sum: two degree-1
// halves merging into one degree-2 vertex leave a + #twos unchanged.
using GroupKey = std::pair<std::uint64_t, std::uint32_t>;

struct GroupedTable {
  std::vector<GroupKey> keys;
  std::vector<std::vector<std::uint64_t>> codes;  // phi codes per group
};

GroupedTable build_groups(const DpTable& t) {
  std::map<GroupKey, std::vector<std::uint64_t>> acc;
  for (DpEntry entry : t.entries) {
    const std::uint64_t key = static_cast<std::uint64_t>(entry >> 64);
    const std::uint64_t s = static_cast<std::uint64_t>(entry);
    const GroupKey gk{
        key + (static_cast<std::uint64_t>(twos_count(s)) << kShiftA),
        static_cast<std::uint32_t>(rho_sum(s))};
    acc[gk].push_back(phi_code(s));
  }
  GroupedTable out;
  out.keys.reserve(acc.size());
  out.codes.reserve(acc.size());
  for (auto& [k, v] : acc) {
    out.keys.push_back(k);
    out.codes.push_back(std::move(v));
  }
  return out;
}

DpTable join_fast(const DpTable& left, const DpTable& right) {
  const int b = static_cast<int>(left.bag.size());
  const std::size_t cells = std::size_t{1} << (2 * b);
  GroupedTable lg = build_groups(left);
  GroupedTable rg = build_groups(right);

  auto transform_all = [&](const GroupedTable& g) {
    std::vector<std::vector<std::uint64_t>> out(g.keys.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(g.keys.size());
         ++i) {
      out[i].assign(cells, 0);
      for (std::uint64_t code : g.codes[i]) out[i][code] = 1;
      z4_forward(out[i], b);
    }
    return out;
  };
  auto tl = transform_all(lg);
  auto tr = transform_all(rg);

  // Pair lists per output group.
  std::map<GroupKey, std::vector<std::pair<int, int>>> by_out;
  for (std::size_t i = 0; i < lg.keys.size(); ++i)
    for (std::size_t j = 0; j < rg.keys.size(); ++j)
      by_out[{lg.keys[i].first + rg.keys[j].first,
              lg.keys[i].second + rg.keys[j].second}]
          .push_back({static_cast<int>(i), static_cast<int>(j)});

  std::vector<std::pair<GroupKey, const std::vector<std::pair<int, int>>*>>
      out_groups;
  out_groups.reserve(by_out.size());
  for (const auto& [k, pairs] : by_out) out_groups.push_back({k, &pairs});

  std::vector<std::vector<DpEntry>> results(out_groups.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> acc;
#pragma omp for schedule(dynamic)
    for (std::int64_t gi = 0; gi < static_cast<std::int64_t>(out_groups.size());
         ++gi) {
      const auto& [gk, pairs] = out_groups[gi];
      acc.assign(cells, 0);
      for (auto [li, ri] : *pairs)
        for (std::size_t c = 0; c < cells; ++c)
          acc[c] = z4_addmod(acc[c], z4_mulmod(tl[li][c], tr[ri][c]));
      z4_inverse(acc, b);
      const std::uint64_t out_key = gk.first;
      const std::uint32_t d = gk.second;
      for (std::size_t c = 0; c < cells; ++c) {
        if (!(acc[c] & 1)) continue;
        const std::uint64_t s = phi_code(c);  // involution
        if (static_cast<std::uint32_t>(rho_sum(s)) != d) continue;
        const std::uint64_t key =
            out_key - (static_cast<std::uint64_t>(twos_count(s)) << kShiftA);
        results[gi].push_back(make_entry(key, s));
      }
    }
  }

  DpTable t;
  t.bag = left.bag;
  std::vector<DpEntry> events;
  for (auto& r : results)
    events.insert(events.end(), r.begin(), r.end());
  normalize(events);
  t.entries = std::move(events);
  return t;
}

}  // namespace

DpTable dp_join(const DpTable& left, const DpTable& right, JoinPolicy policy) {
  if (left.bag != right.bag)
    throw std::invalid_argument("join: bag mismatch");
  if (policy == JoinPolicy::kDirect) return join_direct(left, right);
  if (policy == JoinPolicy::kFast) return join_fast(left, right);

  const int b = static_cast<int>(left.bag.size());
  const double direct_cost =
      static_cast<double>(left.size()) * static_cast<double>(right.size());
  if (b <= 3 || direct_cost <= double{1 << 22}) return join_direct(left, right);
  // Rough transform cost: one pass per side and output group over 4^b cells.
  const double cells = std::pow(4.0, b);
  const double fast_cost = 3.0 * cells * (b + 2) *
                           (std::sqrt(direct_cost) + 1.0);
  if (cells * 16 > 1.5e9 || fast_cost > direct_cost)
    return join_direct(left, right);
  return join_fast(left, right);
}

bool root_check(const DpTable& root, int edge_total, int k) {
  if (!root.bag.empty())
    throw std::invalid_argument("root_check: bag not empty");
  if (k < 0 || k > edge_total) return false;
  const int target_e = edge_total - k;
  for (DpEntry entry : root.entries) {
    const DpEntryView v = unpack_entry(entry);
    if (v.e == target_e && v.m == v.a - v.e) return true;
  }
  return false;
}

namespace {

void prune_table(DpTable& t, int e_min, int e_max, int m_max) {
  std::erase_if(t.entries, [&](DpEntry entry) {
    const DpEntryView v = unpack_entry(entry);
    return v.e < e_min || v.e > e_max || v.m > m_max;
  });
}

}  // namespace

DpTable evaluate_dp(const Graph& g, const NiceTreeDecomposition& ntd,
                    const WeightAssignment& w, const DpEvalOptions& opts,
                    DpRunStats* stats,
                    const std::function<void(int, const DpTable&)>& observer) {
  if (ntd.nodes.empty()) throw std::invalid_argument("empty decomposition");
  if (ntd.width() + 1 > kMaxBagForState)
    throw std::invalid_argument("decomposition too wide for packed state");
  long weight_total = 0;
  for (int id : g.edge_ids())
    weight_total += w.edge_w(id) + w.marker_w(id);
  if (weight_total >= static_cast<long>(kFieldMaskW))
    throw std::invalid_argument("weights exceed packed field");

  const int node_count = static_cast<int>(ntd.nodes.size());
  std::vector<int> edges_below(node_count, 0);
  for (int i = 0; i < node_count; ++i) {
    const NiceNode& n = ntd.nodes[i];
    edges_below[i] = (n.type == NodeType::kIntroduceEdge ? 1 : 0);
    if (n.left >= 0) edges_below[i] += edges_below[n.left];
    if (n.right >= 0) edges_below[i] += edges_below[n.right];
  }
  const int total_edges = g.edge_count();
  const int prune_k = opts.prune_k;
  const int m_max =
      prune_k >= 0 ? g.vertex_count() - (total_edges - prune_k) : 0;

  std::vector<DpTable> slots(node_count);
  std::size_t live = 0, peak = 0, peak_table = 0;
  int max_bag = 0;
  for (int i = 0; i < node_count; ++i) {
    const NiceNode& n = ntd.nodes[i];
    DpTable t;
    switch (n.type) {
      case NodeType::kLeaf:
        t = dp_leaf();
        break;
      case NodeType::kIntroduceVertex:
        t = dp_introduce_vertex(slots[n.left], n.vertex);
        break;
      case NodeType::kIntroduceEdge: {
        const Edge e = g.edge(n.edge_id);
        t = dp_introduce_edge(slots[n.left], e.u, e.v, w.edge_w(n.edge_id),
                              w.marker_w(n.edge_id));
        break;
      }
      case NodeType::kForgetVertex:
        t = dp_forget(slots[n.left], n.vertex);
        break;
      case NodeType::kJoin:
        t = dp_join(slots[n.left], slots[n.right], opts.join_policy);
        break;
    }
    assert(t.bag == n.bag);
    if (prune_k >= 0)
      prune_table(t, edges_below[i] - prune_k, total_edges - prune_k, m_max);
    if (observer) observer(i, t);

    for (int c : {n.left, n.right})
      if (c >= 0) {
        live -= slots[c].size();
        slots[c] = DpTable{};
      }
    live += t.size();
    peak = std::max(peak, live);
    peak_table = std::max(peak_table, t.size());
    max_bag = std::max(max_bag, static_cast<int>(t.bag.size()));
    if (stats && opts.collect_per_node) stats->per_node.push_back({i, t.size()});
    slots[i] = std::move(t);
  }
  if (stats) {
    stats->peak_entries = peak;
    stats->peak_table = peak_table;
    stats->max_bag = max_bag;
  }
  return std::move(slots[ntd.root]);
}

bool cut_count_decide(const Graph& g, int k, const NiceTreeDecomposition& ntd,
                      const WeightAssignment& w, DpRunStats* stats,
                      JoinPolicy policy) {
  if (k < 0) throw std::invalid_argument("negative budget");
  if (g.edge_count() == 0) return k == 0;
  if (k > g.edge_count()) return false;
  // A linear forest on n vertices cannot keep more than n edges.
  if (g.edge_count() - k > g.vertex_count()) return false;
  DpEvalOptions opts;
  opts.prune_k = k;
  opts.join_policy = policy;
  DpTable root = evaluate_dp(g, ntd, w, opts, stats);
  return root_check(root, g.edge_count(), k);
}

std::vector<bool> cut_count_all_k(const Graph& g,
                                  const NiceTreeDecomposition& ntd,
                                  const WeightAssignment& w,
                                  DpRunStats* stats) {
  const int total = g.edge_count();
  std::vector<bool> yes(total + 1, false);
  if (total == 0) {
    yes[0] = true;
    return yes;
  }
  DpEvalOptions opts;  // no pruning: the whole spectrum is queried
  DpTable root = evaluate_dp(g, ntd, w, opts, stats);
  for (DpEntry entry : root.entries) {
    const DpEntryView v = unpack_entry(entry);
    if (v.e <= total && v.m == v.a - v.e) yes[total - v.e] = true;
  }
  return yes;
}

}  // namespace copath
