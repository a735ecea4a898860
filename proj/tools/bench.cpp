// Timing harness comparing the serial reference kernels against the
// transform-based / parallel ones on synthetic inputs.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "copath/cut_count.hpp"
#include "copath/graph.hpp"
#include "copath/pipeline.hpp"
#include "copath/z4.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double ms(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

copath::Z4Table random_table(int b, std::mt19937_64& rng) {
  copath::Z4Table t = copath::Z4Table::zero(b);
  for (auto& v : t.values) v = rng() & 1;
  return t;
}

void bench_product() {
  std::mt19937_64 rng(7);
  std::printf("z4 product (one call, ms)\n");
  std::printf("%4s %12s %12s\n", "|B|", "naive", "transform");
  for (int b = 3; b <= 8; ++b) {
    auto f = random_table(b, rng);
    auto g = random_table(b, rng);
    auto t0 = Clock::now();
    auto slow = copath::z4_product_naive(f, g);
    auto t1 = Clock::now();
    auto fast = copath::z4_product_fast(f, g);
    auto t2 = Clock::now();
    for (std::size_t i = 0; i < slow.values.size(); ++i)
      if ((slow.values[i] & 1) != fast.values[i]) {
        std::printf("MISMATCH at b=%d\n", b);
        return;
      }
    std::printf("%4d %12.3f %12.3f\n", b, ms(t0, t1), ms(t1, t2));
  }
}

copath::DpTable random_dp_table(int bag_size, std::size_t entries,
                                std::mt19937_64& rng) {
  copath::DpTable t;
  for (int i = 0; i < bag_size; ++i) t.bag.push_back(i + 1);
  std::vector<copath::DpEntry> ev;
  for (std::size_t i = 0; i < entries; ++i) {
    const int a = static_cast<int>(rng() % 16);
    const int e = static_cast<int>(rng() % 16);
    const int m = static_cast<int>(rng() % 8);
    const long w = static_cast<long>(rng() % 4096);
    std::uint64_t s = 0;
    for (int p = 0; p < bag_size; ++p) s |= (rng() & 3) << (2 * p);
    ev.push_back(copath::make_entry(copath::pack_key(a, e, m, w), s));
  }
  std::sort(ev.begin(), ev.end());
  ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
  t.entries = std::move(ev);
  return t;
}

void bench_join() {
  std::mt19937_64 rng(11);
  std::printf("\ndp join (one call, ms)\n");
  std::printf("%4s %8s %12s %12s\n", "bag", "cells", "direct", "transform");
  for (int b : {4, 5, 6}) {
    for (std::size_t n : {2000u, 8000u}) {
      auto l = random_dp_table(b, n, rng);
      auto r = random_dp_table(b, n, rng);
      auto t0 = Clock::now();
      auto direct = copath::dp_join(l, r, copath::JoinPolicy::kDirect);
      auto t1 = Clock::now();
      auto fast = copath::dp_join(l, r, copath::JoinPolicy::kFast);
      auto t2 = Clock::now();
      if (direct.entries != fast.entries) {
        std::printf("MISMATCH at bag=%d\n", b);
        return;
      }
      std::printf("%4d %8zu %12.3f %12.3f\n", b, l.size() + r.size(),
                  ms(t0, t1), ms(t1, t2));
    }
  }
}

void bench_pipeline() {
  std::mt19937_64 rng(3);
  const int n = 32, m = 36;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (static_cast<int>(edges.size()) < m) {
    int u = 1 + static_cast<int>(rng() % n);
    int v = 1 + static_cast<int>(rng() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    edges.push_back({u, v});
  }
  copath::Graph g(n, edges);
  copath::SolverConfig cfg;
  cfg.engine = copath::Engine::kDp;
  cfg.seed = 5;
  std::printf("\npipeline, n=%d m=%d k=6 (dp engine, ms)\n", n, m);
  for (int threads : {1, 0}) {
    cfg.threads = threads;
    auto t0 = Clock::now();
    auto d = copath::copath_decide(g, 6, cfg);
    auto t1 = Clock::now();
    std::printf("threads=%-2s answer=%-3s runs=%-3d %10.1f\n",
                threads == 1 ? "1" : "max", d.yes ? "yes" : "no", d.runs,
                ms(t0, t1));
  }
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp max threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without openmp\n\n");
#endif
  bench_product();
  bench_join();
  bench_pipeline();
  return 0;
}
