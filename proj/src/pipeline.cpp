#include "copath/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "copath/branch.hpp"
#include "copath/brute_force.hpp"
#include "copath/kernel.hpp"
#include "copath/tree_decomposition.hpp"
#include "copath/weights.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace copath {

namespace {

constexpr int kAutoBruteMaxVertices = 12;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

struct Job {
  int k1_index = 0;
  int instance = 0;  // index within the k1 block
  int repetition = 0;
  bool brute = false;
  std::uint64_t seed = 0;
};

struct PreparedInstance {
  const ReducedInstance* inst = nullptr;
  NiceTreeDecomposition ntd;  // only for dp instances
  bool brute = false;
};

}  // namespace

int amplification_rounds(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::invalid_argument("confidence must be in (0,1)");
  return static_cast<int>(
      std::ceil(std::log(1.0 - confidence) / std::log(1.0 / 3.0)));
}

Decision copath_decide(const Graph& g, int k, const SolverConfig& cfg) {
  if (k < 0) throw std::invalid_argument("negative budget");
  if (cfg.engine != Engine::kBrute &&
      (cfg.degree_cap < 10 || cfg.degree_cap > 17))
    throw std::invalid_argument("degree bound must be in [10, 17]");
  const auto t_start = std::chrono::steady_clock::now();

  Decision d;
  d.k = k;
  d.engine_used = cfg.engine == Engine::kAuto   ? "auto"
                  : cfg.engine == Engine::kDp   ? "dp"
                                                : "brute";
  d.repetitions = amplification_rounds(cfg.confidence);

  if (cfg.engine == Engine::kBrute) {
    d.yes = brute_force_decide(g, k);
    d.runs = 1;
    d.kernel_n = g.vertex_count();
    d.kernel_m = g.edge_count();
    d.kernel_k = k;
    d.total_ms = ms_since(t_start);
    return d;
  }

  // Kernel.
  const auto t_kernel = std::chrono::steady_clock::now();
  KernelResult kr;
  if (cfg.use_kernel) {
    kr = kernelize(g, k);
  } else {
    kr.graph = g;
    kr.k = k;
    kr.forced_no = k > g.edge_count();
  }
  d.kernel_ms = ms_since(t_kernel);
  d.kernel_n = kr.graph.vertex_count();
  d.kernel_m = kr.graph.edge_count();
  d.kernel_k = kr.k;
  d.kernel_forced_no = kr.forced_no;
  if (kr.forced_no) {
    d.total_ms = ms_since(t_start);
    return d;
  }
  const Graph& core = kr.graph;
  const int budget = kr.k;
  if (core.edge_count() == 0) {
    d.yes = budget == 0;
    d.runs = 1;
    d.total_ms = ms_since(t_start);
    return d;
  }

  // Branch: k1 sweep over multiples of D-1.
  const auto t_branch = std::chrono::steady_clock::now();
  const int step = cfg.degree_cap - 1;
  std::vector<std::vector<ReducedInstance>> blocks;
  for (int k1 = 0; k1 <= budget; k1 += step) {
    d.k1_values.push_back(k1);
    blocks.push_back(deg_branch(core, budget, k1, cfg.degree_cap, k1));
    d.instances_per_k1.push_back(blocks.back().size());
    d.leaf_bound_per_k1.push_back(leaf_bound(k1, cfg.degree_cap));
  }
  d.branch_ms = ms_since(t_branch);

  // Prepare instances (decomposition shared across repetitions) and the
  // canonical job list.
  const auto t_solve = std::chrono::steady_clock::now();
  std::vector<std::vector<PreparedInstance>> prepared(blocks.size());
  std::vector<Job> jobs;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    prepared[b].resize(blocks[b].size());
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      PreparedInstance& p = prepared[b][i];
      p.inst = &blocks[b][i];
      p.brute = cfg.engine == Engine::kAuto &&
                p.inst->graph.vertex_count() <= kAutoBruteMaxVertices;
      const std::uint64_t salt = (static_cast<std::uint64_t>(b) << 40) ^
                                 (static_cast<std::uint64_t>(i) << 16);
      if (p.brute) {
        jobs.push_back(Job{static_cast<int>(b), static_cast<int>(i), 0, true,
                           mix_seed(cfg.seed, salt)});
      } else {
        p.ntd = make_nice(greedy_decomposition(p.inst->graph), p.inst->graph);
        for (int r = 0; r < d.repetitions; ++r)
          jobs.push_back(Job{static_cast<int>(b), static_cast<int>(i), r,
                             false, mix_seed(cfg.seed, salt ^ r)});
      }
    }
  }

  const long total_jobs = static_cast<long>(jobs.size());
  std::vector<char> outcome(jobs.size(), 0);
  std::vector<DpRunStats> job_stats(jobs.size());
  std::atomic<long> first_yes{total_jobs};
  std::atomic<bool> failed{false};
  std::string failure;

  auto run_job = [&](long j) {
    try {
      const Job& job = jobs[j];
      const PreparedInstance& p = prepared[job.k1_index][job.instance];
      bool yes;
      if (job.brute) {
        yes = brute_force_decide(p.inst->graph, p.inst->k);
      } else {
        const WeightAssignment w = sample_weights(p.inst->graph, job.seed);
        yes = cut_count_decide(p.inst->graph, p.inst->k, p.ntd, w,
                               &job_stats[j], cfg.join_policy);
        if (cfg.trace_dp)
          std::fprintf(stderr,
                       "job %ld: k1=%d inst=%d rep=%d peak=%zu bag=%d\n", j,
                       d.k1_values[job.k1_index], job.instance, job.repetition,
                       job_stats[j].peak_entries, job_stats[j].max_bag);
      }
      outcome[j] = yes;
      if (yes) {
        long cur = first_yes.load();
        while (j < cur && !first_yes.compare_exchange_weak(cur, j)) {
        }
      }
    } catch (const std::exception& ex) {
      if (!failed.exchange(true)) failure = ex.what();
    }
  };

#ifdef _OPENMP
  const int nt = cfg.trace_dp ? 1
                 : cfg.threads > 0 ? cfg.threads
                                   : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (long j = 0; j < total_jobs; ++j) {
    if (j > first_yes.load()) continue;  // a yes earlier in the order exists
    run_job(j);
  }
#else
  for (long j = 0; j < total_jobs && j <= first_yes.load(); ++j) run_job(j);
#endif

  if (failed.load()) throw std::runtime_error("solver job failed: " + failure);

  const long hit = first_yes.load();
  if (hit < total_jobs) {
    d.yes = true;
    d.runs = static_cast<int>(hit + 1);
    const Job& job = jobs[hit];
    d.witness = Witness{d.k1_values[job.k1_index], job.instance, job.seed};
  } else {
    d.yes = false;
    d.runs = static_cast<int>(total_jobs);
  }
  // Stats over the canonical prefix only, so reports are schedule-independent.
  const long prefix = d.yes ? hit + 1 : total_jobs;
  for (long j = 0; j < prefix; ++j) {
    d.max_bag = std::max(d.max_bag, job_stats[j].max_bag);
    d.table_peak = std::max(d.table_peak, job_stats[j].peak_entries);
  }
  d.solve_ms = ms_since(t_solve);
  d.total_ms = ms_since(t_start);
  return d;
}

}  // namespace copath
