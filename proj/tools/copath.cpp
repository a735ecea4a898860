#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "copath/brute_force.hpp"
#include "copath/cut_count.hpp"
#include "copath/graph.hpp"
#include "copath/kernel.hpp"
#include "copath/pipeline.hpp"
#include "copath/tree_decomposition.hpp"
#include "copath/weights.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json decision_json(const copath::Decision& d) {
  nlohmann::json j;
  j["answer"] = d.yes ? "yes" : "no";
  j["k"] = d.k;
  j["runs"] = d.runs;
  j["engine"] = d.engine_used;
  j["kernel"] = {{"n", d.kernel_n}, {"m", d.kernel_m}, {"k_prime", d.kernel_k}};
  std::size_t instances = 0;
  std::uint64_t bound = 0;
  for (std::size_t i = 0; i < d.instances_per_k1.size(); ++i) {
    instances += d.instances_per_k1[i];
    bound += d.leaf_bound_per_k1[i];
  }
  j["branching"] = {{"k1_values", d.k1_values},
                    {"instances", instances},
                    {"leaf_bound", bound}};
  j["dp"] = {{"max_bag", d.max_bag}, {"table_peak", d.table_peak}};
  j["timings_ms"] = {{"kernel", d.kernel_ms},
                     {"branch", d.branch_ms},
                     {"solve", d.solve_ms},
                     {"total", d.total_ms}};
  if (d.witness)
    j["witness"] = {{"k1", d.witness->k1},
                    {"instance", d.witness->instance},
                    {"seed", d.witness->seed}};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-co-path solver: decide whether deleting exactly k edges "
               "leaves a disjoint union of paths"};
  app.require_subcommand(1);

  CLI::App* decide = app.add_subcommand("decide", "decide one instance");
  std::string input_path;
  int k = 0;
  std::uint64_t seed = 1;
  double confidence = 0.99;
  std::string engine = "auto";
  int degree_bound = 10;
  bool all_k = false;
  bool json_out = false;
  std::string emit_td;
  bool trace_dp = false;
  std::string kernel_mode = "default";
  int threads = 0;
  decide->add_option("--input", input_path, "DIMACS-style graph file")
      ->required();
  decide->add_option("--k", k, "number of edges to delete")->required();
  decide->add_option("--seed", seed, "base seed for weight sampling");
  decide->add_option("--confidence", confidence,
                     "target success probability in (0,1)");
  decide->add_option("--engine", engine, "auto | dp | brute")
      ->check(CLI::IsMember({"auto", "dp", "brute"}));
  decide->add_option("--degree-bound", degree_bound,
                     "branching degree bound (10..17)");
  decide->add_flag("--all-k", all_k, "also report every budget's answer");
  decide->add_flag("--json", json_out, "emit a JSON report on stdout");
  decide->add_option("--emit-td", emit_td,
                     "write the kernel's tree decomposition (PACE .td)");
  decide->add_flag("--trace-dp", trace_dp, "per-node table sizes on stderr");
  decide->add_option("--kernel", kernel_mode, "default | off")
      ->check(CLI::IsMember({"default", "off"}));
  decide->add_option("--threads", threads, "worker threads (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/error
    return kExitError;
  }

  try {
    const copath::Graph g = copath::parse_graph(read_file(input_path));

    copath::SolverConfig cfg;
    cfg.seed = seed;
    cfg.confidence = confidence;
    cfg.degree_cap = degree_bound;
    cfg.engine = engine == "auto"  ? copath::Engine::kAuto
                 : engine == "dp"  ? copath::Engine::kDp
                                   : copath::Engine::kBrute;
    cfg.use_kernel = kernel_mode == "default";
    cfg.trace_dp = trace_dp;
    cfg.threads = threads;

    if (!emit_td.empty()) {
      const copath::Graph& target =
          cfg.use_kernel ? copath::kernelize(g, k).graph : g;
      std::ofstream out(emit_td);
      if (!out) throw std::runtime_error("cannot write " + emit_td);
      out << copath::to_pace_td(copath::greedy_decomposition(target), target);
    }

    copath::Decision d = copath::copath_decide(g, k, cfg);
    nlohmann::json j = decision_json(d);

    if (all_k) {
      std::vector<bool> spectrum(g.edge_count() + 1, false);
      if (g.edge_count() == 0) {
        spectrum[0] = true;
      } else {
        const auto ntd =
            copath::make_nice(copath::greedy_decomposition(g), g);
        const int rounds = copath::amplification_rounds(confidence);
        for (int r = 0; r < rounds; ++r) {
          const auto w =
              copath::sample_weights(g, copath::mix_seed(seed, 0x5000 + r));
          const auto one = copath::cut_count_all_k(g, ntd, w);
          for (std::size_t i = 0; i < one.size(); ++i)
            if (one[i]) spectrum[i] = true;
        }
      }
      j["all_k"] = spectrum;
      if (!json_out) {
        std::cout << "k spectrum:";
        for (std::size_t i = 0; i < spectrum.size(); ++i)
          if (spectrum[i]) std::cout << ' ' << i;
        std::cout << '\n';
      }
    }

    if (json_out) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
                << " k=" << k << " engine=" << d.engine_used
                << " kernel=" << d.kernel_n << "/" << d.kernel_m
                << " runs=" << d.runs << " time=" << d.total_ms << "ms\n";
      if (d.witness)
        std::cout << "witness: k1=" << d.witness->k1
                  << " instance=" << d.witness->instance
                  << " seed=" << d.witness->seed << '\n';
      std::cout << (d.yes ? "yes" : "no") << '\n';
    }
    return d.yes ? kExitYes : kExitNo;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitError;
  }
}
