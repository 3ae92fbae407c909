// astk: generate synthetic AS-level topologies, analyze graph metrics, and
// compare measured topologies against model output.
//
// Exit codes: 0 success, 2 usage/config/parse error, 3 runtime failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "astk/astk.hpp"

namespace {

struct ModelFlags {
  astk::ModelParams params;

  void attach(CLI::App* cmd) {
    cmd->add_option("--waxman-alpha", params.waxman.alpha, "Waxman alpha in (0,1]");
    cmd->add_option("--waxman-beta", params.waxman.beta, "Waxman beta in (0,1]");
    cmd->add_option("--waxman-plane", params.waxman.plane_size, "Waxman placement square side");
    cmd->add_option("--waxman-target-degree", params.waxman.target_degree,
                    "Waxman target average degree");
    cmd->add_option("--ba-m,--m", params.ba.m, "BA links per new node");
    cmd->add_option("--ba-m0,--m0", params.ba.m0, "BA seed-ring size (>= 3)");
    cmd->add_option("--glp-m", params.glp.m, "GLP links per step");
    cmd->add_option("--glp-m0", params.glp.m0, "GLP seed-ring size");
    cmd->add_option("--glp-p-add", params.glp.p_add, "GLP probability a step adds a node");
    cmd->add_option("--glp-beta", params.glp.beta_pref, "GLP preference shift (< 1)");
    cmd->add_option("--inet-frac-degree-one", params.inet.frac_degree_one,
                    "Inet fraction of degree-1 nodes");
    cmd->add_option("--inet-exponent", params.inet.exponent, "Inet degree power-law exponent");
    cmd->add_option("--inet-core", params.inet.core_size, "Inet full-mesh core size");
    cmd->add_option("--pfp-p", params.pfp.p_new, "PFP probability of step variant 1");
    cmd->add_option("--pfp-q", params.pfp.q_new, "PFP probability of step variant 2");
    cmd->add_option("--pfp-delta", params.pfp.delta, "PFP nonlinearity parameter");
  }

  // GLP shares --m/--m0 with BA when given through the aliases.
  void reconcile(const CLI::App* cmd, const std::string& model) {
    if (model == "glp") {
      if (cmd->count("--ba-m") > 0 && cmd->count("--glp-m") == 0)
        params.glp.m = params.ba.m;
      if (cmd->count("--ba-m0") > 0 && cmd->count("--glp-m0") == 0)
        params.glp.m0 = params.ba.m0;
    }
  }
};

std::uint64_t resolve_seed(const CLI::App* cmd, std::uint64_t seed_flag) {
  if (cmd->count("--seed") > 0) return seed_flag;
  std::random_device rd;
  std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cout << "seed: " << seed << "\n";
  return seed;
}

astk::Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw astk::IoError("cannot read " + path);
  return astk::parse_edge_list(in);
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

astk::AnalyzeOptions make_options(const std::string& metrics_csv, int jobs,
                                  int clique_budget_s, std::size_t extremes_k) {
  astk::AnalyzeOptions opts;
  if (metrics_csv != "all") {
    for (const auto& name : split_list(metrics_csv)) {
      if (std::find(astk::metric_names().begin(), astk::metric_names().end(), name) ==
          astk::metric_names().end())
        throw astk::ConfigError("unknown metric '" + name + "'");
      opts.metrics.insert(name);
    }
  }
  opts.jobs = jobs;
  opts.clique.budget = std::chrono::seconds(clique_budget_s);
  opts.spectrum.extremes_k = extremes_k;
  return opts;
}

int run(int argc, char** argv) {
  CLI::App app{"AS-topology generation, analysis, and model comparison"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a synthetic topology");
  std::string gen_model;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("model", gen_model, "Model: waxman|ba|glp|inet|pfp")->required();
  gen->add_option("--n", gen_n, "Node count")->required();
  gen->add_option("--seed", gen_seed, "RNG seed (omit for a random, printed seed)");
  gen->add_option("--out", gen_out, "Output edge-list path")->required();
  ModelFlags gen_flags;
  gen_flags.attach(gen);

  // analyze
  auto* ana = app.add_subcommand("analyze", "Compute metrics for an edge-list file");
  std::string ana_in, ana_metrics = "all", ana_out, ana_format = "json";
  int ana_jobs = 1, ana_clique_budget = 60;
  std::size_t ana_extremes_k = 50;
  ana->add_option("--in", ana_in, "Input edge-list path")->required();
  ana->add_option("--metrics", ana_metrics,
                  "Comma list of degree,assortativity,clustering,richclub,path,"
                  "centrality,coreness,clique,spectrum, or 'all'");
  ana->add_option("--out", ana_out, "Output report path")->required();
  ana->add_option("--format", ana_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  ana->add_option("--jobs", ana_jobs, "Worker threads for BFS-heavy metrics");
  ana->add_option("--clique-budget", ana_clique_budget, "Clique search budget, seconds");
  ana->add_option("--extremes-k", ana_extremes_k, "Eigenvalue count per end in extremes mode");

  // compare
  auto* cmp = app.add_subcommand("compare", "Compare a measured topology against models");
  std::string cmp_target, cmp_models = "waxman,ba,glp,inet,pfp", cmp_out;
  std::size_t cmp_runs = 10;
  std::uint64_t cmp_seed = 0;
  std::string cmp_metrics = "all";
  int cmp_jobs = 1, cmp_clique_budget = 60;
  std::size_t cmp_extremes_k = 50;
  cmp->add_option("--target", cmp_target, "Measured edge-list path")->required();
  cmp->add_option("--models", cmp_models, "Comma list of models");
  cmp->add_option("--runs", cmp_runs, "Synthetic instances per model");
  cmp->add_option("--seed", cmp_seed, "Master seed (omit for a random, printed seed)");
  cmp->add_option("--out", cmp_out, "Output directory")->required();
  cmp->add_option("--metrics", cmp_metrics, "Metric selection, as in analyze");
  cmp->add_option("--jobs", cmp_jobs, "Worker threads");
  cmp->add_option("--clique-budget", cmp_clique_budget, "Clique search budget, seconds");
  cmp->add_option("--extremes-k", cmp_extremes_k, "Eigenvalue count per end in extremes mode");
  ModelFlags cmp_flags;
  cmp_flags.attach(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (gen->parsed()) {
    gen_flags.reconcile(gen, gen_model);
    std::uint64_t seed = resolve_seed(gen, gen_seed);
    astk::Graph g = astk::generate_model(gen_model, gen_n, seed, gen_flags.params);
    std::ofstream out(gen_out, std::ios::binary);
    if (!out) throw astk::IoError("cannot write " + gen_out);
    astk::write_edge_list(g, out);
    std::cout << "model=" << gen_model << " N=" << g.node_count()
              << " M=" << g.edge_count() << "\n";
    return 0;
  }

  if (ana->parsed()) {
    astk::AnalyzeOptions opts =
        make_options(ana_metrics, ana_jobs, ana_clique_budget, ana_extremes_k);
    astk::Graph g = load_graph(ana_in);
    astk::MetricReport report =
        astk::analyze(g, opts, std::filesystem::path(ana_in).stem().string());
    std::ofstream out(ana_out, std::ios::binary);
    if (!out) throw astk::IoError("cannot write " + ana_out);
    if (ana_format == "json") {
      out << astk::to_json(report).dump(2) << "\n";
    } else {
      out << "graph_id,metric,value\n" << astk::detail::csv_rows(report);
    }
    std::cout << "analyzed N=" << g.node_count() << " M=" << g.edge_count() << "\n";
    return 0;
  }

  // compare
  cmp_flags.reconcile(cmp, "glp");
  astk::AnalyzeOptions opts =
      make_options(cmp_metrics, cmp_jobs, cmp_clique_budget, cmp_extremes_k);
  std::uint64_t seed = resolve_seed(cmp, cmp_seed);
  astk::Graph target = load_graph(cmp_target);
  astk::ComparisonRun run = astk::run_comparison(target, split_list(cmp_models), cmp_runs,
                                                 seed, opts, cmp_flags.params);
  astk::emit_report(run,
                    {astk::ReportFormat::kJson, astk::ReportFormat::kCsv,
                     astk::ReportFormat::kPlotdata},
                    cmp_out);
  std::cout << "compared target N=" << target.node_count() << " against "
            << split_list(cmp_models).size() << " model(s), " << cmp_runs
            << " run(s) each\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const astk::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const astk::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const astk::EmptyInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const astk::DuplicateEdgeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
