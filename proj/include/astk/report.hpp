#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "astk/clique.hpp"
#include "astk/datasets.hpp"
#include "astk/errors.hpp"
#include "astk/generators.hpp"
#include "astk/graph.hpp"
#include "astk/metrics.hpp"
#include "astk/rng.hpp"
#include "astk/spectrum.hpp"

namespace astk {

using Json = nlohmann::ordered_json;

// Metric section names accepted by analyze()/the CLI.
inline const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names = {
      "degree", "assortativity", "clustering", "richclub", "path",
      "centrality", "coreness", "clique", "spectrum"};
  return names;
}

struct AnalyzeOptions {
  std::set<std::string> metrics;  // empty means all
  int jobs = 1;
  CliqueOptions clique;
  SpectrumOptions spectrum;
  // When unset, full spectrum is used up to spectrum.full_mode_limit nodes
  // and extremes mode beyond.
  std::optional<SpectrumMode> spectrum_mode;

  bool enabled(const std::string& name) const {
    return metrics.empty() || metrics.count(name) > 0;
  }
};

// Every computed scalar and distribution for one graph. Optional scalars are
// absent when their metric was disabled, undefined, or failed; the reason
// lands in `skipped`.
struct MetricReport {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;

  std::optional<double> avg_degree;
  std::optional<double> assortativity;
  bool assortativity_undefined = false;  // zero degree variance
  std::optional<double> gamma;
  std::optional<double> gamma_strict;
  std::optional<double> mean_path;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> unreachable_pairs;
  std::optional<double> avg_betweenness;
  std::optional<std::size_t> max_core;
  std::optional<std::size_t> top_clique;
  bool clique_timed_out = false;
  std::optional<double> lambda_min;
  std::optional<double> lambda_second;
  std::optional<double> lambda_max;

  std::map<std::size_t, double> p_k;
  std::map<std::size_t, double> knn_norm;
  std::map<std::size_t, double> c_of_k;
  std::map<std::size_t, double> phi;
  std::map<std::size_t, double> p_h;
  std::map<std::size_t, std::size_t> coreness_hist;
  std::vector<double> eigenvalues;
  bool spectrum_complete = false;

  std::map<std::string, std::string> skipped;  // metric -> reason
};

inline MetricReport analyze(const Graph& g, const AnalyzeOptions& opts = {},
                            const std::string& graph_id = "graph") {
  MetricReport r;
  r.graph_id = graph_id;
  r.n = g.node_count();
  r.m = g.edge_count();
  auto guard = [&](const std::string& name, auto&& fn) {
    if (!opts.enabled(name)) return;
    try {
      fn();
    } catch (const std::exception& e) {
      r.skipped[name] = e.what();
    }
  };
  guard("degree", [&] {
    DegreeProfile dp = degree_profile(g);
    r.avg_degree = dp.avg_degree;
    r.p_k = std::move(dp.p_k);
    r.knn_norm = std::move(dp.knn_norm);
  });
  guard("assortativity", [&] {
    auto a = assortativity(g);
    if (a) r.assortativity = *a;
    else r.assortativity_undefined = true;
  });
  guard("clustering", [&] {
    ClusteringProfile cp = clustering(g);
    r.gamma = cp.gamma;
    r.gamma_strict = cp.gamma_strict;
    r.c_of_k = std::move(cp.c_of_k);
  });
  guard("richclub", [&] {
    RichClubProfile rc = rich_club(g);
    for (std::size_t rho = 2; rho < rc.phi.size(); ++rho) r.phi[rho] = rc.phi[rho];
  });
  guard("path", [&] {
    PathStats ps = path_stats(g, opts.jobs);
    r.mean_path = ps.mean;
    r.diameter = ps.diameter;
    r.unreachable_pairs = ps.unreachable_pairs;
    r.p_h = std::move(ps.p_h);
  });
  guard("centrality", [&] {
    CentralityProfile cp = centrality(g, opts.jobs);
    r.avg_betweenness = cp.avg_betweenness;
  });
  guard("coreness", [&] {
    CorenessProfile cp = coreness(g);
    r.max_core = cp.max_core;
    for (std::size_t c : cp.coreness) ++r.coreness_hist[c];
  });
  guard("clique", [&] {
    CliqueResult cr = top_clique_size(g, opts.clique);
    r.top_clique = cr.size;
    r.clique_timed_out = cr.timed_out;
    if (cr.timed_out) r.skipped["clique"] = "budget exceeded; size is a lower bound";
  });
  guard("spectrum", [&] {
    SpectrumMode mode = opts.spectrum_mode.value_or(
        g.node_count() <= opts.spectrum.full_mode_limit ? SpectrumMode::kFull
                                                        : SpectrumMode::kExtremes);
    SpectrumProfile sp = normalized_laplacian_spectrum(g, mode, opts.spectrum);
    r.eigenvalues = std::move(sp.eigenvalues);
    r.spectrum_complete = sp.complete;
    if (!r.eigenvalues.empty()) {
      r.lambda_min = r.eigenvalues.front();
      r.lambda_max = r.eigenvalues.back();
      if (r.eigenvalues.size() > 1) r.lambda_second = r.eigenvalues[1];
    }
  });
  return r;
}

// ---------------------------------------------------------------------------
// Comparison runs: one target graph vs. size-matched synthetic graphs.
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {"waxman", "ba", "glp", "inet", "pfp"};
  return names;
}

// Generator knobs shared by the harness and the CLI. n and the seed are
// filled in per run.
struct ModelParams {
  WaxmanConfig waxman;
  BaConfig ba;
  GlpConfig glp;
  InetConfig inet;
  PfpConfig pfp;
};

inline Graph generate_model(const std::string& model, std::size_t n, std::uint64_t seed,
                            const ModelParams& params) {
  if (model == "waxman") {
    WaxmanConfig cfg = params.waxman;
    cfg.n = n;
    return generate_waxman(cfg, seed);
  }
  if (model == "ba") {
    BaConfig cfg = params.ba;
    cfg.n = n;
    return generate_ba(cfg, seed);
  }
  if (model == "glp") {
    GlpConfig cfg = params.glp;
    cfg.n = n;
    return generate_glp(cfg, seed);
  }
  if (model == "inet") {
    InetConfig cfg = params.inet;
    cfg.n = n;
    return generate_inet(cfg, seed);
  }
  if (model == "pfp") {
    PfpConfig cfg = params.pfp;
    cfg.n = n;
    return generate_pfp(cfg, seed);
  }
  throw ConfigError("unknown model '" + model + "'");
}

struct SummaryStat {
  double mean = 0.0, min = 0.0, max = 0.0;
};

struct ModelComparison {
  std::string model;
  bool applicable = true;
  std::string reason;  // set when not applicable
  std::vector<MetricReport> runs;
  std::map<std::string, SummaryStat> scalar_summary;
  // Kolmogorov-Smirnov distance between the target distribution and each
  // run's, then summarized. A convenience scalar, not a fit statistic.
  std::map<std::string, SummaryStat> ks_summary;
};

struct ComparisonRun {
  MetricReport target;
  std::uint64_t master_seed = 0;
  std::size_t seeds_per_model = 0;
  std::vector<ModelComparison> models;
};

// Max |CDF1 - CDF2| over the union support of two discrete distributions.
inline double ks_distance(const std::map<std::size_t, double>& a,
                          const std::map<std::size_t, double>& b) {
  std::set<std::size_t> keys;
  for (const auto& [k, _] : a) keys.insert(k);
  for (const auto& [k, _] : b) keys.insert(k);
  double ca = 0.0, cb = 0.0, best = 0.0;
  for (std::size_t k : keys) {
    if (auto it = a.find(k); it != a.end()) ca += it->second;
    if (auto it = b.find(k); it != b.end()) cb += it->second;
    best = std::max(best, std::fabs(ca - cb));
  }
  return best;
}

namespace detail {

// Scalar metric values in the fixed order reports use everywhere.
inline std::vector<std::pair<std::string, std::optional<double>>> scalar_rows(
    const MetricReport& r) {
  auto opt_size = [](const std::optional<std::size_t>& v) -> std::optional<double> {
    return v ? std::optional<double>(static_cast<double>(*v)) : std::nullopt;
  };
  return {
      {"n", static_cast<double>(r.n)},
      {"m", static_cast<double>(r.m)},
      {"avg_degree", r.avg_degree},
      {"assortativity", r.assortativity},
      {"gamma", r.gamma},
      {"gamma_strict", r.gamma_strict},
      {"mean_path", r.mean_path},
      {"diameter", opt_size(r.diameter)},
      {"unreachable_pairs", opt_size(r.unreachable_pairs)},
      {"avg_betweenness", r.avg_betweenness},
      {"max_core", opt_size(r.max_core)},
      {"top_clique", opt_size(r.top_clique)},
      {"lambda_min", r.lambda_min},
      {"lambda_second", r.lambda_second},
      {"lambda_max", r.lambda_max},
  };
}

inline const std::vector<std::string>& distribution_names() {
  static const std::vector<std::string> names = {"p_k", "knn_norm", "c_of_k",
                                                 "phi", "p_h", "coreness_hist"};
  return names;
}

inline std::map<std::size_t, double> distribution_of(const MetricReport& r,
                                                     const std::string& name) {
  if (name == "p_k") return r.p_k;
  if (name == "knn_norm") return r.knn_norm;
  if (name == "c_of_k") return r.c_of_k;
  if (name == "phi") return r.phi;
  if (name == "p_h") return r.p_h;
  if (name == "coreness_hist") {
    std::map<std::size_t, double> out;
    for (const auto& [k, v] : r.coreness_hist) out[k] = static_cast<double>(v);
    return out;
  }
  return {};
}

inline SummaryStat summarize(const std::vector<double>& values) {
  SummaryStat s;
  if (values.empty()) return s;
  s.min = s.max = values.front();
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

}  // namespace detail

inline ComparisonRun run_comparison(const Graph& target,
                                    const std::vector<std::string>& models,
                                    std::size_t seeds_per_model, std::uint64_t master_seed,
                                    const AnalyzeOptions& opts = {},
                                    const ModelParams& params = {}) {
  if (seeds_per_model < 1) throw ConfigError("seeds_per_model must be >= 1");
  for (const auto& model : models) {
    if (std::find(model_names().begin(), model_names().end(), model) == model_names().end())
      throw ConfigError("unknown model '" + model + "'");
  }
  ComparisonRun run;
  run.master_seed = master_seed;
  run.seeds_per_model = seeds_per_model;
  run.target = analyze(target, opts, "target");
  const std::size_t n = target.node_count();
  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    ModelComparison mc;
    mc.model = models[mi];
    if (mc.model == "inet" && n < InetConfig::kMinNodes) {
      mc.applicable = false;
      mc.reason = "inet requires at least 3037 nodes; target has " + std::to_string(n);
      run.models.push_back(std::move(mc));
      continue;
    }
    for (std::size_t ri = 0; ri < seeds_per_model; ++ri) {
      std::uint64_t seed = child_seed(master_seed, mi, ri);
      std::string id = mc.model + "_run" + std::to_string(ri);
      try {
        Graph g = generate_model(mc.model, n, seed, params);
        mc.runs.push_back(analyze(g, opts, id));
      } catch (const ConfigError& e) {
        mc.applicable = false;
        mc.reason = e.what();
        mc.runs.clear();
        break;
      }
    }
    if (mc.applicable) {
      for (const auto& [name, _] : detail::scalar_rows(run.target)) {
        std::vector<double> values;
        for (const auto& rep : mc.runs) {
          for (const auto& [rname, rvalue] : detail::scalar_rows(rep))
            if (rname == name && rvalue) values.push_back(*rvalue);
        }
        if (!values.empty()) mc.scalar_summary[name] = detail::summarize(values);
      }
      for (const auto& dist : detail::distribution_names()) {
        auto target_dist = detail::distribution_of(run.target, dist);
        if (target_dist.empty()) continue;
        std::vector<double> values;
        for (const auto& rep : mc.runs) {
          auto run_dist = detail::distribution_of(rep, dist);
          if (!run_dist.empty()) values.push_back(ks_distance(target_dist, run_dist));
        }
        if (!values.empty()) mc.ks_summary[dist] = detail::summarize(values);
      }
    }
    run.models.push_back(std::move(mc));
  }
  return run;
}

// ---------------------------------------------------------------------------
// Serialization. JSON is the full nested report; CSV is one row per
// (graph, scalar); plotdata is one two-column file per distribution per
// graph. All output is byte-deterministic for a fixed ComparisonRun.
// ---------------------------------------------------------------------------

namespace detail {

// %.17g round-trips doubles exactly; a bare integer result gains ".0" so
// plotdata/CSV values always read as floating point.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s = buf;
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

inline Json distribution_json(const std::map<std::size_t, double>& dist) {
  Json arr = Json::array();
  for (const auto& [k, v] : dist) arr.push_back(Json::array({k, v}));
  return arr;
}

}  // namespace detail

inline Json to_json(const MetricReport& r) {
  Json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  Json scalars;
  for (const auto& [name, value] : detail::scalar_rows(r)) {
    if (name == "n" || name == "m") continue;
    if (value) scalars[name] = *value;
  }
  if (r.assortativity_undefined) scalars["assortativity_undefined"] = true;
  if (r.clique_timed_out) scalars["clique_timed_out"] = true;
  j["scalars"] = std::move(scalars);
  Json dists;
  for (const auto& name : detail::distribution_names()) {
    auto d = detail::distribution_of(r, name);
    if (!d.empty()) dists[name] = detail::distribution_json(d);
  }
  if (!r.eigenvalues.empty()) {
    dists["eigenvalues"] = r.eigenvalues;
    dists["spectrum_complete"] = r.spectrum_complete;
  }
  j["distributions"] = std::move(dists);
  if (!r.skipped.empty()) j["skipped"] = r.skipped;
  return j;
}

inline MetricReport metric_report_from_json(const Json& j) {
  MetricReport r;
  r.graph_id = j.at("graph_id").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  const Json& s = j.at("scalars");
  auto opt = [&](const char* key) -> std::optional<double> {
    if (s.contains(key)) return s[key].get<double>();
    return std::nullopt;
  };
  r.avg_degree = opt("avg_degree");
  r.assortativity = opt("assortativity");
  r.assortativity_undefined = s.value("assortativity_undefined", false);
  r.gamma = opt("gamma");
  r.gamma_strict = opt("gamma_strict");
  r.mean_path = opt("mean_path");
  if (auto v = opt("diameter")) r.diameter = static_cast<std::size_t>(*v);
  if (auto v = opt("unreachable_pairs")) r.unreachable_pairs = static_cast<std::size_t>(*v);
  r.avg_betweenness = opt("avg_betweenness");
  if (auto v = opt("max_core")) r.max_core = static_cast<std::size_t>(*v);
  if (auto v = opt("top_clique")) r.top_clique = static_cast<std::size_t>(*v);
  r.clique_timed_out = s.value("clique_timed_out", false);
  r.lambda_min = opt("lambda_min");
  r.lambda_second = opt("lambda_second");
  r.lambda_max = opt("lambda_max");
  const Json& d = j.at("distributions");
  auto dist = [&](const char* key) {
    std::map<std::size_t, double> out;
    if (d.contains(key))
      for (const auto& pair : d[key])
        out[pair[0].get<std::size_t>()] = pair[1].get<double>();
    return out;
  };
  r.p_k = dist("p_k");
  r.knn_norm = dist("knn_norm");
  r.c_of_k = dist("c_of_k");
  r.phi = dist("phi");
  r.p_h = dist("p_h");
  for (const auto& [k, v] : dist("coreness_hist"))
    r.coreness_hist[k] = static_cast<std::size_t>(v);
  if (d.contains("eigenvalues")) {
    r.eigenvalues = d["eigenvalues"].get<std::vector<double>>();
    r.spectrum_complete = d.value("spectrum_complete", false);
  }
  if (j.contains("skipped"))
    r.skipped = j["skipped"].get<std::map<std::string, std::string>>();
  return r;
}

inline Json to_json(const ComparisonRun& run) {
  Json j;
  j["master_seed"] = run.master_seed;
  j["seeds_per_model"] = run.seeds_per_model;
  j["target"] = to_json(run.target);
  Json models = Json::array();
  for (const auto& mc : run.models) {
    Json jm;
    jm["model"] = mc.model;
    jm["applicable"] = mc.applicable;
    if (!mc.applicable) jm["reason"] = mc.reason;
    Json runs = Json::array();
    for (const auto& rep : mc.runs) runs.push_back(to_json(rep));
    jm["runs"] = std::move(runs);
    Json summary;
    for (const auto& [name, st] : mc.scalar_summary)
      summary[name] = {{"mean", st.mean}, {"min", st.min}, {"max", st.max}};
    jm["scalar_summary"] = std::move(summary);
    Json ks;
    for (const auto& [name, st] : mc.ks_summary)
      ks[name] = {{"mean", st.mean}, {"min", st.min}, {"max", st.max}};
    jm["ks_summary"] = std::move(ks);
    models.push_back(std::move(jm));
  }
  j["models"] = std::move(models);
  return j;
}

inline ComparisonRun comparison_from_json(const Json& j) {
  ComparisonRun run;
  run.master_seed = j.at("master_seed").get<std::uint64_t>();
  run.seeds_per_model = j.at("seeds_per_model").get<std::size_t>();
  run.target = metric_report_from_json(j.at("target"));
  for (const auto& jm : j.at("models")) {
    ModelComparison mc;
    mc.model = jm.at("model").get<std::string>();
    mc.applicable = jm.at("applicable").get<bool>();
    if (jm.contains("reason")) mc.reason = jm["reason"].get<std::string>();
    for (const auto& jr : jm.at("runs")) mc.runs.push_back(metric_report_from_json(jr));
    auto stats = [](const Json& js) {
      return SummaryStat{js.at("mean").get<double>(), js.at("min").get<double>(),
                         js.at("max").get<double>()};
    };
    for (const auto& [name, js] : jm.at("scalar_summary").items())
      mc.scalar_summary[name] = stats(js);
    for (const auto& [name, js] : jm.at("ks_summary").items())
      mc.ks_summary[name] = stats(js);
    run.models.push_back(std::move(mc));
  }
  return run;
}

enum class ReportFormat { kJson, kCsv, kPlotdata };

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

inline std::string csv_rows(const MetricReport& r) {
  std::string out;
  for (const auto& [name, value] : scalar_rows(r)) {
    if (!value) continue;
    out += r.graph_id + "," + name + "," + format_double(*value) + "\n";
  }
  return out;
}

inline void emit_plotdata(const MetricReport& r, const std::filesystem::path& dir) {
  for (const auto& name : distribution_names()) {
    auto d = distribution_of(r, name);
    if (d.empty()) continue;
    std::string content;
    for (const auto& [k, v] : d)
      content += std::to_string(k) + " " + format_double(v) + "\n";
    write_file(dir / (r.graph_id + "__" + name + ".dat"), content);
  }
  if (!r.eigenvalues.empty()) {
    std::string content;
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
      content += std::to_string(i) + " " + format_double(r.eigenvalues[i]) + "\n";
    write_file(dir / (r.graph_id + "__eigenvalues.dat"), content);
  }
}

}  // namespace detail

// Writes the run to `out_dir` in the requested formats. Returns the list of
// files created, relative to out_dir, in creation order.
inline std::vector<std::string> emit_report(const ComparisonRun& run,
                                            const std::vector<ReportFormat>& formats,
                                            const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir))
    throw IoError("cannot create output directory " + out_dir.string());
  std::vector<std::string> files;
  auto all_reports = [&] {
    std::vector<const MetricReport*> reports = {&run.target};
    for (const auto& mc : run.models)
      for (const auto& rep : mc.runs) reports.push_back(&rep);
    return reports;
  }();
  for (ReportFormat f : formats) {
    switch (f) {
      case ReportFormat::kJson: {
        detail::write_file(out_dir / "comparison.json", to_json(run).dump(2) + "\n");
        files.push_back("comparison.json");
        break;
      }
      case ReportFormat::kCsv: {
        std::string csv = "graph_id,metric,value\n";
        for (const MetricReport* rep : all_reports) csv += detail::csv_rows(*rep);
        detail::write_file(out_dir / "scalars.csv", csv);
        files.push_back("scalars.csv");
        break;
      }
      case ReportFormat::kPlotdata: {
        auto plot_dir = out_dir / "plotdata";
        std::filesystem::create_directories(plot_dir, ec);
        if (ec && !std::filesystem::is_directory(plot_dir))
          throw IoError("cannot create " + plot_dir.string());
        for (const MetricReport* rep : all_reports) detail::emit_plotdata(*rep, plot_dir);
        files.push_back("plotdata");
        break;
      }
    }
  }
  return files;
}

}  // namespace astk
