#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "astk/report.hpp"
#include "oracles.hpp"

using namespace astk;

namespace {

Graph k4() {
  return Graph::from_index_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph path3() { return Graph::from_index_edges(3, {{0, 1}, {1, 2}}); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("analyze K4 composite") {
  MetricReport r = analyze(k4());
  CHECK(r.n == 4);
  CHECK(r.m == 6);
  CHECK(*r.avg_degree == Catch::Approx(3.0));
  CHECK(*r.gamma == Catch::Approx(1.0));
  CHECK(*r.mean_path == Catch::Approx(1.0));
  CHECK(*r.diameter == 1);
  CHECK(*r.max_core == 3);
  CHECK(*r.top_clique == 4);
  CHECK_FALSE(r.assortativity.has_value());
  CHECK(r.assortativity_undefined);
}

TEST_CASE("analyze path3 scalars") {
  MetricReport r = analyze(path3());
  CHECK(*r.mean_path == Catch::Approx(4.0 / 3.0));
  CHECK(*r.avg_betweenness == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("metric selection limits the report") {
  AnalyzeOptions opts;
  opts.metrics = {"degree", "spectrum"};
  MetricReport r = analyze(k4(), opts);
  CHECK(r.avg_degree.has_value());
  CHECK_FALSE(r.eigenvalues.empty());
  CHECK_FALSE(r.gamma.has_value());
  CHECK_FALSE(r.mean_path.has_value());
  CHECK_FALSE(r.top_clique.has_value());
  CHECK(r.p_h.empty());
}

TEST_CASE("per-metric failures are captured, not fatal") {
  // Two nodes, one edge: fine. One-node graph breaks path/centrality/spectrum
  // preconditions; analyze must still return with reasons recorded.
  Graph tiny = Graph::from_labelled_edges({{"1", "1"}});
  MetricReport r = analyze(tiny);
  CHECK(r.n == 1);
  CHECK(r.skipped.count("path") == 1);
  CHECK(r.skipped.count("centrality") == 1);
  CHECK(r.skipped.count("spectrum") == 1);
  CHECK(r.avg_degree.has_value());
}

TEST_CASE("metric report JSON round-trips") {
  MetricReport r = analyze(k4(), {}, "k4");
  Json j = to_json(r);
  MetricReport back = metric_report_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.graph_id == "k4");
  CHECK(*back.top_clique == 4);
  CHECK(back.p_k == r.p_k);
  CHECK(back.eigenvalues == r.eigenvalues);
}

TEST_CASE("run_comparison size-matches the target") {
  ModelParams params;
  params.ba.m = 1;
  ComparisonRun run = run_comparison(k4(), {"ba"}, 3, 99, {}, params);
  REQUIRE(run.models.size() == 1);
  REQUIRE(run.models[0].runs.size() == 3);
  for (const auto& rep : run.models[0].runs) CHECK(rep.n == 4);
}

TEST_CASE("run_comparison marks inet inapplicable below its minimum") {
  ComparisonRun run = run_comparison(k4(), {"inet"}, 2, 1);
  REQUIRE(run.models.size() == 1);
  CHECK_FALSE(run.models[0].applicable);
  CHECK(run.models[0].reason.find("3037") != std::string::npos);
  CHECK(run.models[0].runs.empty());
}

TEST_CASE("run_comparison rejects unknown models") {
  CHECK_THROWS_AS(run_comparison(k4(), {"nosuch"}, 1, 1), ConfigError);
}

TEST_CASE("run_comparison is deterministic for a fixed master seed") {
  ModelParams params;
  params.ba.m = 1;
  ComparisonRun a = run_comparison(path3(), {"ba", "glp"}, 2, 42, {}, params);
  ComparisonRun b = run_comparison(path3(), {"ba", "glp"}, 2, 42, {}, params);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("comparison JSON round-trips") {
  ModelParams params;
  params.ba.m = 1;
  ComparisonRun run = run_comparison(k4(), {"ba"}, 2, 7, {}, params);
  Json j = to_json(run);
  ComparisonRun back = comparison_from_json(j);
  CHECK(to_json(back) == j);
}

TEST_CASE("ks distance basics") {
  std::map<std::size_t, double> a = {{1, 0.5}, {2, 0.5}};
  CHECK(ks_distance(a, a) == Catch::Approx(0.0));
  std::map<std::size_t, double> b = {{5, 1.0}};
  CHECK(ks_distance(a, b) == Catch::Approx(1.0));
}

TEST_CASE("emit_report writes all three formats") {
  ModelParams params;
  params.ba.m = 1;
  ComparisonRun run = run_comparison(k4(), {"ba"}, 1, 5, {}, params);
  auto dir = std::filesystem::temp_directory_path() / "astk_emit_test";
  std::filesystem::remove_all(dir);
  auto files = emit_report(
      run, {ReportFormat::kJson, ReportFormat::kCsv, ReportFormat::kPlotdata}, dir);
  CHECK(files == std::vector<std::string>{"comparison.json", "scalars.csv", "plotdata"});
  CHECK(std::filesystem::exists(dir / "comparison.json"));
  std::string csv = slurp(dir / "scalars.csv");
  CHECK(csv.rfind("graph_id,metric,value\n", 0) == 0);
  CHECK(csv.find("target,avg_degree,3.0") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "plotdata" / "target__p_k.dat"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("plotdata for p_k of K3 is a single line") {
  Graph k3 = Graph::from_index_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  AnalyzeOptions opts;
  opts.metrics = {"degree"};
  ComparisonRun run;
  run.target = analyze(k3, opts, "k3");
  auto dir = std::filesystem::temp_directory_path() / "astk_plotdata_test";
  std::filesystem::remove_all(dir);
  emit_report(run, {ReportFormat::kPlotdata}, dir);
  CHECK(slurp(dir / "plotdata" / "k3__p_k.dat") == "2 1.0\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("emit_report output is byte-identical across calls") {
  ModelParams params;
  ComparisonRun run = run_comparison(path3(), {"pfp"}, 2, 11, {}, params);
  auto base = std::filesystem::temp_directory_path();
  auto d1 = base / "astk_det_1";
  auto d2 = base / "astk_det_2";
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
  emit_report(run, {ReportFormat::kJson, ReportFormat::kCsv}, d1);
  emit_report(run, {ReportFormat::kJson, ReportFormat::kCsv}, d2);
  CHECK(slurp(d1 / "comparison.json") == slurp(d2 / "comparison.json"));
  CHECK(slurp(d1 / "scalars.csv") == slurp(d2 / "scalars.csv"));
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
}

TEST_CASE("emit_report fails cleanly on an unwritable destination") {
  ComparisonRun run;
  run.target = analyze(k4());
  CHECK_THROWS_AS(emit_report(run, {ReportFormat::kJson}, "/proc/astk_cannot_write"),
                  IoError);
}

TEST_CASE("scalar round-trip keeps full precision") {
  MetricReport r = analyze(oracle::random_graph(23, 0.2, 3), {}, "g");
  MetricReport back = metric_report_from_json(to_json(r));
  CHECK(*back.avg_betweenness == *r.avg_betweenness);  // exact
  CHECK(*back.gamma == *r.gamma);
  CHECK(*back.mean_path == *r.mean_path);
}
