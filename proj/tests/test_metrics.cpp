#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "astk/clique.hpp"
#include "astk/metrics.hpp"
#include "astk/spectrum.hpp"
#include "oracles.hpp"

using namespace astk;

namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_index_edges(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    NodeId j = static_cast<NodeId>((i + 1) % n);
    edges.push_back({std::min(i, j), std::max(i, j)});
  }
  return Graph::from_index_edges(n, std::move(edges));
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, static_cast<NodeId>(i + 1)});
  return Graph::from_index_edges(n, std::move(edges));
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::from_index_edges(leaves + 1, std::move(edges));
}

Graph k4_minus_edge() {
  return Graph::from_index_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace

TEST_CASE("degree profile on K3, star, path") {
  DegreeProfile k3 = degree_profile(complete(3));
  CHECK(k3.avg_degree == Catch::Approx(2.0));
  CHECK(k3.p_k.at(2) == Catch::Approx(1.0));
  CHECK(k3.knn_norm.at(2) == Catch::Approx(1.0));

  DegreeProfile s = degree_profile(star(4));
  CHECK(s.avg_degree == Catch::Approx(1.6));
  CHECK(s.knn_norm.at(1) == Catch::Approx(1.0));
  CHECK(s.knn_norm.at(4) == Catch::Approx(0.25));

  DegreeProfile p3 = degree_profile(path(3));
  CHECK(p3.knn_norm.at(1) == Catch::Approx(1.0));
  CHECK(p3.knn_norm.at(2) == Catch::Approx(0.5));
}

TEST_CASE("p_k sums to one") {
  Graph g = oracle::random_graph(37, 0.15, 4, false);
  DegreeProfile dp = degree_profile(g);
  double sum = 0.0;
  for (const auto& [k, p] : dp.p_k) sum += p;
  CHECK(sum == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("assortativity fixtures") {
  CHECK_FALSE(assortativity(cycle(5)).has_value());
  CHECK_FALSE(assortativity(complete(4)).has_value());
  auto r = assortativity(path(4));
  REQUIRE(r.has_value());
  CHECK(*r == Catch::Approx(-0.5).margin(1e-12));
}

TEST_CASE("clustering fixtures") {
  CHECK(clustering(complete(3)).gamma == Catch::Approx(1.0));
  CHECK(clustering(complete(3)).c_of_k.at(2) == Catch::Approx(1.0));
  CHECK(clustering(star(4)).gamma == Catch::Approx(0.0));
  ClusteringProfile km = clustering(k4_minus_edge());
  CHECK(km.gamma == Catch::Approx(5.0 / 6.0));
}

TEST_CASE("gamma vs gamma_strict differ exactly when low-degree nodes exist") {
  // K3 plus a pendant on node 0: pendant has degree 1.
  Graph g = Graph::from_index_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  ClusteringProfile cp = clustering(g);
  CHECK(cp.gamma == Catch::Approx(oracle::clustering_gamma(g, false)));
  CHECK(cp.gamma_strict == Catch::Approx(oracle::clustering_gamma(g, true)));
  CHECK(cp.gamma > cp.gamma_strict);
}

TEST_CASE("rich club fixtures") {
  RichClubProfile k5 = rich_club(complete(5));
  for (std::size_t rho = 2; rho <= 5; ++rho) CHECK(k5.phi[rho] == Catch::Approx(1.0));

  RichClubProfile s = rich_club(star(4));
  CHECK(s.phi[2] == Catch::Approx(1.0));
  CHECK(s.phi[3] == Catch::Approx(2.0 / 3.0));

  RichClubProfile p4 = rich_club(path(4));
  CHECK(p4.phi[2] == Catch::Approx(1.0));
}

TEST_CASE("phi(N) equals global density") {
  Graph g = oracle::random_graph(24, 0.3, 9);
  RichClubProfile rc = rich_club(g);
  double density = 2.0 * g.edge_count() / (24.0 * 23.0);
  CHECK(rc.phi[24] == Catch::Approx(density));
}

TEST_CASE("path stats fixtures") {
  PathStats p3 = path_stats(path(3));
  CHECK(p3.p_h.at(1) == Catch::Approx(2.0 / 3.0));
  CHECK(p3.p_h.at(2) == Catch::Approx(1.0 / 3.0));
  CHECK(p3.mean == Catch::Approx(4.0 / 3.0));
  CHECK(p3.diameter == 2);

  PathStats k4 = path_stats(complete(4));
  CHECK(k4.p_h.at(1) == Catch::Approx(1.0));
  CHECK(k4.mean == Catch::Approx(1.0));
  CHECK(k4.diameter == 1);

  PathStats c5 = path_stats(cycle(5));
  CHECK(c5.p_h.at(1) == Catch::Approx(0.5));
  CHECK(c5.p_h.at(2) == Catch::Approx(0.5));
  CHECK(c5.mean == Catch::Approx(1.5));
  CHECK(c5.diameter == 2);
}

TEST_CASE("path stats count unreachable pairs on disconnected input") {
  // K3 + K2: 3*2 cross pairs unreachable.
  Graph g = Graph::from_index_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
  PathStats ps = path_stats(g);
  CHECK(ps.unreachable_pairs == 6);
  double sum = 0.0;
  for (const auto& [h, p] : ps.p_h) sum += p;
  CHECK(sum == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("centrality fixtures") {
  CentralityProfile p3 = centrality(path(3));
  CHECK(p3.betweenness[1] == Catch::Approx(1.0));
  CHECK(p3.betweenness[0] == Catch::Approx(0.0).margin(1e-12));
  CHECK(p3.avg_betweenness == Catch::Approx(1.0 / 3.0));
  CHECK(p3.closeness[1] == Catch::Approx(0.5));
  CHECK(p3.closeness[0] == Catch::Approx(1.0 / 3.0));

  CentralityProfile s = centrality(star(4));
  CHECK(s.betweenness[0] == Catch::Approx(6.0));
  CHECK(s.closeness[0] == Catch::Approx(0.25));

  CentralityProfile k4 = centrality(complete(4));
  for (NodeId v = 0; v < 4; ++v) CHECK(k4.betweenness[v] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("degree-1 nodes have zero betweenness") {
  Graph g = oracle::random_graph(20, 0.15, 12);
  CentralityProfile cp = centrality(g);
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 1) CHECK(cp.betweenness[v] == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("isolated nodes have no closeness") {
  Graph g = Graph::from_index_edges(3, {{0, 1}});
  CentralityProfile cp = centrality(g);
  CHECK_FALSE(cp.has_closeness(2));
  CHECK(cp.has_closeness(0));
}

TEST_CASE("total betweenness ties to mean path length in connected graphs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = oracle::random_graph(22, 0.25, seed);
    CentralityProfile cp = centrality(g);
    PathStats ps = path_stats(g);
    double total = 0.0;
    for (double b : cp.betweenness) total += b;
    double pairs = 22.0 * 21.0 / 2.0;
    CHECK(total == Catch::Approx(pairs * (ps.mean - 1.0)).margin(1e-7));
  }
}

TEST_CASE("centrality and path stats are identical for any job count") {
  Graph g = oracle::random_graph(150, 0.05, 31);
  CentralityProfile c1 = centrality(g, 1);
  CentralityProfile c4 = centrality(g, 4);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    CHECK(c1.betweenness[v] == c4.betweenness[v]);  // bit-identical
  }
  PathStats p1 = path_stats(g, 1);
  PathStats p4 = path_stats(g, 4);
  CHECK(p1.p_h == p4.p_h);
  CHECK(p1.mean == p4.mean);
}

TEST_CASE("coreness fixtures") {
  CorenessProfile k4 = coreness(complete(4));
  for (NodeId v = 0; v < 4; ++v) CHECK(k4.coreness[v] == 3);
  CHECK(k4.max_core == 3);

  CorenessProfile s = coreness(star(4));
  for (NodeId v = 0; v < 5; ++v) CHECK(s.coreness[v] == 1);

  // K4 plus a pendant.
  Graph g = Graph::from_index_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
  CorenessProfile cp = coreness(g);
  CHECK(cp.coreness[4] == 1);
  for (NodeId v = 0; v < 4; ++v) CHECK(cp.coreness[v] == 3);
}

TEST_CASE("coreness never exceeds degree") {
  Graph g = oracle::random_graph(40, 0.2, 8, false);
  CorenessProfile cp = coreness(g);
  for (NodeId v = 0; v < g.node_count(); ++v) CHECK(cp.coreness[v] <= g.degree(v));
}

TEST_CASE("clique fixtures") {
  CHECK(top_clique_size(complete(5)).size == 5);
  CHECK(top_clique_size(cycle(5)).size == 2);
  CHECK(top_clique_size(k4_minus_edge()).size == 3);
}

TEST_CASE("clique size relates to coreness") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracle::random_graph(18, 0.4, seed, false);
    std::size_t clique = top_clique_size(g).size;
    CorenessProfile cp = coreness(g);
    CHECK(clique - 1 <= cp.max_core);
  }
}

TEST_CASE("clique timeout reports a lower bound") {
  Graph g = oracle::random_graph(250, 0.9, 3, false);
  CliqueOptions opts;
  opts.budget = std::chrono::milliseconds(0);
  CliqueResult r = top_clique_size(g, opts);
  CHECK(r.timed_out);
  CHECK(r.size >= 1);
}

TEST_CASE("spectrum fixtures") {
  SpectrumProfile k2 = normalized_laplacian_spectrum(complete(2));
  REQUIRE(k2.eigenvalues.size() == 2);
  CHECK(k2.eigenvalues[0] == Catch::Approx(0.0).margin(1e-9));
  CHECK(k2.eigenvalues[1] == Catch::Approx(2.0).margin(1e-9));

  SpectrumProfile k3 = normalized_laplacian_spectrum(complete(3));
  CHECK(k3.eigenvalues[0] == Catch::Approx(0.0).margin(1e-9));
  CHECK(k3.eigenvalues[1] == Catch::Approx(1.5).margin(1e-9));
  CHECK(k3.eigenvalues[2] == Catch::Approx(1.5).margin(1e-9));

  SpectrumProfile p3 = normalized_laplacian_spectrum(path(3));
  CHECK(p3.eigenvalues[0] == Catch::Approx(0.0).margin(1e-9));
  CHECK(p3.eigenvalues[1] == Catch::Approx(1.0).margin(1e-9));
  CHECK(p3.eigenvalues[2] == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("full mode refuses oversized graphs") {
  Graph g = oracle::random_graph(80, 0.1, 5);
  SpectrumOptions opts;
  opts.full_mode_limit = 50;
  CHECK_THROWS_AS(normalized_laplacian_spectrum(g, SpectrumMode::kFull, opts), SizeLimitError);
}

TEST_CASE("extremes mode brackets the full spectrum") {
  Graph g = oracle::random_graph(120, 0.08, 17);
  SpectrumOptions opts;
  opts.extremes_k = 5;
  SpectrumProfile ext = normalized_laplacian_spectrum(g, SpectrumMode::kExtremes, opts);
  SpectrumProfile full = normalized_laplacian_spectrum(g, SpectrumMode::kFull);
  REQUIRE(ext.eigenvalues.size() == 10);
  CHECK_FALSE(ext.complete);
  for (int i = 0; i < 5; ++i) {
    CHECK(ext.eigenvalues[i] == Catch::Approx(full.eigenvalues[i]).margin(1e-6));
    CHECK(ext.eigenvalues[5 + i] ==
          Catch::Approx(full.eigenvalues[full.eigenvalues.size() - 5 + i]).margin(1e-6));
  }
}

TEST_CASE("zero-eigenvalue multiplicity equals component count") {
  Graph g = Graph::from_index_edges(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {5, 6}});
  SpectrumProfile sp = normalized_laplacian_spectrum(g);
  std::size_t zeros = 0;
  for (double e : sp.eigenvalues)
    if (std::fabs(e) < 1e-8) ++zeros;
  CHECK(zeros == 3);
}

TEST_CASE("metrics agree with brute-force oracles on random graphs") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    double density = 0.1 + 0.05 * static_cast<double>(seed % 10);
    Graph g = oracle::random_graph(10 + seed % 25, density, 100 + seed);

    CentralityProfile cp = centrality(g);
    auto bc = oracle::betweenness(g);
    auto cl = oracle::closeness(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      CHECK(cp.betweenness[v] == Catch::Approx(bc[v]).margin(1e-9));
      CHECK(cp.closeness[v] == Catch::Approx(cl[v]).margin(1e-12));
    }

    PathStats ps = path_stats(g);
    auto sum = oracle::path_summary(g);
    CHECK(ps.mean == Catch::Approx(sum.mean).margin(1e-12));
    CHECK(ps.diameter == sum.diameter);

    CHECK(clustering(g).gamma == Catch::Approx(oracle::clustering_gamma(g, false)).margin(1e-12));

    auto core = oracle::coreness(g);
    CorenessProfile cn = coreness(g);
    for (NodeId v = 0; v < g.node_count(); ++v) CHECK(cn.coreness[v] == core[v]);

    auto r_impl = assortativity(g);
    auto r_ref = oracle::assortativity(g);
    REQUIRE(r_impl.has_value() == r_ref.has_value());
    if (r_impl) CHECK(*r_impl == Catch::Approx(*r_ref).margin(1e-9));
  }
}

TEST_CASE("spectrum matches a hand-rolled Jacobi eigensolver") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = oracle::random_graph(20, 0.25, 50 + seed);
    SpectrumProfile sp = normalized_laplacian_spectrum(g);
    auto ref = oracle::jacobi_eigenvalues(oracle::normalized_laplacian(g));
    REQUIRE(sp.eigenvalues.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
      CHECK(sp.eigenvalues[i] == Catch::Approx(ref[i]).margin(1e-6));
  }
}
