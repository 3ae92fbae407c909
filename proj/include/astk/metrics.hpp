#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "astk/graph.hpp"
#include "astk/parallel.hpp"

namespace astk {

// ---------------------------------------------------------------------------
// Degree distribution and average neighbor connectivity.
// ---------------------------------------------------------------------------

struct DegreeProfile {
  std::map<std::size_t, double> p_k;        // degree -> fraction of nodes
  double avg_degree = 0.0;                  // 2M/N
  std::map<std::size_t, double> knn_norm;   // degree -> k_nn(k)/(N-1)
};

inline DegreeProfile degree_profile(const Graph& g) {
  const std::size_t n = g.node_count();
  DegreeProfile out;
  out.avg_degree = n > 0 ? 2.0 * static_cast<double>(g.edge_count()) / n : 0.0;
  std::map<std::size_t, std::size_t> counts;
  for (NodeId v = 0; v < n; ++v) ++counts[g.degree(v)];
  for (const auto& [k, c] : counts) out.p_k[k] = static_cast<double>(c) / n;
  if (n < 2) return out;  // k_nn undefined on a single node
  // knn(k): mean over nodes of degree k of the node's mean neighbor degree.
  std::map<std::size_t, std::pair<double, std::size_t>> acc;  // k -> (sum, count)
  for (NodeId v = 0; v < n; ++v) {
    std::size_t k = g.degree(v);
    if (k == 0) continue;
    double sum = 0.0;
    for (NodeId w : g.neighbors(v)) sum += static_cast<double>(g.degree(w));
    auto& [total, count] = acc[k];
    total += sum / static_cast<double>(k);
    ++count;
  }
  for (const auto& [k, sc] : acc)
    out.knn_norm[k] = sc.first / static_cast<double>(sc.second) / static_cast<double>(n - 1);
  return out;
}

// ---------------------------------------------------------------------------
// Assortativity: Pearson correlation of degrees over edge endpoints, each
// undirected edge contributing both orientations. Undefined (nullopt) when
// the endpoint degrees have zero variance, e.g. regular graphs.
// ---------------------------------------------------------------------------

inline std::optional<double> assortativity(const Graph& g) {
  if (g.edge_count() == 0) return std::nullopt;
  double sum_x = 0.0, sum_xx = 0.0, sum_xy = 0.0;
  for (const auto& [u, v] : g.edges()) {
    double du = static_cast<double>(g.degree(u));
    double dv = static_cast<double>(g.degree(v));
    sum_x += du + dv;
    sum_xx += du * du + dv * dv;
    sum_xy += 2.0 * du * dv;
  }
  double m2 = 2.0 * static_cast<double>(g.edge_count());
  double mean = sum_x / m2;
  double var = sum_xx / m2 - mean * mean;
  double cov = sum_xy / m2 - mean * mean;
  if (var <= 1e-12 * std::max(1.0, mean * mean)) return std::nullopt;
  return cov / var;
}

// ---------------------------------------------------------------------------
// Clustering coefficients. gamma averages local coefficients over nodes of
// degree >= 2; gamma_strict divides the same sum by N (the literal formula).
// ---------------------------------------------------------------------------

struct ClusteringProfile {
  double gamma = 0.0;
  double gamma_strict = 0.0;
  std::map<std::size_t, double> c_of_k;  // degree -> mean local coefficient
};

inline std::size_t triangles_at(const Graph& g, NodeId v) {
  std::size_t count = 0;
  auto adj = g.neighbors(v);
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i + 1; j < adj.size(); ++j)
      if (g.has_edge(adj[i], adj[j])) ++count;
  return count;
}

inline ClusteringProfile clustering(const Graph& g) {
  const std::size_t n = g.node_count();
  ClusteringProfile out;
  double sum = 0.0;
  std::size_t eligible = 0;
  std::map<std::size_t, std::pair<double, std::size_t>> by_degree;
  for (NodeId v = 0; v < n; ++v) {
    std::size_t k = g.degree(v);
    if (k < 2) continue;
    double possible = static_cast<double>(k) * (k - 1) / 2.0;
    double local = static_cast<double>(triangles_at(g, v)) / possible;
    sum += local;
    ++eligible;
    auto& [total, count] = by_degree[k];
    total += local;
    ++count;
  }
  out.gamma = eligible > 0 ? sum / static_cast<double>(eligible) : 0.0;
  out.gamma_strict = n > 0 ? sum / static_cast<double>(n) : 0.0;
  for (const auto& [k, sc] : by_degree)
    out.c_of_k[k] = sc.first / static_cast<double>(sc.second);
  return out;
}

// ---------------------------------------------------------------------------
// Rich-club coefficient phi(rho) for rho = 2..N over nodes ordered by
// non-increasing degree, ties by ascending node index.
// ---------------------------------------------------------------------------

struct RichClubProfile {
  // phi[rho] valid for rho in [2, N]; entries 0..1 are unused zeros.
  std::vector<double> phi;
};

inline RichClubProfile rich_club(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  RichClubProfile out;
  out.phi.assign(n + 1, 0.0);
  std::size_t internal_edges = 0;
  for (std::size_t rho = 2; rho <= n; ++rho) {
    NodeId added = order[rho - 1];
    for (NodeId w : g.neighbors(added))
      if (rank[w] < rho - 1) ++internal_edges;
    out.phi[rho] = static_cast<double>(internal_edges) /
                   (static_cast<double>(rho) * (rho - 1) / 2.0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shortest-path statistics via BFS from every node. P(h) is taken over
// unordered reachable pairs; unreachable pairs are counted separately.
// ---------------------------------------------------------------------------

struct PathStats {
  std::map<std::size_t, double> p_h;  // hop count -> probability
  double mean = 0.0;
  std::size_t diameter = 0;
  std::size_t unreachable_pairs = 0;
};

namespace detail {

// BFS distances from s; kUnreached marks unreachable nodes.
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

inline void bfs_distances(const Graph& g, NodeId s, std::vector<std::uint32_t>& dist,
                          std::vector<NodeId>& queue) {
  dist.assign(g.node_count(), kUnreached);
  queue.clear();
  dist[s] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

constexpr std::size_t kSourceBlock = 64;

}  // namespace detail

inline PathStats path_stats(const Graph& g, int jobs = 1) {
  const std::size_t n = g.node_count();
  if (n < 2) throw ConfigError("path_stats: graph must have at least 2 nodes");
  const std::size_t n_blocks = (n + detail::kSourceBlock - 1) / detail::kSourceBlock;
  std::vector<std::vector<std::uint64_t>> block_hist(n_blocks);
  for_each_block(n, detail::kSourceBlock, jobs,
                 [&](std::size_t block, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> dist;
    std::vector<NodeId> queue;
    auto& hist = block_hist[block];
    hist.assign(n, 0);
    for (std::size_t s = begin; s < end; ++s) {
      detail::bfs_distances(g, static_cast<NodeId>(s), dist, queue);
      for (std::size_t t = s + 1; t < n; ++t)
        if (dist[t] != detail::kUnreached) ++hist[dist[t]];
    }
  });
  std::vector<std::uint64_t> hist(n, 0);
  for (const auto& bh : block_hist)
    for (std::size_t h = 0; h < n; ++h) hist[h] += bh[h];

  PathStats out;
  std::uint64_t reachable = 0;
  for (std::size_t h = 1; h < n; ++h) reachable += hist[h];
  const std::uint64_t all_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  out.unreachable_pairs = all_pairs - reachable;
  if (reachable == 0) return out;
  double mean = 0.0;
  for (std::size_t h = 1; h < n; ++h) {
    if (hist[h] == 0) continue;
    double p = static_cast<double>(hist[h]) / static_cast<double>(reachable);
    out.p_h[h] = p;
    mean += static_cast<double>(h) * p;
    out.diameter = h;
  }
  out.mean = mean;
  return out;
}

// ---------------------------------------------------------------------------
// Betweenness (Brandes accumulation, unordered pairs, endpoints excluded)
// and closeness (reciprocal sum of distances to reachable nodes; absent for
// isolated nodes, encoded as NaN).
// ---------------------------------------------------------------------------

struct CentralityProfile {
  std::vector<double> betweenness;
  double avg_betweenness = 0.0;
  std::vector<double> closeness;  // NaN where undefined

  bool has_closeness(NodeId v) const { return !std::isnan(closeness[v]); }
};

inline CentralityProfile centrality(const Graph& g, int jobs = 1) {
  const std::size_t n = g.node_count();
  if (n < 2) throw ConfigError("centrality: graph must have at least 2 nodes");
  const std::size_t n_blocks = (n + detail::kSourceBlock - 1) / detail::kSourceBlock;
  std::vector<std::vector<double>> block_bc(n_blocks);
  CentralityProfile out;
  out.closeness.assign(n, std::numeric_limits<double>::quiet_NaN());

  for_each_block(n, detail::kSourceBlock, jobs,
                 [&](std::size_t block, std::size_t begin, std::size_t end) {
    auto& bc = block_bc[block];
    bc.assign(n, 0.0);
    std::vector<std::uint32_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<NodeId> order;
    order.reserve(n);
    for (std::size_t si = begin; si < end; ++si) {
      NodeId s = static_cast<NodeId>(si);
      std::fill(dist.begin(), dist.end(), detail::kUnreached);
      std::fill(sigma.begin(), sigma.end(), 0.0);
      std::fill(delta.begin(), delta.end(), 0.0);
      order.clear();
      dist[s] = 0;
      sigma[s] = 1.0;
      order.push_back(s);
      for (std::size_t head = 0; head < order.size(); ++head) {
        NodeId u = order[head];
        for (NodeId w : g.neighbors(u)) {
          if (dist[w] == detail::kUnreached) {
            dist[w] = dist[u] + 1;
            order.push_back(w);
          }
          if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
        }
      }
      double dist_sum = 0.0;
      for (NodeId v : order)
        if (v != s) dist_sum += static_cast<double>(dist[v]);
      if (dist_sum > 0.0) out.closeness[s] = 1.0 / dist_sum;  // no race: one writer per s
      // Dependency accumulation in reverse BFS order.
      for (std::size_t i = order.size(); i-- > 1;) {
        NodeId w = order[i];
        for (NodeId u : g.neighbors(w)) {
          if (dist[u] + 1 == dist[w])
            delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
        }
        bc[w] += delta[w];
      }
    }
  });

  out.betweenness.assign(n, 0.0);
  for (const auto& bc : block_bc)
    for (std::size_t v = 0; v < n; ++v) out.betweenness[v] += bc[v];
  // Brandes over an undirected graph visits each (s,t) pair twice.
  double total = 0.0;
  for (double& b : out.betweenness) {
    b *= 0.5;
    total += b;
  }
  out.avg_betweenness = total / static_cast<double>(n);
  return out;
}

// ---------------------------------------------------------------------------
// k-core decomposition by linear-time bucket peeling.
// ---------------------------------------------------------------------------

struct CorenessProfile {
  std::vector<std::size_t> coreness;
  std::size_t max_core = 0;
};

inline CorenessProfile coreness(const Graph& g) {
  const std::size_t n = g.node_count();
  CorenessProfile out;
  out.coreness.assign(n, 0);
  if (n == 0) return out;
  std::vector<std::size_t> deg = degree_sequence(g);
  std::size_t max_deg = *std::max_element(deg.begin(), deg.end());
  // Nodes bucketed by current degree, peeled in non-decreasing order.
  std::vector<std::size_t> bucket_start(max_deg + 2, 0);
  for (std::size_t d : deg) ++bucket_start[d + 1];
  for (std::size_t d = 1; d <= max_deg + 1; ++d) bucket_start[d] += bucket_start[d - 1];
  std::vector<NodeId> order(n);
  std::vector<std::size_t> pos(n);
  {
    std::vector<std::size_t> fill = bucket_start;
    for (NodeId v = 0; v < n; ++v) {
      pos[v] = fill[deg[v]]++;
      order[pos[v]] = v;
    }
  }
  std::vector<std::size_t> cur = deg;
  std::size_t level = 0;
  for (std::size_t i = 0; i < n; ++i) {
    NodeId v = order[i];
    level = std::max(level, cur[v]);
    out.coreness[v] = level;
    for (NodeId w : g.neighbors(v)) {
      if (cur[w] > cur[v]) {
        // Swap w to the front of its bucket, then shift the bucket boundary.
        std::size_t dw = cur[w];
        std::size_t front = bucket_start[dw];
        NodeId other = order[front];
        std::swap(order[front], order[pos[w]]);
        std::swap(pos[other], pos[w]);
        ++bucket_start[dw];
        --cur[w];
      }
    }
  }
  out.max_core = level;
  return out;
}

}  // namespace astk
