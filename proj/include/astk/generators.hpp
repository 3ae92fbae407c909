#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "astk/errors.hpp"
#include "astk/graph.hpp"
#include "astk/rng.hpp"
#include "astk/sampler.hpp"

namespace astk {

// ---------------------------------------------------------------------------
// Waxman random graph: nodes placed uniformly in a square, a candidate pair
// (u,v) is accepted with probability alpha * exp(-d / (beta * L)) where d is
// their Euclidean distance and L the largest inter-node distance. Pairs are
// tried in random order until the target average degree is met, then any
// stray components are wired into the giant component.
// ---------------------------------------------------------------------------

struct WaxmanConfig {
  std::size_t n = 0;
  double alpha = 0.15;
  double beta = 0.2;
  double plane_size = 1.0;
  double target_degree = 6.0;
};

inline double waxman_accept_probability(double alpha, double beta, double max_distance,
                                        double distance) {
  return alpha * std::exp(-distance / (beta * max_distance));
}

inline Graph generate_waxman(const WaxmanConfig& cfg, std::uint64_t seed) {
  if (cfg.n < 2) throw ConfigError("waxman: n must be >= 2");
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw ConfigError("waxman: alpha in (0,1]");
  if (!(cfg.beta > 0.0 && cfg.beta <= 1.0)) throw ConfigError("waxman: beta in (0,1]");
  if (!(cfg.plane_size > 0.0)) throw ConfigError("waxman: plane_size > 0");
  if (!(cfg.target_degree > 0.0)) throw ConfigError("waxman: target_degree > 0");

  const std::size_t n = cfg.n;
  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.next_double() * cfg.plane_size;
    y[i] = rng.next_double() * cfg.plane_size;
  }
  auto dist = [&](std::size_t a, std::size_t b) {
    double dx = x[a] - x[b], dy = y[a] - y[b];
    return std::sqrt(dx * dx + dy * dy);
  };
  double max_dist = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) max_dist = std::max(max_dist, dist(a, b));
  if (max_dist <= 0.0) max_dist = cfg.plane_size;  // all nodes coincident

  const std::size_t target_edges =
      std::min(n * (n - 1) / 2,
               static_cast<std::size_t>(std::llround(cfg.target_degree * n / 2.0)));
  std::set<Edge> edge_set;
  const std::size_t max_trials = std::max<std::size_t>(64 * target_edges, 4096);
  for (std::size_t trial = 0; trial < max_trials && edge_set.size() < target_edges; ++trial) {
    NodeId u = static_cast<NodeId>(rng.next_below(n));
    NodeId v = static_cast<NodeId>(rng.next_below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (edge_set.count({u, v})) continue;
    if (rng.next_bernoulli(waxman_accept_probability(cfg.alpha, cfg.beta, max_dist, dist(u, v))))
      edge_set.insert({u, v});
  }

  // Wire leftover components into the giant one: each stray component is
  // attached through its highest-kernel-probability (nearest) cross pair.
  std::vector<Edge> edges(edge_set.begin(), edge_set.end());
  Graph g = Graph::from_index_edges(n, edges);
  ComponentPartition part = connected_components(g);
  if (part.sizes.size() > 1) {
    for (NodeId comp = 1; comp < part.sizes.size(); ++comp) {
      NodeId best_u = 0, best_v = 0;
      double best_d = -1.0;
      for (NodeId u = 0; u < n; ++u) {
        if (part.component_of[u] != comp) continue;
        for (NodeId v = 0; v < n; ++v) {
          if (part.component_of[v] != 0) continue;
          double d = dist(u, v);
          if (best_d < 0.0 || d < best_d) {
            best_d = d;
            best_u = u;
            best_v = v;
          }
        }
      }
      edges.emplace_back(std::min(best_u, best_v), std::max(best_u, best_v));
    }
    g = Graph::from_index_edges(n, edges);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Barabasi-Albert: m0-ring seed, then each arriving node attaches m distinct
// links with target probability proportional to degree. M = m0 + m*(n - m0).
// ---------------------------------------------------------------------------

struct BaConfig {
  std::size_t n = 0;
  std::size_t m = 2;
  std::size_t m0 = 3;
};

namespace detail {

inline std::vector<Edge> ring_edges(std::size_t m0) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < m0; ++i) {
    NodeId j = static_cast<NodeId>((i + 1) % m0);
    edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  return edges;
}

}  // namespace detail

inline Graph generate_ba(const BaConfig& cfg, std::uint64_t seed) {
  if (cfg.m < 1) throw ConfigError("ba: m must be >= 1");
  if (cfg.m0 < 3) throw ConfigError("ba: m0 must be >= 3 (ring seed core)");
  if (cfg.m0 < cfg.m) throw ConfigError("ba: m0 must be >= m");
  if (cfg.n < cfg.m0) throw ConfigError("ba: n must be >= m0");

  Rng rng(seed);
  std::vector<Edge> edges = detail::ring_edges(cfg.m0);
  // One slot per unit of degree; uniform draws from it realize d_j / sum d.
  std::vector<NodeId> degree_slots;
  degree_slots.reserve(2 * (cfg.m0 + cfg.m * (cfg.n - cfg.m0)));
  for (const auto& [u, v] : edges) {
    degree_slots.push_back(u);
    degree_slots.push_back(v);
  }
  std::vector<NodeId> targets;
  for (NodeId node = static_cast<NodeId>(cfg.m0); node < cfg.n; ++node) {
    targets.clear();
    while (targets.size() < cfg.m) {
      NodeId t = degree_slots[rng.next_below(degree_slots.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(std::min(node, t), std::max(node, t));
      degree_slots.push_back(node);
      degree_slots.push_back(t);
    }
  }
  return Graph::from_index_edges(cfg.n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Generalized Linear Preference: with probability p_add a new node arrives
// with m links; otherwise m new links are placed between existing nodes.
// Endpoints are drawn with the shifted linear preference (k - beta_pref),
// beta_pref < 1 so every weight stays positive.
// Defaults follow the original GLP publication (Bu & Towsley 2002):
// beta_pref = 0.6447 and link-step probability 0.4695, i.e. p_add = 0.5305.
// ---------------------------------------------------------------------------

struct GlpConfig {
  std::size_t n = 0;
  std::size_t m = 1;
  std::size_t m0 = 3;
  double p_add = 0.5305;
  double beta_pref = 0.6447;
};

inline Graph generate_glp(const GlpConfig& cfg, std::uint64_t seed) {
  if (cfg.n < 2 || cfg.n < cfg.m0) throw ConfigError("glp: need n >= m0 and n >= 2");
  if (cfg.m < 1 || cfg.m0 < 3 || cfg.m0 < cfg.m) throw ConfigError("glp: need m0 >= max(m, 3)");
  if (!(cfg.p_add >= 0.0 && cfg.p_add <= 1.0)) throw ConfigError("glp: p_add in [0,1]");
  if (!(cfg.beta_pref < 1.0)) throw ConfigError("glp: beta_pref must be < 1");

  Rng rng(seed);
  WeightedSampler pref(cfg.n);
  std::vector<std::size_t> degree(cfg.n, 0);
  std::vector<Edge> edges = detail::ring_edges(cfg.m0);
  std::set<Edge> edge_set(edges.begin(), edges.end());
  std::size_t alive = cfg.m0;
  for (NodeId v = 0; v < cfg.m0; ++v) degree[v] = 2;
  for (NodeId v = 0; v < cfg.m0; ++v) pref.set(v, 2.0 - cfg.beta_pref);

  auto bump = [&](NodeId v) {
    ++degree[v];
    pref.set(v, static_cast<double>(degree[v]) - cfg.beta_pref);
  };
  auto draw_existing = [&] { return static_cast<NodeId>(pref.sample(rng.next_double())); };

  while (alive < cfg.n) {
    bool add_node = cfg.p_add >= 1.0 || rng.next_bernoulli(cfg.p_add);
    if (add_node) {
      NodeId node = static_cast<NodeId>(alive);
      std::vector<NodeId> targets;
      while (targets.size() < std::min(cfg.m, alive)) {
        NodeId t = draw_existing();
        if (std::find(targets.begin(), targets.end(), t) == targets.end())
          targets.push_back(t);
      }
      for (NodeId t : targets) {
        edges.emplace_back(std::min(node, t), std::max(node, t));
        edge_set.insert(edges.back());
        bump(t);
        bump(node);
      }
      ++alive;
    } else {
      for (std::size_t link = 0; link < cfg.m; ++link) {
        for (int attempt = 0; attempt < 64; ++attempt) {
          NodeId a = draw_existing();
          NodeId b = draw_existing();
          if (a == b) continue;
          Edge e{std::min(a, b), std::max(a, b)};
          if (edge_set.count(e)) continue;
          edges.push_back(e);
          edge_set.insert(e);
          bump(a);
          bump(b);
          break;
        }
      }
    }
  }
  return Graph::from_index_edges(cfg.n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Inet-style generator: a target degree is drawn per node from a power-law
// frequency model with a configured fraction of degree-1 nodes; the top
// degree nodes form a full-mesh core; everything else joins the connected
// part through linear-preference stub matching. The exponent and core size
// are calibration inputs.
// ---------------------------------------------------------------------------

struct InetConfig {
  std::size_t n = 0;
  double frac_degree_one = 0.3;
  double exponent = 2.2;   // frequency power law n(k) ~ k^-exponent for k >= 2
  std::size_t core_size = 10;
  static constexpr std::size_t kMinNodes = 3037;
};

inline Graph generate_inet(const InetConfig& cfg, std::uint64_t seed) {
  if (cfg.n < InetConfig::kMinNodes)
    throw ConfigError("inet: the model requires at least 3037 nodes (got " +
                      std::to_string(cfg.n) + ")");
  if (!(cfg.frac_degree_one > 0.0 && cfg.frac_degree_one < 1.0))
    throw ConfigError("inet: frac_degree_one in (0,1)");
  if (cfg.core_size < 2 || cfg.core_size >= cfg.n) throw ConfigError("inet: bad core_size");

  const std::size_t n = cfg.n;
  Rng rng(seed);

  // Target degrees: frac_degree_one of the nodes get degree 1, the rest draw
  // k >= 2 from the truncated power law via inverse CDF.
  const std::size_t n_deg1 = static_cast<std::size_t>(std::llround(cfg.frac_degree_one * n));
  const std::size_t k_max = std::max<std::size_t>(8, n / 2);
  std::vector<double> cdf(k_max + 1, 0.0);
  double acc = 0.0;
  for (std::size_t k = 2; k <= k_max; ++k) {
    acc += std::pow(static_cast<double>(k), -cfg.exponent);
    cdf[k] = acc;
  }
  auto draw_degree = [&] {
    double u = rng.next_double() * acc;
    std::size_t lo = 2, hi = k_max;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cdf[mid] >= u) hi = mid; else lo = mid + 1;
    }
    return lo;
  };
  std::vector<std::size_t> target(n, 1);
  for (std::size_t v = n_deg1; v < n; ++v) target[v] = draw_degree();

  // Process order: decreasing target degree, ties by index. Nodes keep their
  // identity (index); the core is the first core_size entries of the order.
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return target[a] > target[b]; });

  std::vector<Edge> edges;
  std::vector<std::size_t> slots = target;
  WeightedSampler stub_weight(n);  // linear preferential weight = open slots
  std::vector<char> joined(n, 0);

  // Full-mesh core.
  for (std::size_t i = 0; i < cfg.core_size; ++i) {
    NodeId u = order[i];
    joined[u] = 1;
    for (std::size_t j = i + 1; j < cfg.core_size; ++j) {
      NodeId v = order[j];
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::size_t used = cfg.core_size - 1;
    slots[u] = slots[u] > used ? slots[u] - used : 0;
    stub_weight.set(u, static_cast<double>(slots[u]));
  }

  // Attach every remaining node to the already-joined part, target chosen
  // with probability proportional to its open slots.
  std::set<Edge> edge_set(edges.begin(), edges.end());
  std::vector<std::size_t> final_degree(n, 0);
  for (const auto& [u, v] : edges) {
    ++final_degree[u];
    ++final_degree[v];
  }
  for (std::size_t i = cfg.core_size; i < n; ++i) {
    NodeId v = order[i];
    NodeId host;
    if (stub_weight.total() > 0.0) {
      host = static_cast<NodeId>(stub_weight.sample(rng.next_double()));
    } else {
      // No open slots anywhere: fall back to a degree-proportional pick among
      // joined nodes so the graph stays connected.
      host = order[rng.next_below(i)];
    }
    edges.emplace_back(std::min(v, host), std::max(v, host));
    edge_set.insert(edges.back());
    ++final_degree[v];
    ++final_degree[host];
    joined[v] = 1;
    if (slots[host] > 0) {
      --slots[host];
      stub_weight.set(host, static_cast<double>(slots[host]));
    }
    slots[v] = slots[v] > 0 ? slots[v] - 1 : 0;
    stub_weight.set(v, static_cast<double>(slots[v]));
  }

  // Fill remaining stubs pairwise with the same linear weight; unmatched
  // stubs are dropped.
  std::vector<NodeId> open;
  for (NodeId v = 0; v < n; ++v)
    if (slots[v] > 0) open.push_back(v);
  std::stable_sort(open.begin(), open.end(),
                   [&](NodeId a, NodeId b) { return slots[a] > slots[b]; });
  for (NodeId a : open) {
    while (slots[a] > 0) {
      double others = stub_weight.total() - stub_weight.weight(a);
      if (others <= 0.0) { slots[a] = 0; break; }
      bool placed = false;
      for (int attempt = 0; attempt < 64; ++attempt) {
        NodeId b = static_cast<NodeId>(stub_weight.sample(rng.next_double()));
        if (b == a || slots[b] == 0) continue;
        Edge e{std::min(a, b), std::max(a, b)};
        if (edge_set.count(e)) continue;
        edges.push_back(e);
        edge_set.insert(e);
        ++final_degree[a];
        ++final_degree[b];
        --slots[a];
        --slots[b];
        stub_weight.set(a, static_cast<double>(slots[a]));
        stub_weight.set(b, static_cast<double>(slots[b]));
        placed = true;
        break;
      }
      if (!placed) { stub_weight.set(a, 0.0); slots[a] = 0; }
    }
  }
  return Graph::from_index_edges(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Positive Feedback Preference: interactive growth mixing three step
// variants; existing endpoints are drawn with the nonlinear preference
// weight k^(1 + delta * log10 k). Defaults follow the model's original
// publication (Zhou & Mondragon 2004): p = 0.3, q = 0.1, delta = 0.048.
// ---------------------------------------------------------------------------

struct PfpConfig {
  std::size_t n = 0;
  double p_new = 0.3;
  double q_new = 0.1;
  double delta = 0.048;
};

inline double pfp_preference_weight(std::size_t degree, double delta) {
  double k = static_cast<double>(degree);
  return std::pow(k, 1.0 + delta * std::log10(k));
}

inline Graph generate_pfp(const PfpConfig& cfg, std::uint64_t seed) {
  if (cfg.n < 3) throw ConfigError("pfp: n must be >= 3");
  if (!(cfg.p_new >= 0.0 && cfg.q_new >= 0.0 && cfg.p_new + cfg.q_new <= 1.0))
    throw ConfigError("pfp: need p, q >= 0 and p + q <= 1");
  if (!(cfg.delta >= 0.0)) throw ConfigError("pfp: delta must be >= 0");

  Rng rng(seed);
  std::vector<Edge> edges = detail::ring_edges(3);
  std::set<Edge> edge_set(edges.begin(), edges.end());
  std::vector<std::size_t> degree(cfg.n, 0);
  WeightedSampler pref(cfg.n);
  for (NodeId v = 0; v < 3; ++v) {
    degree[v] = 2;
    pref.set(v, pfp_preference_weight(2, cfg.delta));
  }
  std::size_t alive = 3;

  auto bump = [&](NodeId v) {
    ++degree[v];
    pref.set(v, pfp_preference_weight(degree[v], cfg.delta));
  };
  auto draw = [&] { return static_cast<NodeId>(pref.sample(rng.next_double())); };
  auto add_edge = [&](NodeId a, NodeId b) {
    edges.emplace_back(std::min(a, b), std::max(a, b));
    edge_set.insert(edges.back());
    bump(a);
    bump(b);
  };
  // Internal link from `host` to a preferentially drawn non-adjacent peer.
  auto add_internal = [&](NodeId host) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      NodeId peer = draw();
      if (peer == host) continue;
      Edge e{std::min(host, peer), std::max(host, peer)};
      if (edge_set.count(e)) continue;
      add_edge(host, peer);
      return;
    }
  };
  auto draw_distinct_pair = [&](NodeId& a, NodeId& b) {
    a = draw();
    do { b = draw(); } while (b == a);
  };

  while (alive < cfg.n) {
    NodeId node = static_cast<NodeId>(alive);
    double u = rng.next_double();
    if (u < cfg.p_new) {
      // New node to one host; one internal link from that host.
      NodeId host = draw();
      add_edge(node, host);
      add_internal(host);
    } else if (u < cfg.p_new + cfg.q_new) {
      // New node to one host; two internal links from that host.
      NodeId host = draw();
      add_edge(node, host);
      add_internal(host);
      add_internal(host);
    } else {
      // New node to two hosts; one internal link from the first host.
      NodeId h1, h2;
      draw_distinct_pair(h1, h2);
      add_edge(node, h1);
      add_edge(node, h2);
      add_internal(h1);
    }
    ++alive;
  }
  return Graph::from_index_edges(cfg.n, std::move(edges));
}

}  // namespace astk
