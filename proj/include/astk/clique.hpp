#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "astk/graph.hpp"
#include "astk/metrics.hpp"

namespace astk {

struct CliqueOptions {
  // Wall-clock budget; exceeded searches report timed_out with the best
  // clique found so far as a lower bound.
  std::chrono::milliseconds budget{60000};
};

struct CliqueResult {
  std::size_t size = 0;  // exact maximum, or best lower bound on timeout
  bool timed_out = false;
};

namespace detail {

// Branch and bound with greedy coloring. Candidates are kept ordered so the
// coloring bound is computed on a degeneracy-flavored order.
class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, std::chrono::steady_clock::time_point deadline)
      : g_(g), deadline_(deadline) {}

  CliqueResult run() {
    const std::size_t n = g_.node_count();
    if (n == 0) return {0, false};
    best_ = 1;
    // Degeneracy order from the k-core peel; searching vertices in reverse
    // degeneracy order keeps candidate sets small.
    CorenessProfile cores = coreness(g_);
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      return cores.coreness[a] > cores.coreness[b];
    });
    std::vector<NodeId> candidates;
    for (std::size_t i = 0; i < n && !timed_out_; ++i) {
      NodeId v = order[i];
      if (cores.coreness[v] + 1 <= best_) continue;  // cannot beat best
      candidates.clear();
      for (std::size_t j = i + 1; j < n; ++j)
        if (g_.has_edge(v, order[j])) candidates.push_back(order[j]);
      expand(1, candidates);
    }
    return {best_, timed_out_};
  }

 private:
  void expand(std::size_t depth, std::vector<NodeId>& candidates) {
    if (timed_out_) return;
    if (candidates.empty()) {
      best_ = std::max(best_, depth);
      return;
    }
    if ((++ticks_ & 0xFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    // Greedy coloring: color classes are independent sets, so a clique can
    // use at most one vertex per color. Vertices come back ordered by color.
    std::vector<NodeId> colored;
    std::vector<std::size_t> color;
    greedy_color(candidates, colored, color);
    std::vector<NodeId> next;
    for (std::size_t i = colored.size(); i-- > 0;) {
      if (depth + color[i] <= best_) return;  // bound: remaining colors too few
      NodeId v = colored[i];
      next.clear();
      for (std::size_t j = 0; j < i; ++j)
        if (g_.has_edge(v, colored[j])) next.push_back(colored[j]);
      expand(depth + 1, next);
      if (timed_out_) return;
    }
  }

  void greedy_color(const std::vector<NodeId>& candidates, std::vector<NodeId>& colored,
                    std::vector<std::size_t>& color) const {
    std::vector<std::vector<NodeId>> classes;
    for (NodeId v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        bool conflict = false;
        for (NodeId u : cls)
          if (g_.has_edge(u, v)) { conflict = true; break; }
        if (!conflict) { cls.push_back(v); placed = true; break; }
      }
      if (!placed) classes.push_back({v});
    }
    colored.clear();
    color.clear();
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (NodeId v : classes[c]) {
        colored.push_back(v);
        color.push_back(c + 1);
      }
  }

  const Graph& g_;
  std::chrono::steady_clock::time_point deadline_;
  std::size_t best_ = 0;
  std::uint64_t ticks_ = 0;
  bool timed_out_ = false;
};

}  // namespace detail

// Exact maximum-clique cardinality, or a lower bound with timed_out set when
// the budget runs out.
inline CliqueResult top_clique_size(const Graph& g, const CliqueOptions& opts = {}) {
  detail::MaxCliqueSearch search(g, std::chrono::steady_clock::now() + opts.budget);
  return search.run();
}

}  // namespace astk
