#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "astk/errors.hpp"

namespace astk {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // stored with first < second

enum class DedupPolicy { kReject, kSilentlyMerge };

struct BuildStats {
  std::size_t input_pairs = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
};

// Immutable undirected simple graph. Nodes are dense indices 0..N-1 with
// optional external string labels (AS numbers). Adjacency lists are sorted,
// so has_edge is a binary search and iteration order is deterministic.
class Graph {
 public:
  // Build from labelled pairs. Labels map to indices in first-appearance
  // order. Self-loops are dropped and counted; duplicate unordered pairs are
  // merged or rejected per policy.
  static Graph from_labelled_edges(
      const std::vector<std::pair<std::string, std::string>>& pairs,
      DedupPolicy policy = DedupPolicy::kSilentlyMerge) {
    if (pairs.empty()) throw EmptyInputError();
    Graph g;
    g.stats_.input_pairs = pairs.size();
    std::unordered_map<std::string, NodeId> index;
    auto intern = [&](const std::string& label) -> NodeId {
      auto [it, inserted] = index.emplace(label, static_cast<NodeId>(g.labels_.size()));
      if (inserted) g.labels_.push_back(label);
      return it->second;
    };
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      NodeId u = intern(a), v = intern(b);
      if (u == v) {
        ++g.stats_.self_loops_dropped;
        continue;
      }
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    g.finish(g.labels_.size(), std::move(edges), policy);
    return g;
  }

  // Build from index pairs on a fixed node count (generator output path).
  static Graph from_index_edges(std::size_t node_count, std::vector<Edge> edges,
                                DedupPolicy policy = DedupPolicy::kReject) {
    Graph g;
    g.stats_.input_pairs = edges.size();
    for (auto& [u, v] : edges) {
      if (u == v) throw ConfigError("self-loop in index edge list");
      if (u >= node_count || v >= node_count) throw ConfigError("node index out of range");
      if (u > v) std::swap(u, v);
    }
    g.finish(node_count, std::move(edges), policy);
    return g;
  }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

  bool has_edge(NodeId u, NodeId v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
  }

  // Edges sorted by (min endpoint, max endpoint).
  const std::vector<Edge>& edges() const { return edges_; }

  std::string label(NodeId v) const {
    return v < labels_.size() && !labels_[v].empty() ? labels_[v] : std::to_string(v);
  }
  bool has_labels() const { return !labels_.empty(); }

  const BuildStats& build_stats() const { return stats_; }

 private:
  void finish(std::size_t node_count, std::vector<Edge> edges, DedupPolicy policy) {
    std::sort(edges.begin(), edges.end());
    std::size_t before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    stats_.duplicates_merged = before - edges.size();
    if (stats_.duplicates_merged > 0 && policy == DedupPolicy::kReject)
      throw DuplicateEdgeError("duplicate edge in input (" +
                               std::to_string(stats_.duplicates_merged) + " repeats)");
    edges_ = std::move(edges);
    adjacency_.assign(node_count, {});
    for (const auto& [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  }

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  BuildStats stats_;
};

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
  return degrees;
}

// Connected-component partition. Component ids are ordered by
// (size non-increasing, smallest contained node index ascending), so
// component 0 is the canonical largest component.
struct ComponentPartition {
  std::vector<NodeId> component_of;  // node -> component id
  std::vector<std::size_t> sizes;    // non-increasing
};

inline ComponentPartition connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr NodeId kUnseen = static_cast<NodeId>(-1);
  std::vector<NodeId> comp(n, kUnseen);
  std::vector<std::size_t> sizes;
  std::vector<NodeId> queue;
  for (NodeId start = 0; start < n; ++start) {
    if (comp[start] != kUnseen) continue;
    NodeId id = static_cast<NodeId>(sizes.size());
    std::size_t size = 0;
    queue.assign(1, start);
    comp[start] = id;
    while (!queue.empty()) {
      NodeId u = queue.back();
      queue.pop_back();
      ++size;
      for (NodeId w : g.neighbors(u)) {
        if (comp[w] == kUnseen) {
          comp[w] = id;
          queue.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  // Relabel so ids are sorted by (size desc, first-node asc). Discovery order
  // already gives first-node ascending, so a stable sort by size suffices.
  std::vector<NodeId> order(sizes.size());
  for (NodeId i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return sizes[a] > sizes[b]; });
  std::vector<NodeId> rank(sizes.size());
  for (NodeId r = 0; r < order.size(); ++r) rank[order[r]] = r;
  ComponentPartition part;
  part.component_of.resize(n);
  for (NodeId v = 0; v < n; ++v) part.component_of[v] = rank[comp[v]];
  part.sizes.resize(sizes.size());
  for (NodeId r = 0; r < order.size(); ++r) part.sizes[r] = sizes[order[r]];
  return part;
}

// Induced subgraph on the largest component; ties broken toward the
// component containing the smallest node index. Labels carry over.
inline Graph largest_component(const Graph& g) {
  ComponentPartition part = connected_components(g);
  if (part.sizes.size() <= 1) return g;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<NodeId> members;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (part.component_of[v] == 0) members.push_back(v);
  for (const auto& [u, v] : g.edges())
    if (part.component_of[u] == 0) pairs.emplace_back(g.label(u), g.label(v));
  if (pairs.empty()) {
    // Largest component is a single node.
    std::vector<std::pair<std::string, std::string>> self = {
        {g.label(members[0]), g.label(members[0])}};
    return Graph::from_labelled_edges(self);
  }
  return Graph::from_labelled_edges(pairs);
}

}  // namespace astk
