#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "astk/errors.hpp"
#include "astk/graph.hpp"

namespace astk {

struct ParseStats {
  std::size_t lines = 0;
  std::size_t comments = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
};

// UCLA-style record: an edge annotated with first/last observation times.
struct TimestampedEdge {
  std::string a, b;
  std::int64_t first_seen = 0;
  std::int64_t last_seen = 0;
};

struct TimestampedTopology {
  std::vector<TimestampedEdge> edges;
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline std::string strip_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line;
}

inline std::int64_t parse_timestamp(const std::string& token, std::size_t line_no) {
  if (token.empty()) throw ParseError(line_no, "empty timestamp");
  std::size_t i = token[0] == '-' ? 1 : 0;
  if (i == token.size()) throw ParseError(line_no, "non-numeric timestamp '" + token + "'");
  for (; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw ParseError(line_no, "non-numeric timestamp '" + token + "'");
  return std::stoll(token);
}

}  // namespace detail

// Plain edge list: two whitespace-separated labels per line, '#' comments.
// Duplicate pairs merge silently; parse statistics ride along.
inline Graph parse_edge_list(std::istream& in, ParseStats* stats_out = nullptr) {
  ParseStats stats;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    ++stats.lines;
    if (raw.find('#') != std::string::npos) ++stats.comments;
    std::string line = detail::strip_line(raw);
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected 2 tokens, got " + std::to_string(tokens.size()));
    pairs.emplace_back(std::move(tokens[0]), std::move(tokens[1]));
  }
  Graph g = Graph::from_labelled_edges(pairs, DedupPolicy::kSilentlyMerge);
  stats.self_loops_dropped = g.build_stats().self_loops_dropped;
  stats.duplicates_merged = g.build_stats().duplicates_merged;
  if (stats_out) *stats_out = stats;
  return g;
}

// Timestamped list: "labelA labelB first_seen last_seen" per line. Records
// are preserved in order, no dedup.
inline TimestampedTopology parse_timestamped(std::istream& in) {
  TimestampedTopology topo;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_line(raw);
    auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 4)
      throw ParseError(line_no, "expected 4 tokens, got " + std::to_string(tokens.size()));
    TimestampedEdge e;
    e.a = tokens[0];
    e.b = tokens[1];
    e.first_seen = detail::parse_timestamp(tokens[2], line_no);
    e.last_seen = detail::parse_timestamp(tokens[3], line_no);
    if (e.first_seen > e.last_seen)
      throw ParseError(line_no, "first_seen after last_seen");
    topo.edges.push_back(std::move(e));
  }
  return topo;
}

// 6 months of 86400-second days, the default staleness window.
constexpr std::int64_t kSixMonthsSeconds = std::int64_t{182} * 86400;

// Keep edges whose last_seen is within [snapshot - window, ...]; boundary
// inclusive. Nodes without surviving edges drop out.
inline Graph filter_last_seen(const TimestampedTopology& topo, std::int64_t snapshot,
                              std::int64_t window_seconds = kSixMonthsSeconds) {
  if (window_seconds <= 0) throw ConfigError("filter_last_seen: window must be positive");
  // snapshot - window may underflow toward -inf conceptually; saturate.
  std::int64_t cutoff = snapshot < std::numeric_limits<std::int64_t>::min() + window_seconds
                            ? std::numeric_limits<std::int64_t>::min()
                            : snapshot - window_seconds;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : topo.edges)
    if (e.last_seen >= cutoff) pairs.emplace_back(e.a, e.b);
  return Graph::from_labelled_edges(pairs, DedupPolicy::kSilentlyMerge);
}

// Optional label predicate for measured BGP data: keeps plain AS numbers
// outside the private range 64512-65534.
inline bool is_public_as_label(const std::string& label) {
  if (label.empty() || label.size() > 10) return false;
  for (char c : label)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  long long value = std::stoll(label);
  return value < 64512 || value > 65534;
}

// Canonical edge-list serialization: one "labelA labelB" line per edge in
// (min index, max index) order. parse(serialize(g)) reproduces the edge set.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges())
    out << g.label(u) << ' ' << g.label(v) << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(g, os);
  return os.str();
}

}  // namespace astk
