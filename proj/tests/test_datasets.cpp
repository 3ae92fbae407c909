#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "astk/datasets.hpp"

using namespace astk;

TEST_CASE("parse_edge_list handles plain pairs") {
  std::istringstream in("1 2\n2 3\n");
  ParseStats stats;
  Graph g = parse_edge_list(in, &stats);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(stats.lines == 2);
}

TEST_CASE("parse_edge_list merges duplicates and skips comments") {
  std::istringstream in("1 2\n# note\n2 1\n");
  ParseStats stats;
  Graph g = parse_edge_list(in, &stats);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(stats.comments == 1);
  CHECK(stats.duplicates_merged == 1);
}

TEST_CASE("parse_edge_list rejects malformed lines with the line number") {
  std::istringstream in("1 2 3\n");
  try {
    parse_edge_list(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line_number == 1);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("parse_edge_list tolerates CRLF, tabs and repeated separators") {
  std::istringstream in("1\t 2\r\n2  \t3\r\n");
  Graph g = parse_edge_list(in);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("parse_timestamped keeps records in order") {
  std::istringstream in("1 2 100 200\n2 3 150 150\n");
  TimestampedTopology t = parse_timestamped(in);
  REQUIRE(t.edges.size() == 2);
  CHECK(t.edges[0].a == "1");
  CHECK(t.edges[0].first_seen == 100);
  CHECK(t.edges[0].last_seen == 200);
}

TEST_CASE("parse_timestamped rejects inverted intervals") {
  std::istringstream in("1 2 300 200\n");
  CHECK_THROWS_AS(parse_timestamped(in), ParseError);
}

TEST_CASE("parse_timestamped rejects non-numeric timestamps") {
  std::istringstream in("1 2 soon 200\n");
  CHECK_THROWS_AS(parse_timestamped(in), ParseError);
}

TEST_CASE("parse_timestamped accepts an empty file") {
  std::istringstream in("");
  CHECK(parse_timestamped(in).edges.empty());
}

TEST_CASE("filter_last_seen drops edges older than the window") {
  TimestampedTopology t;
  std::int64_t snapshot = 1000 * 86400;
  // 7 months stale vs. fresh.
  t.edges.push_back({"1", "2", 0, snapshot - 210 * 86400});
  t.edges.push_back({"2", "3", 0, snapshot});
  Graph g = filter_last_seen(t, snapshot);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.label(0) == "2");
}

TEST_CASE("filter_last_seen boundary is inclusive") {
  TimestampedTopology t;
  std::int64_t snapshot = 1000 * 86400;
  t.edges.push_back({"1", "2", 0, snapshot - kSixMonthsSeconds});
  Graph g = filter_last_seen(t, snapshot);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("filter_last_seen with all edges fresh equals the plain build") {
  TimestampedTopology t;
  t.edges.push_back({"1", "2", 50, 100});
  t.edges.push_back({"2", "3", 60, 100});
  Graph filtered = filter_last_seen(t, 100);
  std::istringstream in("1 2\n2 3\n");
  Graph plain = parse_edge_list(in);
  CHECK(filtered.edges() == plain.edges());
}

TEST_CASE("filter_last_seen rejects non-positive windows") {
  TimestampedTopology t;
  t.edges.push_back({"1", "2", 0, 10});
  CHECK_THROWS_AS(filter_last_seen(t, 100, 0), ConfigError);
}

TEST_CASE("serialize then parse round-trips the edge set") {
  std::istringstream in("4 7\n7 2\n2 4\n9 4\n");
  Graph g = parse_edge_list(in);
  std::istringstream again(to_edge_list(g));
  Graph g2 = parse_edge_list(again);
  CHECK(g2.node_count() == g.node_count());
  REQUIRE(g2.edge_count() == g.edge_count());
  // Compare under label identity.
  std::set<std::pair<std::string, std::string>> a, b;
  for (const auto& [u, v] : g.edges())
    a.insert({std::min(g.label(u), g.label(v)), std::max(g.label(u), g.label(v))});
  for (const auto& [u, v] : g2.edges())
    b.insert({std::min(g2.label(u), g2.label(v)), std::max(g2.label(u), g2.label(v))});
  CHECK(a == b);
}

TEST_CASE("parsing is line-order insensitive up to relabeling") {
  std::istringstream fwd("1 2\n2 3\n3 1\n");
  std::istringstream rev("3 1\n2 3\n1 2\n");
  Graph a = parse_edge_list(fwd);
  Graph b = parse_edge_list(rev);
  std::set<std::pair<std::string, std::string>> ea, eb;
  for (const auto& [u, v] : a.edges())
    ea.insert({std::min(a.label(u), a.label(v)), std::max(a.label(u), a.label(v))});
  for (const auto& [u, v] : b.edges())
    eb.insert({std::min(b.label(u), b.label(v)), std::max(b.label(u), b.label(v))});
  CHECK(ea == eb);
}

TEST_CASE("public AS label predicate") {
  CHECK(is_public_as_label("3356"));
  CHECK(is_public_as_label("65535"));
  CHECK_FALSE(is_public_as_label("64512"));
  CHECK_FALSE(is_public_as_label("65534"));
  CHECK_FALSE(is_public_as_label("AS3356"));
  CHECK_FALSE(is_public_as_label("{1,2}"));
}
