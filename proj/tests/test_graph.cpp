#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lll/errors.hpp"
#include "lll/graph.hpp"
#include "lll/random_chordal.hpp"

using fixtures::rq;
using lll::GraphFormat;
using lll::LabeledGraph;

TEST_CASE("json parsing") {
  LabeledGraph empty =
      lll::parse_graph(R"({"vertices": [], "edges": []})", GraphFormat::json);
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  LabeledGraph g = lll::parse_graph(
      R"({"vertices": [{"name": "a", "p": "1/8"}, {"name": "b", "p": "0.25"}],
          "edges": [["a", "b"]]})",
      GraphFormat::json);
  CHECK(g.vertex_count() == 2);
  CHECK(g.label(0) == rq("1/8"));
  CHECK(g.label(1) == rq("1/4"));
  CHECK(g.adjacent(0, 1));
  CHECK(g.name_of(0) == "a");
  CHECK(g.index_of("b") == 1);
  CHECK(!g.index_of("zz").has_value());
}

TEST_CASE("goldner-harary fixture has 11 vertices and 27 edges") {
  LabeledGraph g = fixtures::goldner_harary();
  CHECK(g.vertex_count() == 11);
  CHECK(g.edge_count() == 27);
  for (int v = 0; v < 11; ++v) CHECK(g.label(v) == rq("1/8"));
}

TEST_CASE("validation errors") {
  CHECK_THROWS_WITH_AS(
      lll::parse_graph(R"({"vertices": [{"name": "a", "p": "3/2"}],
                           "edges": []})",
                       GraphFormat::json),
      "label out of range a", lll::ValidationError);
  CHECK_THROWS_WITH_AS(
      lll::parse_graph(R"({"vertices": [{"name": "a", "p": "-1/8"}],
                           "edges": []})",
                       GraphFormat::json),
      "label out of range a", lll::ValidationError);
  CHECK_THROWS_WITH_AS(
      lll::parse_graph(
          R"({"vertices": [{"name": "a", "p": "1/2"}, {"name": "a", "p": "1/2"}],
              "edges": []})",
          GraphFormat::json),
      "duplicate vertex a", lll::ValidationError);
  CHECK_THROWS_WITH_AS(
      lll::parse_graph(R"({"vertices": [{"name": "a", "p": "1/2"}],
                           "edges": [["a", "b"]]})",
                       GraphFormat::json),
      "unknown endpoint b", lll::ValidationError);
  CHECK_THROWS_WITH_AS(
      lll::parse_graph(R"({"vertices": [{"name": "a", "p": "1/2"}],
                           "edges": [["a", "a"]]})",
                       GraphFormat::json),
      "self-loop rejected a", lll::ValidationError);
  CHECK_THROWS_AS(lll::parse_graph("{", GraphFormat::json), lll::ParseError);
  CHECK_THROWS_AS(
      lll::parse_graph(R"({"vertices": [{"name": "a", "p": 0.5}], "edges": []})",
                       GraphFormat::json),
      lll::ParseError);
}

TEST_CASE("edgelist parsing and line numbers") {
  LabeledGraph g = lll::parse_graph(
      "# comment\n"
      "vertex a 1/8\n"
      "vertex b 1/8\n"
      "\n"
      "a b\n",
      GraphFormat::edgelist);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);

  try {
    lll::parse_graph("vertex a 1/8\nvertex b oops\n", GraphFormat::edgelist);
    FAIL("expected ParseError");
  } catch (const lll::ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    lll::parse_graph("vertex a 1/8\na b c d\n", GraphFormat::edgelist);
    FAIL("expected ParseError");
  } catch (const lll::ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("is_independent") {
  LabeledGraph path = fixtures::path3();
  CHECK(path.is_independent(fixtures::indices_of(path, "ac")));
  CHECK(!path.is_independent(fixtures::indices_of(path, "ab")));
  CHECK(path.is_independent({}));

  LabeledGraph gh = fixtures::goldner_harary();
  CHECK(!gh.is_independent(fixtures::indices_of(gh, "ef")));
  CHECK_THROWS_AS(path.is_independent({7}), std::invalid_argument);
}

TEST_CASE("serialize round-trips") {
  auto same = [](const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edges() != b.edges()) return false;
    for (int v = 0; v < a.vertex_count(); ++v) {
      if (a.name_of(v) != b.name_of(v) || a.label(v) != b.label(v)) {
        return false;
      }
    }
    return true;
  };

  LabeledGraph empty({}, {});
  LabeledGraph single({{"a", rq("1/2")}}, {});
  LabeledGraph gh = fixtures::goldner_harary();
  for (GraphFormat fmt : {GraphFormat::json, GraphFormat::edgelist}) {
    CHECK(same(empty, lll::parse_graph(serialize_graph(empty, fmt), fmt)));
    CHECK(same(single, lll::parse_graph(serialize_graph(single, fmt), fmt)));
    CHECK(same(gh, lll::parse_graph(serialize_graph(gh, fmt), fmt)));
  }
  CHECK(serialize_graph(single, GraphFormat::edgelist) == "vertex a 1/2\n");

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    LabeledGraph g = lll::random_chordal(1 + rng() % 10, rng());
    for (GraphFormat fmt : {GraphFormat::json, GraphFormat::edgelist}) {
      CHECK(same(g, lll::parse_graph(serialize_graph(g, fmt), fmt)));
    }
  }
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    LabeledGraph g = lll::random_chordal(1 + rng() % 12, rng());
    for (int u = 0; u < g.vertex_count(); ++u) {
      CHECK(!g.adjacent(u, u));
      for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      }
    }
  }
}

TEST_CASE("uniform relabeling") {
  LabeledGraph g = fixtures::goldner_harary().with_uniform_label(rq("101/800"));
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.label(v) == rq("101/800"));
  CHECK_THROWS_AS(g.with_uniform_label(rq("9/8")), lll::ValidationError);
}
