#include <bit>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "nestplan/errors.hpp"
#include "nestplan/generators.hpp"
#include "nestplan/graph.hpp"
#include "planarity_oracle.hpp"

using namespace nestplan;

namespace {

std::vector<Clique3> brute_triangles(const PlanarGraph& g) {
  std::vector<Clique3> out;
  const auto n = static_cast<VertexId>(g.num_vertices());
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) out.push_back({a, b, c});
  return out;
}

}  // namespace

TEST_CASE("parse_edge_list builds interned, symmetric graphs") {
  auto tri = parse_edge_list("0 1\n1 2\n0 2");
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.num_edges() == 3);
  CHECK(tri.has_edge(2, 0));

  auto k4 = parse_edge_list("a b\nb c\nc a\na d\nb d\nc d");
  CHECK(k4.num_vertices() == 4);
  CHECK(k4.num_edges() == 6);
  CHECK(k4.label(0) == "a");
  CHECK(*k4.find("d") == 3);
  CHECK_FALSE(k4.find("z"));

  auto commented = parse_edge_list("# header\n\n  x y  \r\n# y z\ny z\n");
  CHECK(commented.num_edges() == 2);
}

TEST_CASE("parse_edge_list rejects bad input with line numbers") {
  CHECK_THROWS_AS(parse_edge_list("x x"), ParseError);
  try {
    parse_edge_list("a b\n\nc\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("a b c"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b\nb a"), ParseError);
}

TEST_CASE("to_edge_list round-trips") {
  auto g = two_bubble_example();
  auto back = parse_edge_list(to_edge_list(g));
  auto labelled = [](const PlanarGraph& h) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [a, b] : h.edges()) out.insert(std::minmax(h.label(a), h.label(b)));
    return out;
  };
  CHECK(back.num_vertices() == g.num_vertices());
  CHECK(labelled(back) == labelled(g));
}

TEST_CASE("validate_maximal_planar") {
  CHECK(validate_maximal_planar(named_graph("k4")).accepted());
  CHECK(validate_maximal_planar(named_graph("octahedron")).accepted());
  CHECK(validate_maximal_planar(named_graph("icosahedron")).accepted());

  auto k5 = validate_maximal_planar(fixtures::complete(5));
  CHECK_FALSE(k5.edge_count_ok);
  CHECK_FALSE(k5.is_planar);
  CHECK_FALSE(k5.accepted());

  auto tri = validate_maximal_planar(fixtures::complete(3));
  CHECK(tri.edge_count_ok);
  CHECK_FALSE(tri.order_ok);
  CHECK_FALSE(tri.accepted());

  // Two disjoint K4s: 12 edges but 3n-6 = 18 and disconnected.
  auto two = parse_edge_list("a b\na c\na d\nb c\nb d\nc d\ne f\ne g\ne h\nf g\nf h\ng h");
  auto r = validate_maximal_planar(two);
  CHECK_FALSE(r.is_connected);
  CHECK_FALSE(r.edge_count_ok);
  CHECK(r.message.find("not connected") != std::string::npos);

  // Planar but not maximal: octahedron minus an edge.
  auto oct = named_graph("octahedron");
  auto edges = oct.edges();
  edges.pop_back();
  auto r2 = validate_maximal_planar(PlanarGraph::from_edges(6, edges));
  CHECK(r2.is_planar);
  CHECK_FALSE(r2.edge_count_ok);
}

TEST_CASE("planarity_test on Kuratowski graphs and the octahedron") {
  CHECK(planarity_test(fixtures::complete(4)));
  CHECK_FALSE(planarity_test(fixtures::complete(5)));
  CHECK_FALSE(planarity_test(fixtures::k33()));

  // Octahedron verified against an explicit face embedding search.
  auto oct = named_graph("octahedron");
  CHECK(testing_oracle::planar_by_rotations(oct));
  CHECK(planarity_test(oct));
  CHECK_FALSE(testing_oracle::planar_by_rotations(fixtures::complete(5)));
  CHECK_FALSE(testing_oracle::planar_by_rotations(fixtures::k33()));
}

TEST_CASE("planarity_test agrees with the rotation-system oracle on random small graphs") {
  std::mt19937_64 rng(2024);
  int compared = 0, planar = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 5 + rng() % 3;
    std::vector<Edge> edges;
    const double p = 0.35 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        if (static_cast<double>(rng() % 1000) / 1000.0 < p) edges.emplace_back(a, b);
    auto g = PlanarGraph::from_edges(n, edges);
    if (testing_oracle::rotation_system_count(g) > 2e5) continue;
    ++compared;
    bool expected = testing_oracle::planar_by_rotations(g);
    planar += expected;
    CHECK(planarity_test(g) == expected);
  }
  CHECK(compared > 200);
  CHECK(planar > 20);
  CHECK(compared - planar > 20);
}

TEST_CASE("enumerate_3cliques") {
  auto k4 = enumerate_3cliques(named_graph("k4"));
  CHECK(k4 == std::vector<Clique3>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});

  auto oct = named_graph("octahedron");
  CHECK(enumerate_3cliques(oct).size() == 8);
  CHECK(enumerate_3cliques(oct) == brute_triangles(oct));

  auto ap2 = apollonian(2);
  CHECK(enumerate_3cliques(ap2) == brute_triangles(ap2));
  CHECK(enumerate_3cliques(ap2).size() == 13);  // 10 faces + 3 separating

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_triangulation(4 + static_cast<int>(seed % 9), seed);
    CHECK(enumerate_3cliques(g) == brute_triangles(g));
  }
  for (const auto& g : fixtures::catalog())
    if (g.num_vertices() <= 12) CHECK(enumerate_3cliques(g) == brute_triangles(g));
}

TEST_CASE("components_after_removal") {
  auto k4 = named_graph("k4");
  CHECK(components_after_removal(k4, {0, 1, 2}) == std::vector<std::vector<VertexId>>{{3}});

  auto tb = two_bubble_example();
  auto comps = components_after_removal(tb, fixtures::clique(tb, "a", "c", "d"));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == fixtures::ids(tb, {"b"}));
  CHECK(comps[1] == fixtures::ids(tb, {"e", "f", "g"}));

  auto oct = named_graph("octahedron");
  for (const auto& k : enumerate_3cliques(oct)) {
    auto c = components_after_removal(oct, k);
    REQUIRE(c.size() == 1);
    CHECK(c[0].size() == 3);
  }

  CHECK_THROWS_AS(components_after_removal(oct, {0, 1, 2}), InvalidClique);  // 0-1 antipodal
  CHECK_THROWS_AS(Clique3::of(1, 1, 2), InvalidClique);
}

TEST_CASE("every clique of a triangulation separates into one or two parts") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_triangulation(20, seed);
    REQUIRE(validate_maximal_planar(g).accepted());
    CHECK(g.num_edges() == 3 * g.num_vertices() - 6);
    std::vector<int> in_clique(g.num_vertices(), 0);
    for (const auto& k : enumerate_3cliques(g)) {
      auto c = components_after_removal(g, k).size();
      CHECK((c == 1 || c == 2));
      for (auto v : k.vertices()) in_clique[v] = 1;
    }
    CHECK(std::count(in_clique.begin(), in_clique.end(), 0) == 0);
  }
}

TEST_CASE("no 6-vertex maximal planar graph has exactly one separating 3-clique") {
  // Enumerates every 12-edge subset of K6 (all labelled candidates).
  std::vector<Edge> all;
  for (VertexId a = 0; a < 6; ++a)
    for (VertexId b = a + 1; b < 6; ++b) all.emplace_back(a, b);
  std::map<std::size_t, int> by_separating;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    if (std::popcount(mask) != 12) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask & (1u << i)) edges.push_back(all[i]);
    auto g = PlanarGraph::from_edges(6, edges);
    if (!validate_maximal_planar(g).accepted()) continue;
    std::size_t sep = 0;
    for (const auto& k : enumerate_3cliques(g)) sep += components_after_removal(g, k).size() == 2;
    ++by_separating[sep];
  }
  CHECK(by_separating.count(1) == 0);
  CHECK(by_separating[0] == 15);   // labelled octahedra: 6!/48
  CHECK(by_separating[2] == 180);  // the other triangulation: 6!/4
}

TEST_CASE("induced subgraph keeps labels and edges") {
  auto tb = two_bubble_example();
  auto sub = tb.induced(make_vertex_set(tb.num_vertices(), fixtures::ids(tb, {"a", "b", "c", "d"})));
  CHECK(sub.num_vertices() == 4);
  CHECK(sub.num_edges() == 6);
  CHECK(sub.labels() == std::vector<std::string>{"a", "b", "c", "d"});
}
