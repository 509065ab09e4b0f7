#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "nestplan/generators.hpp"
#include "nestplan/graph.hpp"

namespace fixtures {

inline nestplan::PlanarGraph complete(std::size_t n) {
  std::vector<nestplan::Edge> edges;
  for (nestplan::VertexId a = 0; a < n; ++a)
    for (nestplan::VertexId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return nestplan::PlanarGraph::from_edges(n, edges);
}

inline nestplan::PlanarGraph k33() {
  std::vector<nestplan::Edge> edges;
  for (nestplan::VertexId a = 0; a < 3; ++a)
    for (nestplan::VertexId b = 3; b < 6; ++b) edges.emplace_back(a, b);
  return nestplan::PlanarGraph::from_edges(6, edges);
}

inline nestplan::VertexId id(const nestplan::PlanarGraph& g, const char* label) { return *g.find(label); }

inline nestplan::Clique3 clique(const nestplan::PlanarGraph& g, const char* a, const char* b, const char* c) {
  return nestplan::Clique3::of(id(g, a), id(g, b), id(g, c));
}

inline std::vector<nestplan::VertexId> ids(const nestplan::PlanarGraph& g, std::initializer_list<const char*> labels) {
  std::vector<nestplan::VertexId> out;
  for (const char* l : labels) out.push_back(id(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

/// Catalog graphs used across suites: named graphs, the two small
/// fixtures and Apollonian generations 1-3.
inline std::vector<nestplan::PlanarGraph> catalog() {
  std::vector<nestplan::PlanarGraph> out;
  for (auto name : nestplan::named_graph_catalog()) out.push_back(nestplan::named_graph(name));
  out.push_back(nestplan::two_bubble_example());
  out.push_back(nestplan::equal_split_example());
  for (int gen = 1; gen <= 3; ++gen) out.push_back(nestplan::apollonian(gen));
  return out;
}

/// Test-only source of non-stacked triangulations: random stacking with an
/// explicit face list, followed by random diagonal flips. Flipping edge ab
/// shared by faces abc and abd replaces it with cd when c, d are not adjacent.
inline nestplan::PlanarGraph flipped_triangulation(int n, std::uint64_t seed, int flips) {
  using namespace nestplan;
  using Face = std::array<VertexId, 3>;
  std::mt19937_64 rng(seed);
  std::set<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<Face> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (VertexId v = 4; v < static_cast<VertexId>(n); ++v) {
    std::size_t at = rng() % faces.size();
    Face f = faces[at];
    for (VertexId x : f) edges.insert({x, v});
    faces[at] = {f[0], f[1], v};
    faces.push_back({f[1], f[2], v});
    faces.push_back({f[0], f[2], v});
  }
  auto has = [&](VertexId a, VertexId b) { return edges.count(std::minmax(a, b)) > 0; };
  for (int k = 0; k < flips; ++k) {
    std::size_t fi = rng() % faces.size();
    std::size_t side = rng() % 3;
    Face f = faces[fi];
    VertexId a = f[side], b = f[(side + 1) % 3], c = f[(side + 2) % 3];
    std::size_t gi = faces.size();
    VertexId d = 0;
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (j == fi) continue;
      const Face& h = faces[j];
      bool ha = std::find(h.begin(), h.end(), a) != h.end();
      bool hb = std::find(h.begin(), h.end(), b) != h.end();
      if (ha && hb) {
        gi = j;
        for (VertexId x : h)
          if (x != a && x != b) d = x;
        break;
      }
    }
    if (gi == faces.size() || has(c, d)) continue;
    edges.erase(std::minmax(a, b));
    edges.insert(std::minmax(c, d));
    faces[fi] = {a, c, d};
    faces[gi] = {b, c, d};
  }
  return PlanarGraph::from_edges(static_cast<std::size_t>(n), std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace fixtures
