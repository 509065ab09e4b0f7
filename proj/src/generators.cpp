#include "nestplan/generators.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <string>

namespace nestplan {

namespace {

using Face = std::array<VertexId, 3>;

/// Stacks vertex `v` on faces[at], replacing it with the three new faces.
void stack_vertex(std::vector<Face>& faces, std::size_t at, VertexId v, std::vector<Edge>& edges) {
  const Face f = faces[at];
  for (VertexId x : f) edges.emplace_back(x, v);
  faces[at] = {f[0], f[1], v};
  faces.push_back({f[1], f[2], v});
  faces.push_back({f[0], f[2], v});
}

std::vector<Edge> k4_edges() { return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}; }

}  // namespace

PlanarGraph apollonian(int generation) {
  if (generation < 1) throw std::invalid_argument("apollonian generation must be >= 1");
  std::vector<Edge> edges = k4_edges();
  std::vector<Face> internal{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  VertexId next = 4;
  for (int gen = 2; gen <= generation; ++gen) {
    std::vector<Face> faces = internal;
    const std::size_t current = internal.size();
    for (std::size_t i = 0; i < current; ++i) stack_vertex(faces, i, next++, edges);
    internal = std::move(faces);
  }
  return PlanarGraph::from_edges(next, edges);
}

PlanarGraph two_bubble_example() {
  enum : VertexId { a, b, c, d, e, f, g };
  std::vector<Edge> edges{{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
  // Octahedron on {a,c,d,e,f,g}: antipodal pairs a-e, c-f, d-g are the only
  // non-edges; {a,c,d} is one of its faces.
  const std::array<VertexId, 6> oct{a, c, d, e, f, g};
  for (std::size_t i = 0; i < oct.size(); ++i) {
    for (std::size_t j = i + 1; j < oct.size(); ++j) {
      VertexId x = oct[i], y = oct[j];
      bool antipodal = (x == a && y == e) || (x == c && y == f) || (x == d && y == g);
      bool shared = x <= d && y <= d;  // a, c, d already joined by the K4
      if (!antipodal && !shared) edges.emplace_back(x, y);
    }
  }
  return PlanarGraph::from_edges(7, edges, {"a", "b", "c", "d", "e", "f", "g"});
}

PlanarGraph equal_split_example() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  VertexId next = 3;
  for (int side = 0; side < 2; ++side) {
    std::vector<Face> faces{{0, 1, 2}};
    // Alternate targets so each side is a small tree of stacks, not a path.
    const std::array<std::size_t, 5> targets{0, 0, 1, 2, 3};
    for (std::size_t t : targets) stack_vertex(faces, t, next++, edges);
  }
  return PlanarGraph::from_edges(next, edges);
}

PlanarGraph random_triangulation(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("random triangulation needs n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = k4_edges();
  std::vector<Face> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (VertexId v = 4; v < static_cast<VertexId>(n); ++v) {
    std::size_t at = static_cast<std::size_t>(rng() % faces.size());
    stack_vertex(faces, at, v, edges);
  }
  return PlanarGraph::from_edges(static_cast<std::size_t>(n), edges);
}

PlanarGraph named_graph(std::string_view name) {
  if (name == "k4") return PlanarGraph::from_edges(4, k4_edges());
  if (name == "octahedron") {
    // Antipodal pairs (0,1), (2,3), (4,5).
    std::vector<Edge> edges;
    for (VertexId x = 0; x < 6; ++x)
      for (VertexId y = x + 1; y < 6; ++y)
        if (!(x % 2 == 0 && y == x + 1)) edges.emplace_back(x, y);
    return PlanarGraph::from_edges(6, edges);
  }
  if (name == "icosahedron") {
    // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
      VertexId up = 1 + i, up_next = 1 + (i + 1) % 5;
      VertexId lo = 6 + i, lo_next = 6 + (i + 1) % 5;
      edges.emplace_back(0, up);
      edges.emplace_back(up, up_next);
      edges.emplace_back(up, lo);
      edges.emplace_back(lo, up_next);
      edges.emplace_back(lo, lo_next);
      edges.emplace_back(lo, 11);
    }
    return PlanarGraph::from_edges(12, edges);
  }
  throw std::invalid_argument("unknown named graph '" + std::string(name) + "'");
}

std::vector<std::string_view> named_graph_catalog() { return {"k4", "octahedron", "icosahedron"}; }

}  // namespace nestplan
