#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nestplan/graph.hpp"

namespace nestplan {

/// Apollonian network. Generation 1 is K4 with outer face {0,1,2}; each later
/// generation stacks one vertex into every internal face. The outer face is
/// never subdivided. Vertices are numbered in insertion order.
PlanarGraph apollonian(int generation);

/// Two bubbles sharing the single separating 3-clique {a,c,d}: K4 on
/// {a,b,c,d} glued along face {a,c,d} to an octahedron on {a,c,d,e,f,g}.
PlanarGraph two_bubble_example();

/// Triangle {0,1,2} with five vertices stacked on each side, so removing it
/// leaves two components of order 5.
PlanarGraph equal_split_example();

/// Random stacked triangulation: starting from K4, repeatedly picks a face
/// uniformly at random and stacks a new vertex on it.
PlanarGraph random_triangulation(int n, std::uint64_t seed);

/// "k4", "octahedron" or "icosahedron".
PlanarGraph named_graph(std::string_view name);

std::vector<std::string_view> named_graph_catalog();

}  // namespace nestplan
