#pragma once

#include <cstddef>
#include <string>

#include "nestplan/bubbles.hpp"
#include "nestplan/graph.hpp"
#include "nestplan/hierarchy.hpp"

namespace nestplan::io {

enum class Format { Json, Dot, EdgeList };

/// Headline numbers printed by `analyze`.
struct Summary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t cliques = 0;
  std::size_t separating = 0;
  std::size_t maximal_elements = 0;
  std::size_t max_depth = 0;
  std::size_t bubbles = 0;
};

Summary summarize(const PlanarGraph& g, const Decomposition& d);
std::string summary_text(const Summary& s);
std::string summary_json(const Summary& s);

/// Graph itself: edge list, {"vertices", "edges"} JSON, or undirected DOT.
std::string write_graph(const PlanarGraph& g, Format format);

/// H as a JSON array of {clique, separating, interior_size, parent, depth},
/// DOT with edges child -> parent, or "child parent" clique-index lines.
std::string write_hierarchy(const PlanarGraph& g, const HierarchyForest& h, Format format);

/// Bubbles and H_b: JSON {bubbles, tree}, DOT with edges parent -> child
/// labelled by the shared clique, or "parent child" bubble-id lines.
std::string write_bubbles(const PlanarGraph& g, const Decomposition& d, Format format);

}  // namespace nestplan::io
