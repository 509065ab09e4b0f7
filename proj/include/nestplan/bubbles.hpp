#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "nestplan/graph.hpp"
#include "nestplan/hierarchy.hpp"

namespace nestplan {

/// Root of a bubble: a real separating clique, or the imaginary clique whose
/// interior is the whole graph (only for the maximal bubble).
struct RootCliqueRef {
  std::optional<std::size_t> clique;

  static RootCliqueRef imaginary() { return {}; }
  static RootCliqueRef real(std::size_t index) { return {index}; }
  bool is_imaginary() const { return !clique.has_value(); }

  bool operator==(const RootCliqueRef&) const = default;
};

/// A maximal planar subgraph of G all of whose 3-cliques are faces.
struct Bubble {
  std::size_t id = 0;
  RootCliqueRef root;
  std::vector<std::size_t> member_cliques;  // sorted clique indices
  VertexSet vertices;
  std::shared_ptr<const std::vector<Clique3>> clique_table;  // identifies the analysis

  const Clique3& member(std::size_t i) const { return (*clique_table)[member_cliques[i]]; }
};

/// Bubble root clique plus its incoming neighbours in H. Throws Error when
/// the clique has no children.
Bubble bubble_from_clique(const HierarchyForest& h, std::size_t k_index);

/// Union of the maximal elements of H, rooted at the imaginary clique.
Bubble maximal_bubble(const HierarchyForest& h);

/// The maximal bubble (id 0) followed by one bubble per separating clique in
/// clique-index order (ids 1..).
std::vector<Bubble> all_bubbles(const HierarchyForest& h);

/// Variant running bubble_from_clique for all separating cliques under OpenMP.
std::vector<Bubble> all_bubbles_parallel(const HierarchyForest& h);

struct BubbleEdge {
  std::size_t parent = 0;
  std::size_t child = 0;
  std::size_t shared_clique = 0;  // clique index
};

/// The bubble hierarchical tree. Edges are stored with a parent designation
/// and emitted parent -> child (opposite to H's child -> parent).
class BubbleTree {
 public:
  BubbleTree(std::vector<Bubble> bubbles, std::vector<std::optional<std::size_t>> parent,
             std::vector<std::optional<std::size_t>> edge_label);

  const std::vector<Bubble>& bubbles() const { return bubbles_; }
  const Bubble& bubble(std::size_t id) const { return bubbles_[id]; }
  std::size_t size() const { return bubbles_.size(); }
  std::size_t root() const { return 0; }

  std::optional<std::size_t> parent(std::size_t id) const { return parent_[id]; }
  /// Clique shared with the parent bubble.
  std::optional<std::size_t> edge_label(std::size_t id) const { return edge_label_[id]; }
  const std::vector<std::size_t>& children(std::size_t id) const { return children_[id]; }
  std::size_t depth(std::size_t id) const { return depth_[id]; }

  /// Edges ordered by child id.
  std::vector<BubbleEdge> edges() const;

 private:
  std::vector<Bubble> bubbles_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::optional<std::size_t>> edge_label_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> depth_;
};

/// Throws InvariantViolation if a separating clique is not in exactly two
/// bubbles.
BubbleTree build_bubble_tree(std::vector<Bubble> bubbles, const HierarchyForest& h);

/// The clique shared by two adjacent bubbles; nullopt for non-adjacent
/// bubbles or a self-query. Throws Error for bubbles of different analyses.
std::optional<Clique3> shared_clique(const Bubble& b1, const Bubble& b2);

/// Induced subgraph on `vertices` is connected, maximal planar and has no
/// separating 3-clique of its own. A lone triangle passes.
bool is_bubble(const PlanarGraph& g, const VertexSet& vertices);

/// Hierarchy plus bubble tree for a validated graph.
struct Decomposition {
  HierarchyForest forest;
  BubbleTree tree;
};

Decomposition decompose(const PlanarGraph& g, TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

}  // namespace nestplan
