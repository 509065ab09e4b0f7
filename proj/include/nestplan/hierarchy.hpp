#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "nestplan/graph.hpp"
#include "nestplan/vertex_set.hpp"

namespace nestplan {

/// Which side becomes the interior when removing a clique leaves two
/// components of equal order.
enum class TieBreakPolicy {
  SmallestMinVertexIn,  ///< component holding the smaller vertex id is the interior
  LargestMinVertexIn,   ///< the other one
};

/// Interior/exterior split of one 3-clique.
///
/// The interior is the smaller of the two components left after removing the
/// clique (empty for a non-separating clique); no edge joins interior and
/// exterior.
struct CliqueOrientation {
  Clique3 clique;
  bool separating = false;
  VertexSet interior;
  VertexSet exterior;
};

CliqueOrientation orient_clique(const PlanarGraph& g, const Clique3& k,
                                TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

/// Orients every clique; OpenMP-parallel over cliques.
std::vector<CliqueOrientation> orient_all(const PlanarGraph& g, const std::vector<Clique3>& cliques,
                                          TieBreakPolicy policy);
/// Single-threaded reference for orient_all.
std::vector<CliqueOrientation> orient_all_serial(const PlanarGraph& g, const std::vector<Clique3>& cliques,
                                                 TieBreakPolicy policy);

/// Closure of every clique: its three vertices plus its interior.
std::vector<VertexSet> closures_of(const std::vector<CliqueOrientation>& orientation);

/// Parent (cover) of every clique: the clique with the smallest closure
/// strictly containing its own. Parallel version searches only separating
/// cliques whose interior holds a vertex of the child.
std::vector<std::optional<std::size_t>> compute_covers(const std::vector<CliqueOrientation>& orientation);
/// Reference: plain O(c^2) scan over all clique pairs.
std::vector<std::optional<std::size_t>> compute_covers_serial(
    const std::vector<CliqueOrientation>& orientation);

/// The hierarchical forest H over the 3-cliques of a maximal planar graph.
/// Edges point child -> parent (the parent covers the child).
class HierarchyForest {
 public:
  HierarchyForest(std::size_t order, std::vector<Clique3> cliques, std::vector<CliqueOrientation> orientation,
                  std::vector<std::optional<std::size_t>> parent, TieBreakPolicy policy);

  std::size_t size() const { return cliques_->size(); }
  std::size_t graph_order() const { return order_; }
  TieBreakPolicy policy() const { return policy_; }

  const std::vector<Clique3>& cliques() const { return *cliques_; }
  const Clique3& clique(std::size_t i) const { return (*cliques_)[i]; }
  /// Shared clique table; identity doubles as the analysis tag for bubbles.
  const std::shared_ptr<const std::vector<Clique3>>& clique_table() const { return cliques_; }

  const CliqueOrientation& orientation(std::size_t i) const { return orientation_[i]; }
  bool separating(std::size_t i) const { return orientation_[i].separating; }
  const VertexSet& closure(std::size_t i) const { return closure_[i]; }

  std::optional<std::size_t> parent(std::size_t i) const { return parent_[i]; }
  const std::vector<std::size_t>& children(std::size_t i) const { return children_[i]; }
  std::size_t depth(std::size_t i) const { return depth_[i]; }
  const std::vector<std::size_t>& roots() const { return roots_; }
  std::size_t max_depth() const;

  std::optional<std::size_t> index_of(const Clique3& k) const;

 private:
  std::size_t order_;
  std::shared_ptr<const std::vector<Clique3>> cliques_;
  std::vector<CliqueOrientation> orientation_;
  std::vector<VertexSet> closure_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> roots_;
  TieBreakPolicy policy_;
};

const VertexSet& closure(const HierarchyForest& h, std::size_t k_index);

/// k_i precedes k_j: closure(i) is a subset of closure(j).
bool leq(const HierarchyForest& h, std::size_t i, std::size_t j);

/// Throws InvariantViolation if a clique has two incomparable minimal
/// enclosing closures.
HierarchyForest build_forest(const PlanarGraph& g, const std::vector<Clique3>& cliques,
                             TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

/// Convenience: validates, enumerates and builds. Throws Error if `g` is not
/// maximal planar.
HierarchyForest analyze_hierarchy(const PlanarGraph& g, TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

std::vector<std::size_t> maximal_elements(const HierarchyForest& h);

struct NestedCommunity {
  std::size_t root = 0;
  std::vector<std::size_t> members;  // sorted, includes root
};

/// One community per tree of H, ordered by root index.
std::vector<NestedCommunity> nested_communities(const HierarchyForest& h);

}  // namespace nestplan
