#pragma once

#include <set>
#include <string>
#include <vector>

#include "nestplan/graph.hpp"
#include "nestplan/hierarchy.hpp"

namespace nestplan::oracle {

// Brute-force verifiers. Everything here is re-derived from the raw adjacency
// lists with triple scans, flood fills and subset tests; the hierarchy and
// bubble modules are only called to obtain the object under test.

struct CheckReport {
  std::string name;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Reflexivity, antisymmetry and transitivity of closure inclusion over all
/// clique pairs and triples, and agreement of leq() with the brute force.
CheckReport check_poset_axioms(const PlanarGraph& g, TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

/// For every clique pair: nested closures or disjoint interiors. Also checks
/// each orientation (partition, no interior-exterior edge, order, InCliq) and
/// that orient_clique agrees with the flood fill.
CheckReport check_dichotomy(const PlanarGraph& g, TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

/// Parents equal brute-force covers; acyclic; roots are the maximal
/// elements and count the trees; children exist iff separating; sibling
/// interiors are disjoint; depths are path lengths.
CheckReport check_forest(const PlanarGraph& g, TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

/// Every vertex subset of order >= 4 whose induced subgraph is a bubble.
/// Exponential; throws std::invalid_argument above 10 vertices.
std::set<std::vector<VertexId>> exhaustive_bubbles(const PlanarGraph& g);

/// exhaustive_bubbles equals the vertex sets of all_bubbles.
CheckReport check_bubble_equivalence(const PlanarGraph& g,
                                     TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

/// Bubble vertex sets, member cliques and undirected tree edges agree under
/// both tie-break policies.
CheckReport check_tiebreak_independence(const PlanarGraph& g);

/// Bubbles cover V and E; separating cliques lie in two bubbles, the rest in
/// one; tree edges carry the unique shared clique; each bubble is a bubble
/// with the expected members and at most one dominating clique.
CheckReport check_bubble_cover(const PlanarGraph& g, TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

/// All checks; bubble equivalence only when the graph has at most 10 vertices.
std::vector<CheckReport> verify_all(const PlanarGraph& g, TieBreakPolicy policy = TieBreakPolicy::SmallestMinVertexIn);

}  // namespace nestplan::oracle
