#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nestplan/vertex_set.hpp"

namespace nestplan {

/// A 3-clique stored as a sorted vertex triple (u < v < w).
struct Clique3 {
  VertexId u = 0;
  VertexId v = 0;
  VertexId w = 0;

  /// Sorts the three ids. Throws InvalidClique when two of them coincide.
  static Clique3 of(VertexId a, VertexId b, VertexId c);

  std::array<VertexId, 3> vertices() const { return {u, v, w}; }
  bool contains(VertexId x) const { return x == u || x == v || x == w; }

  auto operator<=>(const Clique3&) const = default;
};

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph with sorted adjacency lists and interned labels.
/// Immutable once built; every query is const.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  /// Builds a graph on vertices 0..n-1. Labels default to the decimal ids.
  /// Throws Error on self-loops, duplicate edges or out-of-range endpoints.
  static PlanarGraph from_edges(std::size_t n, const std::vector<Edge>& edges,
                                std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool has_edge(VertexId a, VertexId b) const;
  bool is_clique(const Clique3& k) const;

  /// Edges as (low, high) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  /// Subgraph induced by `vertices`; vertex i of the result is the i-th set
  /// bit of `vertices`, labels carried over.
  PlanarGraph induced(const VertexSet& vertices) const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_index_;
  std::size_t num_edges_ = 0;
};

/// Incremental construction from labelled edges (used by the parser).
class GraphBuilder {
 public:
  /// Returns the id for `label`, interning it on first sight.
  VertexId intern(std::string_view label);

  /// Throws ParseError on self-loops or duplicate edges; `line` is reported.
  void add_edge(std::string_view a, std::string_view b, std::size_t line = 0);

  PlanarGraph build() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::set<Edge> edge_set_;
};

/// Parses the edge-list text format: one edge per line, two whitespace
/// separated labels, '#' comments and blank lines ignored.
PlanarGraph parse_edge_list(std::string_view text);

/// Writes the graph back in edge-list format, one "label label" per line.
std::string to_edge_list(const PlanarGraph& g);

struct ValidationReport {
  bool is_simple = false;
  bool is_connected = false;
  bool edge_count_ok = false;
  bool is_planar = false;
  bool order_ok = false;  // n >= 4
  std::string message;

  bool accepted() const { return is_simple && is_connected && edge_count_ok && is_planar && order_ok; }
};

ValidationReport validate_maximal_planar(const PlanarGraph& g);

bool planarity_test(const PlanarGraph& g);

bool is_connected(const PlanarGraph& g);

/// Every vertex triple inducing a triangle, lexicographically ordered.
std::vector<Clique3> enumerate_3cliques(const PlanarGraph& g);

/// Connected components of G - {u,v,w}, each sorted, ordered by smallest
/// member. Throws InvalidClique if `k` is not a 3-clique of `g`.
std::vector<std::vector<VertexId>> components_after_removal(const PlanarGraph& g, const Clique3& k);

}  // namespace nestplan
