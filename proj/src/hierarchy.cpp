#include "nestplan/hierarchy.hpp"

#include <algorithm>

#include "nestplan/errors.hpp"

namespace nestplan {

HierarchyForest::HierarchyForest(std::size_t order, std::vector<Clique3> cliques,
                                 std::vector<CliqueOrientation> orientation,
                                 std::vector<std::optional<std::size_t>> parent, TieBreakPolicy policy)
    : order_(order),
      cliques_(std::make_shared<const std::vector<Clique3>>(std::move(cliques))),
      orientation_(std::move(orientation)),
      closure_(closures_of(orientation_)),
      parent_(std::move(parent)),
      policy_(policy) {
  const std::size_t c = cliques_->size();
  if (orientation_.size() != c || parent_.size() != c)
    throw Error("hierarchy arrays disagree on clique count");

  children_.assign(c, {});
  for (std::size_t i = 0; i < c; ++i) {
    if (parent_[i]) {
      if (*parent_[i] >= c || *parent_[i] == i) throw InvariantViolation("bad parent index");
      children_[*parent_[i]].push_back(i);
    } else {
      roots_.push_back(i);
    }
  }

  // Depth by walking up to the root; a walk longer than c means a cycle.
  constexpr std::size_t unknown = static_cast<std::size_t>(-1);
  depth_.assign(c, unknown);
  std::vector<std::size_t> path;
  for (std::size_t i = 0; i < c; ++i) {
    path.clear();
    std::size_t cur = i;
    while (depth_[cur] == unknown && parent_[cur]) {
      path.push_back(cur);
      if (path.size() > c) throw InvariantViolation("cycle in hierarchy parents");
      cur = *parent_[cur];
    }
    if (depth_[cur] == unknown) depth_[cur] = 0;
    std::size_t d = depth_[cur];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth_[*it] = ++d;
  }
}

std::size_t HierarchyForest::max_depth() const {
  return depth_.empty() ? 0 : *std::max_element(depth_.begin(), depth_.end());
}

std::optional<std::size_t> HierarchyForest::index_of(const Clique3& k) const {
  auto it = std::lower_bound(cliques_->begin(), cliques_->end(), k);
  if (it == cliques_->end() || *it != k) return std::nullopt;
  return static_cast<std::size_t>(it - cliques_->begin());
}

const VertexSet& closure(const HierarchyForest& h, std::size_t k_index) { return h.closure(k_index); }

bool leq(const HierarchyForest& h, std::size_t i, std::size_t j) {
  return h.closure(i).is_subset_of(h.closure(j));
}

HierarchyForest build_forest(const PlanarGraph& g, const std::vector<Clique3>& cliques, TieBreakPolicy policy) {
  if (!std::is_sorted(cliques.begin(), cliques.end()))
    throw Error("cliques must be in lexicographic order");
  auto orientation = orient_all(g, cliques, policy);
  auto parent = compute_covers(orientation);
  return HierarchyForest(g.num_vertices(), cliques, std::move(orientation), std::move(parent), policy);
}

HierarchyForest analyze_hierarchy(const PlanarGraph& g, TieBreakPolicy policy) {
  auto report = validate_maximal_planar(g);
  if (!report.accepted()) throw Error("not a maximal planar graph: " + report.message);
  return build_forest(g, enumerate_3cliques(g), policy);
}

std::vector<std::size_t> maximal_elements(const HierarchyForest& h) { return h.roots(); }

std::vector<NestedCommunity> nested_communities(const HierarchyForest& h) {
  std::vector<NestedCommunity> out;
  out.reserve(h.roots().size());
  for (std::size_t r : h.roots()) {
    NestedCommunity community{r, {}};
    std::vector<std::size_t> stack{r};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      community.members.push_back(i);
      for (std::size_t ch : h.children(i)) stack.push_back(ch);
    }
    std::sort(community.members.begin(), community.members.end());
    out.push_back(std::move(community));
  }
  return out;
}

}  // namespace nestplan
