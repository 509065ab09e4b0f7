#include "nestplan/bubbles.hpp"

#include <algorithm>
#include <cstdint>

#include "nestplan/errors.hpp"
#include "omp_guard.hpp"

namespace nestplan {

namespace {

Bubble assemble(const HierarchyForest& h, std::size_t id, RootCliqueRef root, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  Bubble b{id, root, std::move(members), VertexSet(h.graph_order()), h.clique_table()};
  for (std::size_t m : b.member_cliques)
    for (VertexId v : h.clique(m).vertices()) b.vertices.set(v);
  return b;
}

// Bubble ids follow separating cliques in index order, after b_rho = 0.
std::size_t bubble_id_of(const HierarchyForest& h, std::size_t k_index) {
  std::size_t id = 1;
  for (std::size_t i = 0; i < k_index; ++i) id += h.separating(i) ? 1 : 0;
  return id;
}

Bubble from_clique(const HierarchyForest& h, std::size_t k_index, std::size_t id) {
  std::vector<std::size_t> members = h.children(k_index);
  members.push_back(k_index);
  return assemble(h, id, RootCliqueRef::real(k_index), std::move(members));
}

}  // namespace

Bubble bubble_from_clique(const HierarchyForest& h, std::size_t k_index) {
  if (k_index >= h.size()) throw Error("clique index out of range");
  if (h.children(k_index).empty()) throw Error("3-clique has no incoming neighbours; not a bubble root");
  return from_clique(h, k_index, bubble_id_of(h, k_index));
}

Bubble maximal_bubble(const HierarchyForest& h) {
  auto roots = maximal_elements(h);
  if (roots.size() < 2) throw Error("maximal bubble would consist of a single 3-clique");
  return assemble(h, 0, RootCliqueRef::imaginary(), std::move(roots));
}

std::vector<Bubble> all_bubbles(const HierarchyForest& h) {
  std::vector<Bubble> out{maximal_bubble(h)};
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h.children(i).empty()) out.push_back(from_clique(h, i, out.size()));
  return out;
}

std::vector<Bubble> all_bubbles_parallel(const HierarchyForest& h) {
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h.children(i).empty()) roots.push_back(i);

  std::vector<Bubble> out(roots.size() + 1);
  out[0] = maximal_bubble(h);
  const auto count = static_cast<std::int64_t>(roots.size());
  detail::ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t r = 0; r < count; ++r) {
    slot.run([&] { out[r + 1] = from_clique(h, roots[r], static_cast<std::size_t>(r + 1)); });
  }
  slot.rethrow();
  return out;
}

BubbleTree::BubbleTree(std::vector<Bubble> bubbles, std::vector<std::optional<std::size_t>> parent,
                       std::vector<std::optional<std::size_t>> edge_label)
    : bubbles_(std::move(bubbles)), parent_(std::move(parent)), edge_label_(std::move(edge_label)) {
  const std::size_t nb = bubbles_.size();
  if (parent_.size() != nb || edge_label_.size() != nb) throw Error("bubble tree arrays disagree on size");
  children_.assign(nb, {});
  for (std::size_t b = 0; b < nb; ++b)
    if (parent_[b]) children_[*parent_[b]].push_back(b);

  depth_.assign(nb, 0);
  std::vector<std::size_t> order{0};
  std::vector<char> seen(nb, 0);
  if (nb > 0) seen[0] = 1;
  for (std::size_t at = 0; at < order.size(); ++at) {
    for (std::size_t ch : children_[order[at]]) {
      if (seen[ch]) throw InvariantViolation("bubble tree has a cycle");
      seen[ch] = 1;
      depth_[ch] = depth_[order[at]] + 1;
      order.push_back(ch);
    }
  }
  if (order.size() != nb) throw InvariantViolation("bubble tree is not connected to the maximal bubble");
}

std::vector<BubbleEdge> BubbleTree::edges() const {
  std::vector<BubbleEdge> out;
  for (std::size_t b = 0; b < bubbles_.size(); ++b)
    if (parent_[b]) out.push_back({*parent_[b], b, *edge_label_[b]});
  return out;
}

BubbleTree build_bubble_tree(std::vector<Bubble> bubbles, const HierarchyForest& h) {
  const std::size_t nb = bubbles.size();
  if (nb == 0 || !bubbles[0].root.is_imaginary()) throw Error("first bubble must be the maximal bubble");

  std::vector<std::vector<std::size_t>> holders(h.size());
  for (std::size_t b = 0; b < nb; ++b) {
    if (bubbles[b].id != b) throw Error("bubble ids must match their position");
    if (bubbles[b].clique_table != h.clique_table()) throw Error("bubble belongs to a different analysis");
    for (std::size_t m : bubbles[b].member_cliques) holders[m].push_back(b);
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    const std::size_t expected = h.separating(i) ? 2 : 1;
    if (holders[i].size() != expected)
      throw InvariantViolation("3-clique " + std::to_string(i) + " lies in " + std::to_string(holders[i].size()) +
                               " bubbles, expected " + std::to_string(expected));
  }

  std::vector<std::optional<std::size_t>> parent(nb);
  std::vector<std::optional<std::size_t>> label(nb);
  for (std::size_t b = 1; b < nb; ++b) {
    std::size_t k = *bubbles[b].root.clique;
    const auto& hk = holders[k];
    std::size_t other = hk[0] == b ? hk[1] : hk[0];
    if (hk[0] != b && hk[1] != b) throw InvariantViolation("root 3-clique missing from its own bubble");
    parent[b] = other;
    label[b] = k;
  }
  return BubbleTree(std::move(bubbles), std::move(parent), std::move(label));
}

std::optional<Clique3> shared_clique(const Bubble& b1, const Bubble& b2) {
  if (b1.clique_table != b2.clique_table) throw Error("bubbles come from different analyses");
  if (b1.id == b2.id) return std::nullopt;
  std::vector<std::size_t> common;
  std::set_intersection(b1.member_cliques.begin(), b1.member_cliques.end(), b2.member_cliques.begin(),
                        b2.member_cliques.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  if (common.size() > 1) throw InvariantViolation("bubbles share more than one 3-clique");
  return (*b1.clique_table)[common.front()];
}

bool is_bubble(const PlanarGraph& g, const VertexSet& vertices) {
  const std::size_t m = vertices.count();
  if (m < 3) return false;
  PlanarGraph sub = g.induced(vertices);
  if (sub.num_edges() != 3 * m - 6 || !is_connected(sub) || !planarity_test(sub)) return false;
  for (const auto& k : enumerate_3cliques(sub))
    if (components_after_removal(sub, k).size() > 1) return false;
  return true;
}

Decomposition decompose(const PlanarGraph& g, TieBreakPolicy policy) {
  HierarchyForest forest = analyze_hierarchy(g, policy);
  BubbleTree tree = build_bubble_tree(all_bubbles(forest), forest);
  return {std::move(forest), std::move(tree)};
}

}  // namespace nestplan
