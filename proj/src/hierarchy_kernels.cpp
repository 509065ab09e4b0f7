// Per-clique kernels behind build_forest: orientation and cover search.
// Each has an OpenMP version and a serial reference kept for tests and the
// benchmark.

#include <algorithm>
#include <cstdint>

#include "nestplan/errors.hpp"
#include "nestplan/hierarchy.hpp"
#include "omp_guard.hpp"

namespace nestplan {

CliqueOrientation orient_clique(const PlanarGraph& g, const Clique3& k, TieBreakPolicy policy) {
  auto comps = components_after_removal(g, k);
  const std::size_t n = g.num_vertices();
  CliqueOrientation o{k, false, VertexSet(n), VertexSet(n)};

  if (comps.size() > 2)
    throw InvariantViolation("removing a 3-clique left " + std::to_string(comps.size()) +
                             " components; graph is not maximal planar");
  if (comps.size() == 1) {
    o.exterior = make_vertex_set(n, comps[0]);
  } else if (comps.size() == 2) {
    // comps are ordered by smallest member, so comps[0] holds the smaller id.
    std::size_t in = comps[0].size() < comps[1].size()   ? 0
                     : comps[1].size() < comps[0].size() ? 1
                     : policy == TieBreakPolicy::SmallestMinVertexIn ? 0
                                                                     : 1;
    o.separating = true;
    o.interior = make_vertex_set(n, comps[in]);
    o.exterior = make_vertex_set(n, comps[1 - in]);
  }
  return o;
}

std::vector<CliqueOrientation> orient_all_serial(const PlanarGraph& g, const std::vector<Clique3>& cliques,
                                                 TieBreakPolicy policy) {
  std::vector<CliqueOrientation> out;
  out.reserve(cliques.size());
  for (const auto& k : cliques) out.push_back(orient_clique(g, k, policy));
  return out;
}

std::vector<CliqueOrientation> orient_all(const PlanarGraph& g, const std::vector<Clique3>& cliques,
                                          TieBreakPolicy policy) {
  std::vector<CliqueOrientation> out(cliques.size());
  const auto count = static_cast<std::int64_t>(cliques.size());
  detail::ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    slot.run([&] { out[i] = orient_clique(g, cliques[i], policy); });
  }
  slot.rethrow();
  return out;
}

std::vector<VertexSet> closures_of(const std::vector<CliqueOrientation>& orientation) {
  std::vector<VertexSet> out;
  out.reserve(orientation.size());
  for (const auto& o : orientation) {
    VertexSet c = o.interior;
    for (VertexId v : o.clique.vertices()) c.set(v);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

/// Tracks the smallest enclosing closure seen so far for one child.
struct CoverSearch {
  std::size_t child;
  std::optional<std::size_t> best;
  std::size_t best_size = 0;
  bool tied = false;

  void offer(std::size_t i, const std::vector<VertexSet>& closure, const std::vector<std::size_t>& size) {
    if (i == child || best == i) return;
    if (!closure[child].is_subset_of(closure[i])) return;
    if (size[i] == size[child])
      throw InvariantViolation("two distinct 3-cliques share a closure (antisymmetry fails)");
    if (!best || size[i] < best_size) {
      best = i;
      best_size = size[i];
      tied = false;
    } else if (size[i] == best_size) {
      tied = true;
    }
  }

  std::optional<std::size_t> result() const {
    if (tied) throw InvariantViolation("3-clique has two incomparable minimal covers");
    return best;
  }
};

std::vector<std::size_t> sizes_of(const std::vector<VertexSet>& closure) {
  std::vector<std::size_t> size(closure.size());
  for (std::size_t i = 0; i < closure.size(); ++i) size[i] = closure[i].count();
  return size;
}

}  // namespace

std::vector<std::optional<std::size_t>> compute_covers_serial(
    const std::vector<CliqueOrientation>& orientation) {
  const auto closure = closures_of(orientation);
  const auto size = sizes_of(closure);
  std::vector<std::optional<std::size_t>> parent(orientation.size());
  for (std::size_t j = 0; j < orientation.size(); ++j) {
    CoverSearch search{j, std::nullopt};
    for (std::size_t i = 0; i < orientation.size(); ++i) search.offer(i, closure, size);
    parent[j] = search.result();
  }
  return parent;
}

std::vector<std::optional<std::size_t>> compute_covers(const std::vector<CliqueOrientation>& orientation) {
  const std::size_t c = orientation.size();
  std::vector<std::optional<std::size_t>> parent(c);
  if (c == 0) return parent;

  const auto closure = closures_of(orientation);
  const auto size = sizes_of(closure);

  // A strictly larger closure holding k_j must contain some vertex of k_j in
  // its interior, so only those cliques are candidates.
  std::vector<std::vector<std::size_t>> enclosing(orientation.front().interior.size());
  for (std::size_t i = 0; i < c; ++i) {
    const auto& in = orientation[i].interior;
    for (auto v = in.find_first(); v != VertexSet::npos; v = in.find_next(v)) enclosing[v].push_back(i);
  }

  const auto count = static_cast<std::int64_t>(c);
  detail::ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < count; ++j) {
    slot.run([&] {
      CoverSearch search{static_cast<std::size_t>(j), std::nullopt};
      for (VertexId v : orientation[j].clique.vertices())
        for (std::size_t i : enclosing[v]) search.offer(i, closure, size);
      parent[j] = search.result();
    });
  }
  slot.rethrow();
  return parent;
}

}  // namespace nestplan
