#include "nestplan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "nestplan/bubbles.hpp"

namespace nestplan::oracle {

namespace {

std::string name_of(const Clique3& k) {
  return "(" + std::to_string(k.u) + "," + std::to_string(k.v) + "," + std::to_string(k.w) + ")";
}

/// Components of the subgraph on `alive` vertices, by depth-first flood fill.
std::vector<std::vector<VertexId>> flood_components(const PlanarGraph& g, std::vector<char> alive) {
  std::vector<std::vector<VertexId>> comps;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (!alive[s]) continue;
    auto& comp = comps.emplace_back();
    std::vector<VertexId> stack{s};
    alive[s] = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v))
        if (alive[w]) {
          alive[w] = 0;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

std::vector<Clique3> triple_scan(const PlanarGraph& g) {
  std::vector<Clique3> out;
  const auto n = static_cast<VertexId>(g.num_vertices());
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (g.has_edge(a, b))
        for (VertexId c = b + 1; c < n; ++c)
          if (g.has_edge(a, c) && g.has_edge(b, c)) out.push_back({a, b, c});
  return out;
}

/// Orientation and closures re-derived from first principles.
struct Ground {
  std::vector<Clique3> cliques;
  std::vector<VertexSet> interior;
  std::vector<VertexSet> exterior;
  std::vector<VertexSet> closure;
  std::vector<char> separating;
  std::vector<std::string> errors;

  std::size_t size() const { return cliques.size(); }
  bool strictly_below(std::size_t i, std::size_t j) const {
    return i != j && closure[i].is_subset_of(closure[j]) && closure[i] != closure[j];
  }
};

Ground ground_truth(const PlanarGraph& g, TieBreakPolicy policy) {
  Ground gt;
  const std::size_t n = g.num_vertices();
  gt.cliques = triple_scan(g);
  for (const auto& k : gt.cliques) {
    std::vector<char> alive(n, 1);
    for (VertexId x : k.vertices()) alive[x] = 0;
    auto comps = flood_components(g, alive);
    if (comps.size() > 2) gt.errors.push_back(name_of(k) + " leaves " + std::to_string(comps.size()) + " components");

    VertexSet in(n), out(n);
    if (comps.size() == 1) {
      out = make_vertex_set(n, comps[0]);
    } else if (comps.size() >= 2) {
      auto min_of = [](const auto& c) { return *std::min_element(c.begin(), c.end()); };
      std::size_t small = 0;
      if (comps[0].size() != comps[1].size()) {
        small = comps[0].size() < comps[1].size() ? 0 : 1;
      } else {
        bool first_has_min = min_of(comps[0]) < min_of(comps[1]);
        bool want_min = policy == TieBreakPolicy::SmallestMinVertexIn;
        small = first_has_min == want_min ? 0 : 1;
      }
      in = make_vertex_set(n, comps[small]);
      out = make_vertex_set(n, comps[1 - small]);
    }
    VertexSet cl = in;
    for (VertexId x : k.vertices()) cl.set(x);
    gt.separating.push_back(in.any() && out.any());
    gt.interior.push_back(std::move(in));
    gt.exterior.push_back(std::move(out));
    gt.closure.push_back(std::move(cl));
  }
  return gt;
}

/// Bubble predicate from scratch: connected, 3m-6 edges, planar, and no
/// triangle of the induced subgraph disconnects it.
bool bubble_predicate(const PlanarGraph& g, const std::vector<VertexId>& members) {
  const std::size_t m = members.size();
  if (m < 3) return false;
  VertexSet in = make_vertex_set(g.num_vertices(), members);
  std::size_t edges = 0;
  for (VertexId a : members)
    for (VertexId b : g.neighbors(a))
      if (a < b && in.test(b)) ++edges;
  if (edges != 3 * m - 6) return false;

  std::vector<char> alive(g.num_vertices(), 0);
  for (VertexId v : members) alive[v] = 1;
  if (flood_components(g, alive).size() != 1) return false;

  PlanarGraph sub = g.induced(in);
  if (!planarity_test(sub)) return false;
  for (const auto& k : triple_scan(sub)) {
    std::vector<char> rest(sub.num_vertices(), 1);
    for (VertexId x : k.vertices()) rest[x] = 0;
    if (flood_components(sub, rest).size() > 1) return false;
  }
  return true;
}

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  void fail(std::string msg) {
    if (report_.violations.size() < kMaxMessages) report_.violations.push_back(std::move(msg));
    else if (report_.violations.size() == kMaxMessages) report_.violations.push_back("... further violations omitted");
  }
  void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
  void absorb(const Ground& gt) {
    for (const auto& e : gt.errors) fail(e);
  }
  CheckReport done() { return std::move(report_); }

  /// Runs `body` only on a maximal planar input; anything else is reported
  /// as a single violation.
  template <class F>
  CheckReport guarded(const PlanarGraph& g, F&& body) {
    try {
      auto report = validate_maximal_planar(g);
      if (!report.accepted()) {
        fail("input is not maximal planar: " + report.message);
        return done();
      }
      body(*this);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    return done();
  }

 private:
  static constexpr std::size_t kMaxMessages = 20;
  CheckReport report_;
};

bool same_cliques(Recorder& rec, const Ground& gt, const HierarchyForest& h) {
  if (gt.cliques == h.cliques()) return true;
  rec.fail("clique list differs from the triple scan (" + std::to_string(h.size()) + " vs " +
           std::to_string(gt.size()) + ")");
  return false;
}

}  // namespace

CheckReport check_poset_axioms(const PlanarGraph& g, TieBreakPolicy policy) {
  return Recorder("poset_axioms").guarded(g, [&](Recorder& rec) {
    Ground gt = ground_truth(g, policy);
    rec.absorb(gt);
    const std::size_t c = gt.size();
    auto le = [&](std::size_t i, std::size_t j) { return gt.closure[i].is_subset_of(gt.closure[j]); };
    for (std::size_t i = 0; i < c; ++i) rec.expect(le(i, i), "reflexivity fails at " + name_of(gt.cliques[i]));
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = i + 1; j < c; ++j)
        rec.expect(!(le(i, j) && le(j, i)),
                   "antisymmetry fails for " + name_of(gt.cliques[i]) + " " + name_of(gt.cliques[j]));
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (!le(i, j)) continue;
        for (std::size_t m = 0; m < c; ++m)
          if (le(j, m) && !le(i, m))
            rec.fail("transitivity fails for " + name_of(gt.cliques[i]) + " " + name_of(gt.cliques[j]) + " " +
                     name_of(gt.cliques[m]));
      }

    HierarchyForest h = build_forest(g, enumerate_3cliques(g), policy);
    if (!same_cliques(rec, gt, h)) return;
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j)
        rec.expect(leq(h, i, j) == le(i, j),
                   "leq disagrees with brute force on " + name_of(gt.cliques[i]) + " " + name_of(gt.cliques[j]));
  });
}

CheckReport check_dichotomy(const PlanarGraph& g, TieBreakPolicy policy) {
  return Recorder("dichotomy").guarded(g, [&](Recorder& rec) {
    Ground gt = ground_truth(g, policy);
    rec.absorb(gt);
    const std::size_t c = gt.size();
    const std::size_t n = g.num_vertices();

    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = i + 1; j < c; ++j) {
        bool nested = gt.closure[i].is_subset_of(gt.closure[j]) || gt.closure[j].is_subset_of(gt.closure[i]);
        rec.expect(nested || !gt.interior[i].intersects(gt.interior[j]),
                   "neither nested nor interior-disjoint: " + name_of(gt.cliques[i]) + " " +
                       name_of(gt.cliques[j]));
      }

    for (std::size_t i = 0; i < c; ++i) {
      const auto& k = gt.cliques[i];
      VertexSet all = gt.closure[i] | gt.exterior[i];
      rec.expect(all.count() == n && !gt.interior[i].intersects(gt.exterior[i]),
                 "interior/exterior do not partition V - " + name_of(k));
      rec.expect(gt.interior[i].count() <= gt.exterior[i].count(), "interior larger than exterior at " + name_of(k));
      for (auto v = gt.interior[i].find_first(); v != VertexSet::npos; v = gt.interior[i].find_next(v)) {
        for (VertexId w : g.neighbors(static_cast<VertexId>(v))) {
          rec.expect(!gt.exterior[i].test(w), "edge between interior and exterior of " + name_of(k));
          // InCliq: any triangle through an interior vertex stays in the closure.
          for (VertexId x : g.neighbors(w))
            if (g.has_edge(static_cast<VertexId>(v), x))
              rec.expect(gt.closure[i].test(w) && gt.closure[i].test(x),
                         "triangle through interior vertex leaves closure of " + name_of(k));
        }
      }
    }

    for (std::size_t i = 0; i < c; ++i) {
      auto o = orient_clique(g, gt.cliques[i], policy);
      rec.expect(o.separating == static_cast<bool>(gt.separating[i]) && o.interior == gt.interior[i] &&
                     o.exterior == gt.exterior[i],
                 "orient_clique disagrees with flood fill at " + name_of(gt.cliques[i]));
    }
  });
}

CheckReport check_forest(const PlanarGraph& g, TieBreakPolicy policy) {
  return Recorder("forest").guarded(g, [&](Recorder& rec) {
    Ground gt = ground_truth(g, policy);
    rec.absorb(gt);
    HierarchyForest h = build_forest(g, enumerate_3cliques(g), policy);
    if (!same_cliques(rec, gt, h)) return;
    const std::size_t c = gt.size();

    for (std::size_t j = 0; j < c; ++j) {
      // Covers straight from the definition: above j with nothing in between.
      std::vector<std::size_t> covers;
      for (std::size_t i = 0; i < c; ++i) {
        if (!gt.strictly_below(j, i)) continue;
        bool between = false;
        for (std::size_t z = 0; z < c && !between; ++z) between = gt.strictly_below(j, z) && gt.strictly_below(z, i);
        if (!between) covers.push_back(i);
      }
      const auto& k = gt.cliques[j];
      rec.expect(covers.size() <= 1, name_of(k) + " has " + std::to_string(covers.size()) + " covers");
      std::optional<std::size_t> expected;
      if (!covers.empty()) expected = covers.front();
      rec.expect(h.parent(j) == expected, "parent of " + name_of(k) + " is not its cover");

      for (std::size_t ch : h.children(j)) rec.expect(h.parent(ch) == j, "children list inconsistent at " + name_of(k));
      rec.expect(!h.children(j).empty() == static_cast<bool>(gt.separating[j]),
                 "children present iff separating fails at " + name_of(k));

      const auto& sib = h.children(j);
      for (std::size_t a = 0; a < sib.size(); ++a)
        for (std::size_t b = a + 1; b < sib.size(); ++b)
          rec.expect(!gt.interior[sib[a]].intersects(gt.interior[sib[b]]),
                     "sibling interiors overlap under " + name_of(k));

      std::size_t steps = 0;
      std::size_t cur = j;
      while (h.parent(cur) && steps <= c) {
        cur = *h.parent(cur);
        ++steps;
      }
      rec.expect(steps <= c, "cycle through " + name_of(k));
      rec.expect(h.depth(j) == steps, "depth of " + name_of(k) + " is not its path length");
    }

    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < c; ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < c && !dominated; ++j) dominated = gt.strictly_below(i, j);
      if (!dominated) maximal.push_back(i);
    }
    rec.expect(maximal == h.roots(), "roots differ from maximal elements");
    rec.expect(!maximal.empty(), "no maximal element");

    // Tree count by union-find over parent links.
    std::vector<std::size_t> rep(c);
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](std::size_t x) {
      while (rep[x] != x) x = rep[x] = rep[rep[x]];
      return x;
    };
    for (std::size_t i = 0; i < c; ++i)
      if (h.parent(i)) rep[find(i)] = find(*h.parent(i));
    std::size_t trees = 0;
    for (std::size_t i = 0; i < c; ++i) trees += find(i) == i ? 1 : 0;
    rec.expect(trees == maximal.size(), "tree count " + std::to_string(trees) + " != maximal elements " +
                                            std::to_string(maximal.size()));
  });
}

std::set<std::vector<VertexId>> exhaustive_bubbles(const PlanarGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 10) throw std::invalid_argument("exhaustive bubble scan is limited to 10 vertices");
  std::set<std::vector<VertexId>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    if (bubble_predicate(g, members)) out.insert(std::move(members));
  }
  return out;
}

CheckReport check_bubble_equivalence(const PlanarGraph& g, TieBreakPolicy policy) {
  return Recorder("bubble_equivalence").guarded(g, [&](Recorder& rec) {
    auto expected = exhaustive_bubbles(g);
    Decomposition d = decompose(g, policy);
    std::set<std::vector<VertexId>> got;
    for (const auto& b : d.tree.bubbles()) got.insert(to_vector(b.vertices));
    rec.expect(got.size() == d.tree.size(), "two bubbles share a vertex set");
    for (const auto& s : expected)
      if (!got.count(s)) rec.fail("exhaustive scan found a bubble the decomposition missed (" + std::to_string(s.size()) + " vertices)");
    for (const auto& s : got)
      if (!expected.count(s)) rec.fail("decomposition bubble rejected by the exhaustive scan (" + std::to_string(s.size()) + " vertices)");
  });
}

namespace {

using BubbleKey = std::pair<std::vector<VertexId>, std::vector<Clique3>>;
using EdgeKey = std::tuple<std::vector<VertexId>, std::vector<VertexId>, Clique3>;

std::pair<std::set<BubbleKey>, std::set<EdgeKey>> shape_of(const Decomposition& d) {
  std::set<BubbleKey> bubbles;
  for (const auto& b : d.tree.bubbles()) {
    std::vector<Clique3> members;
    for (std::size_t m = 0; m < b.member_cliques.size(); ++m) members.push_back(b.member(m));
    std::sort(members.begin(), members.end());
    bubbles.emplace(to_vector(b.vertices), std::move(members));
  }
  std::set<EdgeKey> edges;
  for (const auto& e : d.tree.edges()) {
    auto x = to_vector(d.tree.bubble(e.parent).vertices);
    auto y = to_vector(d.tree.bubble(e.child).vertices);
    if (y < x) std::swap(x, y);
    edges.emplace(std::move(x), std::move(y), d.forest.clique(e.shared_clique));
  }
  return {bubbles, edges};
}

}  // namespace

CheckReport check_tiebreak_independence(const PlanarGraph& g) {
  return Recorder("tiebreak_independence").guarded(g, [&](Recorder& rec) {
    auto a = shape_of(decompose(g, TieBreakPolicy::SmallestMinVertexIn));
    auto b = shape_of(decompose(g, TieBreakPolicy::LargestMinVertexIn));
    rec.expect(a.first == b.first, "bubble sets differ between tie-break policies");
    rec.expect(a.second == b.second, "undirected bubble-tree edges differ between tie-break policies");
  });
}

CheckReport check_bubble_cover(const PlanarGraph& g, TieBreakPolicy policy) {
  return Recorder("bubble_cover").guarded(g, [&](Recorder& rec) {
    Ground gt = ground_truth(g, policy);
    rec.absorb(gt);
    Decomposition d = decompose(g, policy);
    if (!same_cliques(rec, gt, d.forest)) return;
    const auto& tree = d.tree;
    const std::size_t n = g.num_vertices();
    const std::size_t c = gt.size();

    std::size_t separating = std::count(gt.separating.begin(), gt.separating.end(), 1);
    rec.expect(tree.size() == separating + 1, "bubble count " + std::to_string(tree.size()) +
                                                  " != separating cliques + 1 = " + std::to_string(separating + 1));
    rec.expect(tree.edges().size() == separating, "bubble tree edge count != separating clique count");

    VertexSet covered(n);
    std::set<Edge> covered_edges;
    std::vector<std::size_t> holders(c, 0);
    for (const auto& b : tree.bubbles()) {
      covered |= b.vertices;
      auto verts = to_vector(b.vertices);
      rec.expect(bubble_predicate(g, verts), "bubble " + std::to_string(b.id) + " fails the bubble predicate");
      rec.expect(b.member_cliques.size() >= 2, "bubble " + std::to_string(b.id) + " has fewer than 2 cliques");

      // Members must be exactly the triangles of the induced subgraph.
      std::vector<std::size_t> induced;
      for (std::size_t i = 0; i < c; ++i) {
        const auto& k = gt.cliques[i];
        if (b.vertices.test(k.u) && b.vertices.test(k.v) && b.vertices.test(k.w)) induced.push_back(i);
      }
      rec.expect(induced == b.member_cliques, "bubble " + std::to_string(b.id) + " members != induced triangles");

      for (std::size_t m : b.member_cliques) {
        ++holders[m];
        const auto& k = gt.cliques[m];
        covered_edges.insert({k.u, k.v});
        covered_edges.insert({k.v, k.w});
        covered_edges.insert({k.u, k.w});
      }

      // At most one member dominates all the others, and it is the root.
      std::size_t dominating = 0;
      for (std::size_t x : b.member_cliques) {
        bool all = true;
        for (std::size_t y : b.member_cliques)
          if (y != x && !gt.strictly_below(y, x)) all = false;
        if (all) {
          ++dominating;
          rec.expect(b.root.clique == x, "dominating clique of bubble " + std::to_string(b.id) + " is not its root");
        }
      }
      rec.expect(dominating <= 1, "bubble " + std::to_string(b.id) + " has several dominating cliques");
      if (b.root.is_imaginary()) {
        for (std::size_t x : b.member_cliques)
          for (std::size_t i = 0; i < c; ++i)
            rec.expect(!gt.strictly_below(x, i), "maximal bubble holds a non-maximal clique");
      }
    }
    rec.expect(covered.count() == n, "bubbles do not cover every vertex");
    rec.expect(covered_edges.size() == g.num_edges(), "bubbles do not cover every edge");

    for (std::size_t i = 0; i < c; ++i) {
      std::size_t expected = gt.separating[i] ? 2 : 1;
      rec.expect(holders[i] == expected, name_of(gt.cliques[i]) + " lies in " + std::to_string(holders[i]) +
                                             " bubbles, expected " + std::to_string(expected));
    }

    for (const auto& e : tree.edges()) {
      const auto& p = tree.bubble(e.parent);
      const auto& ch = tree.bubble(e.child);
      std::vector<std::size_t> common;
      std::set_intersection(p.member_cliques.begin(), p.member_cliques.end(), ch.member_cliques.begin(),
                            ch.member_cliques.end(), std::back_inserter(common));
      rec.expect(common.size() == 1 && common.front() == e.shared_clique,
                 "tree edge label is not the unique shared clique");
      rec.expect(gt.separating[e.shared_clique], "tree edge label is not a separating clique");
      rec.expect(shared_clique(p, ch) == gt.cliques[e.shared_clique], "shared_clique disagrees with intersection");
    }
    // Non-adjacent bubble pairs share nothing.
    for (std::size_t x = 0; x < tree.size(); ++x)
      for (std::size_t y = x + 1; y < tree.size(); ++y) {
        bool adjacent = tree.parent(x) == y || tree.parent(y) == x;
        if (!adjacent)
          rec.expect(!shared_clique(tree.bubble(x), tree.bubble(y)), "non-adjacent bubbles share a clique");
      }
  });
}

std::vector<CheckReport> verify_all(const PlanarGraph& g, TieBreakPolicy policy) {
  std::vector<CheckReport> out{check_poset_axioms(g, policy), check_dichotomy(g, policy), check_forest(g, policy),
                               check_bubble_cover(g, policy), check_tiebreak_independence(g)};
  if (g.num_vertices() <= 10) out.push_back(check_bubble_equivalence(g, policy));
  return out;
}

}  // namespace nestplan::oracle
