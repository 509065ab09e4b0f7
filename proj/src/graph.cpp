#include "nestplan/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "nestplan/errors.hpp"

namespace nestplan {

Clique3 Clique3::of(VertexId a, VertexId b, VertexId c) {
  std::array<VertexId, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw InvalidClique("3-clique needs three distinct vertices");
  return {t[0], t[1], t[2]};
}

PlanarGraph PlanarGraph::from_edges(std::size_t n, const std::vector<Edge>& edges,
                                    std::vector<std::string> labels) {
  PlanarGraph g;
  g.adjacency_.assign(n, {});
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw Error("label count does not match vertex count");
  g.labels_ = std::move(labels);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.label_index_.emplace(g.labels_[i], static_cast<VertexId>(i)).second)
      throw Error("duplicate vertex label '" + g.labels_[i] + "'");
  }

  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error("edge endpoint out of range");
    if (a == b) throw Error("self-loop on vertex " + g.labels_[a]);
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) throw Error("duplicate edge");
  }
  g.num_edges_ = edges.size();
  return g;
}

bool PlanarGraph::has_edge(VertexId a, VertexId b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& small = degree(a) <= degree(b) ? adjacency_[a] : adjacency_[b];
  VertexId other = degree(a) <= degree(b) ? b : a;
  return std::binary_search(small.begin(), small.end(), other);
}

bool PlanarGraph::is_clique(const Clique3& k) const {
  return k.u != k.v && k.v != k.w && k.u != k.w && has_edge(k.u, k.v) && has_edge(k.v, k.w) &&
         has_edge(k.u, k.w);
}

std::vector<Edge> PlanarGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (VertexId a = 0; a < adjacency_.size(); ++a)
    for (VertexId b : adjacency_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

std::optional<VertexId> PlanarGraph::find(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

PlanarGraph PlanarGraph::induced(const VertexSet& vertices) const {
  std::vector<VertexId> local(num_vertices(), 0);
  std::vector<std::string> labels;
  VertexId next = 0;
  for (auto v = vertices.find_first(); v != VertexSet::npos; v = vertices.find_next(v)) {
    local[v] = next++;
    labels.push_back(labels_[v]);
  }
  std::vector<Edge> sub;
  for (auto [a, b] : edges())
    if (vertices.test(a) && vertices.test(b)) sub.emplace_back(local[a], local[b]);
  return from_edges(next, sub, std::move(labels));
}

VertexId GraphBuilder::intern(std::string_view label) {
  auto [it, inserted] = index_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b, std::size_t line) {
  if (a == b) throw ParseError(line, "self-loop on vertex '" + std::string(a) + "'");
  VertexId x = intern(a);
  VertexId y = intern(b);
  Edge e = std::minmax(x, y);
  if (!edge_set_.insert(e).second)
    throw ParseError(line, "duplicate edge '" + std::string(a) + "' - '" + std::string(b) + "'");
  edges_.push_back(e);
}

PlanarGraph GraphBuilder::build() const { return PlanarGraph::from_edges(labels_.size(), edges_, labels_); }

PlanarGraph parse_edge_list(std::string_view text) {
  GraphBuilder builder;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a) || a.front() == '#') continue;
    if (!(fields >> b)) throw ParseError(line_no, "expected two vertex labels");
    if (fields >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    builder.add_edge(a, b, line_no);
  }
  return builder.build();
}

std::string to_edge_list(const PlanarGraph& g) {
  std::string out;
  for (auto [a, b] : g.edges()) {
    out += g.label(a);
    out += ' ';
    out += g.label(b);
    out += '\n';
  }
  return out;
}

bool is_connected(const PlanarGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n;
}

ValidationReport validate_maximal_planar(const PlanarGraph& g) {
  ValidationReport r;
  const std::size_t n = g.num_vertices();

  r.is_simple = true;
  for (VertexId v = 0; v < n && r.is_simple; ++v) {
    const auto& adj = g.neighbors(v);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] == v || (i > 0 && adj[i] == adj[i - 1]) || !g.has_edge(adj[i], v)) {
        r.is_simple = false;
        break;
      }
    }
  }
  r.is_connected = is_connected(g);
  r.order_ok = n >= 4;
  r.edge_count_ok = n >= 3 && g.num_edges() == 3 * n - 6;
  r.is_planar = r.is_simple && planarity_test(g);

  std::vector<std::string> problems;
  if (!r.order_ok) problems.push_back("needs at least 4 vertices, got " + std::to_string(n));
  if (!r.is_simple) problems.push_back("graph is not simple");
  if (!r.is_connected) problems.push_back("graph is not connected");
  if (!r.edge_count_ok)
    problems.push_back("edge count " + std::to_string(g.num_edges()) + " != 3n-6" +
                       (n >= 3 ? " = " + std::to_string(3 * n - 6) : ""));
  if (!r.is_planar) problems.push_back("graph is not planar");
  if (problems.empty()) {
    r.message = "maximal planar";
  } else {
    for (std::size_t i = 0; i < problems.size(); ++i) r.message += (i ? "; " : "") + problems[i];
  }
  return r;
}

std::vector<Clique3> enumerate_3cliques(const PlanarGraph& g) {
  // For each edge (u,v) with u < v, the common neighbours w > v close a
  // triangle; scanning u, v, w upwards gives lexicographic order.
  std::vector<Clique3> out;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const auto& nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v <= u) continue;
      const auto& nv = g.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          out.push_back({u, v, *a});
          ++a;
          ++b;
        }
      }
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> components_after_removal(const PlanarGraph& g, const Clique3& k) {
  if (!g.is_clique(k)) throw InvalidClique("not a 3-clique of the graph");
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  for (VertexId x : k.vertices()) seen[x] = 1;

  std::vector<std::vector<VertexId>> comps;
  std::queue<VertexId> q;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    auto& comp = comps.emplace_back();
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        q.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

}  // namespace nestplan
