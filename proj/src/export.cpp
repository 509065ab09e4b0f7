#include "nestplan/export.hpp"

#include <sstream>

#include "json.hpp"

namespace nestplan::io {

namespace {

using nlohmann::json;

json clique_labels(const PlanarGraph& g, const Clique3& k) {
  return json::array({g.label(k.u), g.label(k.v), g.label(k.w)});
}

std::string clique_text(const PlanarGraph& g, const Clique3& k, const char* sep) {
  return g.label(k.u) + sep + g.label(k.v) + sep + g.label(k.w);
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Summary summarize(const PlanarGraph& g, const Decomposition& d) {
  Summary s;
  s.vertices = g.num_vertices();
  s.edges = g.num_edges();
  s.cliques = d.forest.size();
  for (std::size_t i = 0; i < d.forest.size(); ++i) s.separating += d.forest.separating(i) ? 1 : 0;
  s.maximal_elements = d.forest.roots().size();
  s.max_depth = d.forest.max_depth();
  s.bubbles = d.tree.size();
  return s;
}

std::string summary_text(const Summary& s) {
  std::ostringstream out;
  out << "vertices: " << s.vertices << '\n'
      << "edges: " << s.edges << '\n'
      << "cliques: " << s.cliques << '\n'
      << "separating: " << s.separating << '\n'
      << "maximal_elements: " << s.maximal_elements << '\n'
      << "max_depth: " << s.max_depth << '\n'
      << "bubbles: " << s.bubbles << '\n';
  return out.str();
}

std::string summary_json(const Summary& s) {
  json j{{"vertices", s.vertices},   {"edges", s.edges},
         {"cliques", s.cliques},     {"separating", s.separating},
         {"maximal_elements", s.maximal_elements}, {"max_depth", s.max_depth},
         {"bubbles", s.bubbles}};
  return j.dump(2) + "\n";
}

std::string write_graph(const PlanarGraph& g, Format format) {
  switch (format) {
    case Format::EdgeList:
      return to_edge_list(g);
    case Format::Json: {
      json edges = json::array();
      for (auto [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
      return json{{"vertices", g.labels()}, {"edges", edges}}.dump(2) + "\n";
    }
    case Format::Dot: {
      std::string out = "graph G {\n";
      for (const auto& l : g.labels()) out += "  " + dot_quote(l) + ";\n";
      for (auto [a, b] : g.edges()) out += "  " + dot_quote(g.label(a)) + " -- " + dot_quote(g.label(b)) + ";\n";
      return out + "}\n";
    }
  }
  return {};
}

std::string write_hierarchy(const PlanarGraph& g, const HierarchyForest& h, Format format) {
  switch (format) {
    case Format::Json: {
      json arr = json::array();
      for (std::size_t i = 0; i < h.size(); ++i) {
        auto p = h.parent(i);
        arr.push_back({{"clique", clique_labels(g, h.clique(i))},
                       {"separating", h.separating(i)},
                       {"interior_size", h.orientation(i).interior.count()},
                       {"parent", p ? clique_labels(g, h.clique(*p)) : json(nullptr)},
                       {"depth", h.depth(i)}});
      }
      return arr.dump(2) + "\n";
    }
    case Format::Dot: {
      std::string out = "digraph H {\n";
      for (std::size_t i = 0; i < h.size(); ++i)
        out += "  c" + std::to_string(i) + " [label=" + dot_quote("(" + clique_text(g, h.clique(i), ",") + ")") +
               "];\n";
      for (std::size_t i = 0; i < h.size(); ++i)
        if (auto p = h.parent(i)) out += "  c" + std::to_string(i) + " -> c" + std::to_string(*p) + ";\n";
      return out + "}\n";
    }
    case Format::EdgeList: {
      std::string out;
      for (std::size_t i = 0; i < h.size(); ++i)
        if (auto p = h.parent(i)) out += std::to_string(i) + " " + std::to_string(*p) + "\n";
      return out;
    }
  }
  return {};
}

std::string write_bubbles(const PlanarGraph& g, const Decomposition& d, Format format) {
  const auto& tree = d.tree;
  switch (format) {
    case Format::Json: {
      json bubbles = json::array();
      for (const auto& b : tree.bubbles()) {
        json verts = json::array();
        for (VertexId v : to_vector(b.vertices)) verts.push_back(g.label(v));
        json cliques = json::array();
        for (std::size_t m = 0; m < b.member_cliques.size(); ++m) cliques.push_back(clique_labels(g, b.member(m)));
        bubbles.push_back({{"id", b.id},
                           {"root_clique", b.root.is_imaginary() ? json("imaginary")
                                                                 : clique_labels(g, d.forest.clique(*b.root.clique))},
                           {"vertices", verts},
                           {"cliques", cliques}});
      }
      json edges = json::array();
      for (const auto& e : tree.edges())
        edges.push_back({{"parent", e.parent},
                         {"child", e.child},
                         {"shared_clique", clique_labels(g, d.forest.clique(e.shared_clique))}});
      return json{{"bubbles", bubbles}, {"tree", edges}}.dump(2) + "\n";
    }
    case Format::Dot: {
      std::string out = "digraph Hb {\n";
      for (const auto& b : tree.bubbles())
        out += "  b" + std::to_string(b.id) + " [label=" +
               dot_quote("B" + std::to_string(b.id) + "|" + std::to_string(b.vertices.count())) + "];\n";
      for (const auto& e : tree.edges())
        out += "  b" + std::to_string(e.parent) + " -> b" + std::to_string(e.child) +
               " [label=" + dot_quote(clique_text(g, d.forest.clique(e.shared_clique), ",")) + "];\n";
      return out + "}\n";
    }
    case Format::EdgeList: {
      std::string out;
      for (const auto& e : tree.edges()) out += std::to_string(e.parent) + " " + std::to_string(e.child) + "\n";
      return out;
    }
  }
  return {};
}

}  // namespace nestplan::io
