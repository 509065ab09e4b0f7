#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "nestplan/graph.hpp"

namespace nestplan {

bool planarity_test(const PlanarGraph& g) {
  // Euler bound rejects dense graphs before building the Boost copy.
  const std::size_t n = g.num_vertices();
  if (n >= 3 && g.num_edges() > 3 * n - 6) return false;

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (auto [a, b] : g.edges()) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace nestplan
