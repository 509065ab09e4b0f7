#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace nestplan {

using VertexId = std::uint32_t;

/// Fixed-universe vertex set; bit v is set when vertex v is a member.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline VertexSet make_vertex_set(std::size_t n, std::span<const VertexId> members = {}) {
  VertexSet s(n);
  for (VertexId v : members) s.set(v);
  return s;
}

inline std::vector<VertexId> to_vector(const VertexSet& s) {
  std::vector<VertexId> out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
    out.push_back(static_cast<VertexId>(v));
  return out;
}

}  // namespace nestplan
