#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nestplan/graph.hpp"

namespace nestplan {

/// Dense symmetric similarity matrix; the diagonal is ignored.
class WeightMatrix {
 public:
  WeightMatrix(std::size_t n, std::vector<double> values, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
  std::vector<std::string> labels_;
};

/// Square numeric CSV with an optional header row and/or label column.
/// Entries differing from their transpose by at most 1e-9 are averaged;
/// larger asymmetry, ragged rows, non-numeric or non-finite cells throw
/// ParseError.
WeightMatrix parse_weight_csv(std::string_view text);

/// Planar maximally filtered graph: pairs are visited by descending weight
/// (ties by index pair) and kept when the graph stays planar, until 3n-6
/// edges are placed.
PlanarGraph build_pmfg(const WeightMatrix& m);

}  // namespace nestplan
