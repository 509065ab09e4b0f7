#include "nestplan/pmfg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "nestplan/errors.hpp"

namespace nestplan {

namespace {

constexpr double kSymmetryTolerance = 1e-9;

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<double> to_number(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  double value = 0;
  const char* first = cell.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
  return value;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

WeightMatrix::WeightMatrix(std::size_t n, std::vector<double> values, std::vector<std::string> labels)
    : n_(n), values_(std::move(values)), labels_(std::move(labels)) {
  if (values_.size() != n * n) throw std::invalid_argument("weight matrix needs n*n values");
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  if (labels_.size() != n) throw std::invalid_argument("weight matrix label count mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(values_[i * n + j]))
        throw std::invalid_argument("weight matrix has a non-finite entry");
      else if (i != j && values_[i * n + j] != values_[j * n + i])
        throw std::invalid_argument("weight matrix is not symmetric");
}

WeightMatrix parse_weight_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_of;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (trim(line).empty()) continue;
    rows.push_back(split_row(line));
    line_of.push_back(no);
  }
  if (rows.empty()) throw ParseError(0, "empty weight matrix");

  // A header row has a non-numeric cell somewhere past the corner; a label
  // column has a non-numeric first cell in the data rows.
  const auto& first = rows.front();
  bool header_row = std::any_of(first.begin() + 1, first.end(), [](const auto& c) { return !to_number(c); });
  std::size_t data_begin = header_row ? 1 : 0;
  if (data_begin >= rows.size()) throw ParseError(line_of.front(), "header row without data");
  bool label_column = !to_number(rows[data_begin].front());

  const std::size_t n = rows.size() - data_begin;
  const std::size_t col0 = label_column ? 1 : 0;
  std::vector<double> values(n * n);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[data_begin + r];
    const std::size_t no = line_of[data_begin + r];
    if (row.size() != n + col0)
      throw ParseError(no, "expected " + std::to_string(n) + " values, got " + std::to_string(row.size() - col0) +
                               " (matrix must be square)");
    if (label_column) labels.push_back(row[0]);
    for (std::size_t c = 0; c < n; ++c) {
      auto v = to_number(row[col0 + c]);
      if (!v) throw ParseError(no, "non-numeric cell '" + row[col0 + c] + "'");
      if (!std::isfinite(*v)) throw ParseError(no, "non-finite cell '" + row[col0 + c] + "'");
      values[r * n + c] = *v;
    }
  }
  if (header_row) {
    if (first.size() != n + col0) throw ParseError(line_of.front(), "header width does not match matrix");
    labels.assign(first.begin() + static_cast<std::ptrdiff_t>(col0), first.end());
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double a = values[i * n + j], b = values[j * n + i];
      if (std::abs(a - b) > kSymmetryTolerance)
        throw ParseError(line_of[data_begin + j], "asymmetric entries at (" + std::to_string(i) + "," +
                                                      std::to_string(j) + ")");
      values[i * n + j] = values[j * n + i] = 0.5 * (a + b);
    }
  }
  return WeightMatrix(n, std::move(values), std::move(labels));
}

PlanarGraph build_pmfg(const WeightMatrix& m) {
  const std::size_t n = m.size();
  if (n < 4) throw std::invalid_argument("PMFG needs at least 4 vertices");

  std::vector<Edge> pairs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Edge& x, const Edge& y) {
    return std::tuple(-m(x.first, x.second), x) < std::tuple(-m(y.first, y.second), y);
  });

  const std::size_t target = 3 * n - 6;
  std::vector<Edge> kept;
  for (const Edge& e : pairs) {
    if (kept.size() == target) break;
    kept.push_back(e);
    if (!planarity_test(PlanarGraph::from_edges(n, kept))) kept.pop_back();
  }
  return PlanarGraph::from_edges(n, kept, m.labels());
}

}  // namespace nestplan
