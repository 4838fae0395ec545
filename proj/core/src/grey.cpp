#include "hriot/grey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hriot {

namespace {

void check_shape(const DecisionMatrix& matrix) {
  if (matrix.candidates.empty() || matrix.criteria.empty()) {
    throw std::invalid_argument("decision matrix must be non-empty in both dimensions");
  }
  if (matrix.values.size() != matrix.candidates.size()) {
    throw std::invalid_argument("decision matrix row count != candidate count");
  }
  for (const auto& row : matrix.values) {
    if (row.size() != matrix.criteria.size()) {
      throw std::invalid_argument("decision matrix row width != criteria count");
    }
    for (double v : row) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("decision matrix contains a non-finite value");
      }
    }
  }
}

}  // namespace

std::vector<std::vector<double>> normalize(const DecisionMatrix& matrix) {
  check_shape(matrix);
  const std::size_t rows = matrix.values.size();
  const std::size_t cols = matrix.criteria.size();
  std::vector<std::vector<double>> out(rows, std::vector<double>(cols, 0.0));

  for (std::size_t k = 0; k < cols; ++k) {
    double lo = matrix.values[0][k];
    double hi = lo;
    for (std::size_t i = 1; i < rows; ++i) {
      lo = std::min(lo, matrix.values[i][k]);
      hi = std::max(hi, matrix.values[i][k]);
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < rows; ++i) {
      if (span == 0.0) {
        out[i][k] = 1.0;  // degenerate column: every candidate is ideal
      } else if (matrix.criteria[k].direction == Direction::Benefit) {
        out[i][k] = (matrix.values[i][k] - lo) / span;
      } else {
        out[i][k] = (hi - matrix.values[i][k]) / span;
      }
    }
  }
  return out;
}

std::vector<std::vector<double>> grey_coefficients(
    const std::vector<std::vector<double>>& normalized, double rho) {
  if (!(rho > 0.0) || rho > 1.0) {
    throw std::invalid_argument("distinguishing coefficient rho must lie in (0, 1]");
  }
  double dmin = std::numeric_limits<double>::infinity();
  double dmax = 0.0;
  for (const auto& row : normalized) {
    for (double v : row) {
      const double delta = std::abs(1.0 - v);
      dmin = std::min(dmin, delta);
      dmax = std::max(dmax, delta);
    }
  }

  std::vector<std::vector<double>> xi(normalized.size());
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    xi[i].resize(normalized[i].size());
    for (std::size_t k = 0; k < normalized[i].size(); ++k) {
      if (dmax == 0.0) {
        xi[i][k] = 1.0;  // every candidate matches the reference
      } else {
        const double delta = std::abs(1.0 - normalized[i][k]);
        xi[i][k] = (dmin + rho * dmax) / (delta + rho * dmax);
      }
    }
  }
  return xi;
}

std::vector<double> grey_grade(const std::vector<std::vector<double>>& coefficients,
                               const std::vector<double>& weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total <= 0.0) {
    throw std::invalid_argument("criterion weights must have a positive sum");
  }

  std::vector<double> grades(coefficients.size(), 0.0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i].size() != weights.size()) {
      throw std::invalid_argument("weight count != criteria count");
    }
    double g = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      g += (weights[k] / total) * coefficients[i][k];
    }
    grades[i] = g;
  }
  return grades;
}

std::vector<RankedCandidate> rank_candidates(const DecisionMatrix& matrix) {
  const auto normalized = normalize(matrix);
  const auto xi = grey_coefficients(normalized, matrix.rho);

  std::vector<double> weights(matrix.criteria.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    weights[k] = matrix.criteria[k].weight;
  }
  const auto grades = grey_grade(xi, weights);

  std::vector<RankedCandidate> ranked(matrix.candidates.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    ranked[i] = {matrix.candidates[i], grades[i]};
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.grade != b.grade) return a.grade > b.grade;
    return a.id < b.id;
  });
  return ranked;
}

}  // namespace hriot
