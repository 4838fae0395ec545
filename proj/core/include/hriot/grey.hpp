// Grey relational analysis: min-max normalization against an all-ones ideal
// reference, Deng's relational coefficient, weighted grade, ranking.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hriot/node.hpp"

namespace hriot {

enum class Direction { Benefit, Cost };

struct CriterionSpec {
  std::string name;
  Direction direction = Direction::Benefit;
  double weight = 1.0;  // normalized to sum 1 across a matrix before use
};

// candidates x criteria table. Row i holds candidate candidates[i]'s raw
// value for each criterion.
struct DecisionMatrix {
  std::vector<NodeId> candidates;
  std::vector<CriterionSpec> criteria;
  std::vector<std::vector<double>> values;  // [candidate][criterion]
  double rho = 0.5;                         // distinguishing coefficient, (0, 1]
};

struct RankedCandidate {
  NodeId id = 0;
  double grade = 0.0;
};

// Min-max per column; Cost columns are reversed so that 1 is always best.
// A constant column maps to all 1.0.
std::vector<std::vector<double>> normalize(const DecisionMatrix& matrix);

// Deng's coefficient against the all-ones reference:
//   delta_i(k) = |1 - x_i(k)|
//   xi_i(k) = (dmin + rho*dmax) / (delta_i(k) + rho*dmax)
// with dmin/dmax taken over the whole matrix. All-ideal matrices give xi = 1.
std::vector<std::vector<double>> grey_coefficients(
    const std::vector<std::vector<double>>& normalized, double rho);

// Weighted mean of a candidate's coefficients; weights are renormalized to
// sum 1.
std::vector<double> grey_grade(const std::vector<std::vector<double>>& coefficients,
                               const std::vector<double>& weights);

// normalize -> grey_coefficients -> grey_grade, sorted by grade descending,
// ties broken by ascending candidate id.
std::vector<RankedCandidate> rank_candidates(const DecisionMatrix& matrix);

}  // namespace hriot
