#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mollify/functionals.hpp"

namespace mollify {

struct OptimizationResult {
  double value = 0.0;
  Eigen::VectorXd coefficients;
  MollifierSpec spec;
  // Smallest eigenvalue of Q.
  double condition_diagnostic = 0.0;
};

// max_a (c.a)^2 / (a^T Q a) = c^T Q^{-1} c, attained at a = Q^{-1} c. Uses an
// LDL^T factorization; throws ConditioningError when a pivot is indefinite or
// below 1e-12 * ||Q||.
OptimizationResult maximize_rayleigh(const QuadraticModel& model);

// Rayleigh quotient (c.a)^2 / (a^T Q a) at a given coefficient vector.
double rayleigh_quotient(const QuadraticModel& model, const Eigen::VectorXd& a);

// Derivative-free coordinate search with shrinking steps. Only a cross-check
// for maximize_rayleigh; it makes no use of the closed form.
struct CoordinateSearchOptions {
  double initial_step = 1.0;
  double min_step = 1e-10;
  double shrink = 0.5;
  int max_sweeps = 100000;
};
double coordinate_search(const QuadraticModel& model, Eigen::VectorXd start,
                         const CoordinateSearchOptions& opts = {});

struct ReproductionReport {
  MollifierSpec spec;
  double s1 = 0.0;
  double s2 = 0.0;
  double kappa = 0.0;
  double lambda = 0.0;
  double fixed_value = 0.0;
  std::array<int, 3> degrees{5, 5, 2};
  OptimizationResult optimized;
  static constexpr double kClaimedBound = 0.50073;
  bool meets_claimed_bound() const noexcept { return fixed_value >= kClaimedBound; }
};

ReproductionReport reproduce_reference();

struct ScanRow {
  double theta2 = 0.0;
  std::optional<double> value;
  std::optional<double> condition_diagnostic;
  std::string error;  // empty unless the grid point failed
};

struct ScanTable {
  std::array<int, 3> degrees{};
  std::vector<ScanRow> rows;  // ascending theta2
  std::optional<std::size_t> argmax;
};

// Optimizes at each theta2 with theta1 = theta3 = 1/2. Failed grid points are
// recorded in their row, not rethrown.
ScanTable scan_theta2(std::span<const double> theta2_grid, std::array<int, 3> degrees,
                      unsigned workers = 1);

}  // namespace mollify
