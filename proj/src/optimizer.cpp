#include "mollify/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mollify/errors.hpp"
#include "mollify/parallel.hpp"

namespace mollify {

double rayleigh_quotient(const QuadraticModel& model, const Eigen::VectorXd& a) {
  const double num = model.c.dot(a);
  const double den = a.dot(model.Q * a);
  if (!(den > 0.0)) throw DegenerateError("quadratic form is not positive at this point");
  return num * num / den;
}

OptimizationResult maximize_rayleigh(const QuadraticModel& model) {
  const Eigen::MatrixXd& Q = model.Q;
  const double norm = Q.norm();
  if (!(norm > 0.0)) throw ConditioningError("quadratic form is zero", 0.0);

  Eigen::LDLT<Eigen::MatrixXd> ldlt(Q);
  if (ldlt.info() != Eigen::Success) throw ConditioningError("LDL^T factorization failed", 0.0);
  const Eigen::VectorXd pivots = ldlt.vectorD();
  for (Eigen::Index i = 0; i < pivots.size(); ++i) {
    if (!(pivots[i] > 1e-12 * norm)) {
      throw ConditioningError("quadratic form is singular or indefinite (pivot " +
                                  std::to_string(pivots[i]) + ", ||Q|| " + std::to_string(norm) + ")",
                              pivots[i]);
    }
  }

  OptimizationResult r;
  r.coefficients = ldlt.solve(model.c);
  for (Eigen::Index i = 0; i < r.coefficients.size(); ++i) {
    if (r.coefficients[i] != 0.0) {
      if (r.coefficients[i] < 0.0) r.coefficients = -r.coefficients;
      break;
    }
  }
  r.value = model.c.dot(ldlt.solve(model.c));
  r.spec = model.spec_from(r.coefficients);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Q, Eigen::EigenvaluesOnly);
  r.condition_diagnostic = eig.eigenvalues().minCoeff();
  return r;
}

double coordinate_search(const QuadraticModel& model, Eigen::VectorXd a,
                         const CoordinateSearchOptions& opts) {
  if (a.size() != model.dimension()) throw PreconditionError("start vector has wrong dimension");
  double best = rayleigh_quotient(model, a);
  double step = opts.initial_step;
  int sweeps = 0;
  while (step > opts.min_step && sweeps < opts.max_sweeps) {
    bool improved = false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      for (double dir : {1.0, -1.0}) {
        Eigen::VectorXd trial = a;
        trial[i] += dir * step;
        const double den = trial.dot(model.Q * trial);
        if (!(den > 0.0)) continue;
        const double num = model.c.dot(trial);
        const double v = num * num / den;
        if (v > best) {
          best = v;
          a = std::move(trial);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= opts.shrink;
    ++sweeps;
  }
  return best;
}

ReproductionReport reproduce_reference() {
  ReproductionReport rep;
  rep.spec = MollifierSpec::reference();
  rep.s1 = s1_constant(rep.spec);
  rep.s2 = s2_constant(rep.spec);
  rep.kappa = kappa(rep.spec);
  rep.lambda = lambda_functional(rep.spec);
  rep.fixed_value = proportion(rep.spec);
  const auto model = assemble_quadratic_model(rep.degrees[0], rep.degrees[1], rep.degrees[2],
                                              {rep.spec.theta1, rep.spec.theta2, rep.spec.theta3});
  rep.optimized = maximize_rayleigh(model);
  return rep;
}

ScanTable scan_theta2(std::span<const double> theta2_grid, std::array<int, 3> degrees,
                      unsigned workers) {
  ScanTable table;
  table.degrees = degrees;
  std::vector<double> grid(theta2_grid.begin(), theta2_grid.end());
  std::sort(grid.begin(), grid.end());
  table.rows.resize(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    ScanRow& row = table.rows[i];
    row.theta2 = grid[i];
    try {
      const auto model = assemble_quadratic_model(degrees[0], degrees[1], degrees[2],
                                                  {0.5, grid[i], 0.5});
      const auto res = maximize_rayleigh(model);
      row.value = res.value;
      row.condition_diagnostic = res.condition_diagnostic;
    } catch (const Error& e) {
      row.error = e.what();
    }
  });
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (!table.rows[i].value) continue;
    if (!table.argmax || *table.rows[i].value > *table.rows[*table.argmax].value) table.argmax = i;
  }
  return table;
}

}  // namespace mollify
