#pragma once

#include <array>

#include <Eigen/Dense>

#include "mollify/polynomial.hpp"

namespace mollify {

// Three-piece mollifier: exponents theta_i (lengths y_i = Q^theta_i) and the
// smoothing polynomials of the IS, B and MV pieces.
struct MollifierSpec {
  double theta1 = 0.5;
  double theta2 = 0.163;
  double theta3 = 0.5;
  Polynomial P1;
  Polynomial P2;
  Polynomial P3;

  // The configuration quoted for the 0.50073 constant.
  static MollifierSpec reference();
};

// kSecondMoment enforces 0 < theta_i <= 1/2 and theta2 < theta1, theta3 for
// every piece that is present. kFormal only requires positive exponents and
// evaluates the main-term expressions as formulas (used for the IS benchmark
// at theta = 1).
enum class ThetaDomain { kSecondMoment, kFormal };

// Throws PreconditionError when P_i(0) != 0 or a theta constraint fails.
// Constraints attached to a zero polynomial are ignored.
void validate(const MollifierSpec& spec, ThetaDomain domain = ThetaDomain::kSecondMoment);

double s1_constant(const MollifierSpec& spec);
double kappa(const MollifierSpec& spec);
double lambda_functional(const MollifierSpec& spec);
double s2_constant(const MollifierSpec& spec);
// S1^2 / S2 of the normalized main terms. Throws DegenerateError when the
// denominator is not positive.
double proportion(const MollifierSpec& spec, ThetaDomain domain = ThetaDomain::kSecondMoment);

double is_proportion(double theta);
double mv_proportion(double theta);

// Cross-term main constants: IS x MV and B x MV.
double ismv_main(const MollifierSpec& spec);
double bmv_main(const MollifierSpec& spec);

// Linear form c and quadratic form Q over monomial coefficients
// (x^1..x^d1 for P1, then P2, then P3) such that c.a == s1_constant and
// a^T Q a == s2_constant of spec_from(a).
struct QuadraticModel {
  std::array<int, 3> degrees{};
  std::array<double, 3> thetas{};
  ThetaDomain domain = ThetaDomain::kSecondMoment;
  Eigen::VectorXd c;
  Eigen::MatrixXd Q;

  Eigen::Index dimension() const noexcept { return c.size(); }
  MollifierSpec spec_from(const Eigen::VectorXd& a) const;
  Eigen::VectorXd coefficients_of(const MollifierSpec& spec) const;
};

QuadraticModel assemble_quadratic_model(int d1, int d2, int d3, std::array<double, 3> thetas,
                                        ThetaDomain domain = ThetaDomain::kSecondMoment);

}  // namespace mollify
