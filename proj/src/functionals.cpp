#include "mollify/functionals.hpp"

#include <cmath>
#include <string>

#include "mollify/errors.hpp"

namespace mollify {

MollifierSpec MollifierSpec::reference() {
  MollifierSpec s;
  s.theta1 = 0.5;
  s.theta2 = 0.163;
  s.theta3 = 0.5;
  s.P1 = Polynomial{0.0, 4.86, 0.29, -0.96, 0.974, -0.17};
  s.P2 = Polynomial{0.0, -3.11, -0.3, 0.87, -0.18, -0.53};
  s.P3 = Polynomial{0.0, 4.86, 0.06};
  return s;
}

namespace {

void check_theta(const char* name, double theta, ThetaDomain domain) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw PreconditionError(std::string(name) + " must be positive");
  }
  if (domain == ThetaDomain::kSecondMoment && theta > 0.5) {
    throw PreconditionError(std::string(name) + " must not exceed 1/2 for the second moment");
  }
}

}  // namespace

void validate(const MollifierSpec& spec, ThetaDomain domain) {
  if (spec.P1.coeff(0) != 0.0 || spec.P2.coeff(0) != 0.0 || spec.P3.coeff(0) != 0.0) {
    throw PreconditionError("smoothing polynomials must vanish at 0");
  }
  if (!spec.P1.is_zero()) check_theta("theta1", spec.theta1, domain);
  if (!spec.P3.is_zero()) check_theta("theta3", spec.theta3, domain);
  if (!spec.P2.is_zero()) {
    check_theta("theta2", spec.theta2, domain);
    // theta1 and theta3 enter alongside P2 through lambda and kappa.
    check_theta("theta1", spec.theta1, domain);
    check_theta("theta3", spec.theta3, domain);
    if (domain == ThetaDomain::kSecondMoment &&
        !(spec.theta2 < spec.theta1 && spec.theta2 < spec.theta3)) {
      throw PreconditionError("theta2 must be strictly below theta1 and theta3");
    }
  }
}

double s1_constant(const MollifierSpec& spec) {
  return spec.P1(1.0) + spec.P3(1.0) + 0.5 * spec.theta2 * integrate01(spec.P2);
}

double kappa(const MollifierSpec& spec) {
  const double t2 = spec.theta2;
  return 3.0 * t2 * spec.P3(1.0) * integrate01(spec.P2) - 2.0 * t2 * integrate01(spec.P2 * spec.P3);
}

double lambda_functional(const MollifierSpec& spec) {
  const double t1 = spec.theta1;
  const double t2 = spec.theta2;
  const Polynomial& P1 = spec.P1;
  const Polynomial& P2 = spec.P2;
  const Polynomial dP1 = derivative(P1);
  const Polynomial dP2 = derivative(P2);
  const Polynomial one_minus_x{1.0, -1.0};
  const double p1_1 = P1(1.0);
  const double int_p2 = integrate01(P2);

  double lam = p1_1 * p1_1;
  if (!P1.is_zero()) lam += integrate01(dP1 * dP1) / t1;
  if (!P2.is_zero()) {
    // P1(1 - theta2 (1 - x) / theta1): argument a + b x with a = 1 - r, b = r.
    const double r = t2 / t1;
    const Polynomial P1_shift = compose_affine(P1, 1.0 - r, r);
    const Polynomial dP1_shift = compose_affine(dP1, 1.0 - r, r);
    const Polynomial P2sq = P2 * P2;
    lam += -t2 * p1_1 * int_p2;
    lam += 2.0 * t2 * integrate01(P1_shift * P2);
    lam += r * integrate01(dP1_shift * P2);
    lam += t2 * t2 * integrate01(one_minus_x * P2sq);
    lam += 0.5 * t2 * integrate01(one_minus_x * one_minus_x * (dP2 * dP2));
    lam += -0.25 * t2 * t2 * int_p2 * int_p2;
    lam += 0.25 * t2 * integrate01(P2sq);
  }
  return lam;
}

double s2_constant(const MollifierSpec& spec) {
  const double p1_1 = spec.P1(1.0);
  const double p3_1 = spec.P3(1.0);
  double s2 = 2.0 * p1_1 * p3_1 + p3_1 * p3_1;
  if (!spec.P3.is_zero()) {
    const Polynomial dP3 = derivative(spec.P3);
    s2 += integrate01(dP3 * dP3) / spec.theta3;
  }
  return s2 + kappa(spec) + lambda_functional(spec);
}

double proportion(const MollifierSpec& spec, ThetaDomain domain) {
  validate(spec, domain);
  const double s2 = s2_constant(spec);
  if (!(s2 > 0.0)) {
    throw DegenerateError("second-moment constant is not positive (" + std::to_string(s2) + ")");
  }
  const double s1 = s1_constant(spec);
  return s1 * s1 / s2;
}

double is_proportion(double theta) {
  if (!(theta > 0.0)) throw PreconditionError("theta must be positive");
  return theta / (1.0 + theta);
}

double mv_proportion(double theta) {
  if (!(theta > 0.0)) throw PreconditionError("theta must be positive");
  return 2.0 * theta / (1.0 + 2.0 * theta);
}

double ismv_main(const MollifierSpec& spec) { return spec.P1(1.0) * spec.P3(1.0); }

double bmv_main(const MollifierSpec& spec) {
  const double t2 = spec.theta2;
  return 1.5 * t2 * spec.P3(1.0) * integrate01(spec.P2) - t2 * integrate01(spec.P2 * spec.P3);
}

MollifierSpec QuadraticModel::spec_from(const Eigen::VectorXd& a) const {
  if (a.size() != dimension()) throw PreconditionError("coefficient vector has wrong dimension");
  MollifierSpec s;
  s.theta1 = thetas[0];
  s.theta2 = thetas[1];
  s.theta3 = thetas[2];
  Polynomial* pieces[3] = {&s.P1, &s.P2, &s.P3};
  Eigen::Index offset = 0;
  for (int i = 0; i < 3; ++i) {
    std::vector<double> coeffs(static_cast<std::size_t>(degrees[i]) + 1, 0.0);
    for (int k = 1; k <= degrees[i]; ++k) coeffs[static_cast<std::size_t>(k)] = a[offset++];
    *pieces[i] = Polynomial(std::move(coeffs));
  }
  return s;
}

Eigen::VectorXd QuadraticModel::coefficients_of(const MollifierSpec& spec) const {
  const Polynomial* pieces[3] = {&spec.P1, &spec.P2, &spec.P3};
  Eigen::VectorXd a(dimension());
  Eigen::Index offset = 0;
  for (int i = 0; i < 3; ++i) {
    if (pieces[i]->degree() > degrees[i]) {
      throw PreconditionError("polynomial degree exceeds the model basis");
    }
    for (int k = 1; k <= degrees[i]; ++k) a[offset++] = pieces[i]->coeff(static_cast<std::size_t>(k));
  }
  return a;
}

QuadraticModel assemble_quadratic_model(int d1, int d2, int d3, std::array<double, 3> thetas,
                                        ThetaDomain domain) {
  if (d1 < 0 || d2 < 0 || d3 < 0) throw PreconditionError("basis degrees must be nonnegative");
  const int dim = d1 + d2 + d3;
  if (dim == 0) throw DegenerateError("quadratic model has an empty basis");

  QuadraticModel m;
  m.degrees = {d1, d2, d3};
  m.thetas = thetas;
  m.domain = domain;
  m.c = Eigen::VectorXd::Zero(dim);
  m.Q = Eigen::MatrixXd::Zero(dim, dim);

  // Validate with unit polynomials on each present piece.
  validate(m.spec_from(Eigen::VectorXd::Ones(dim)), domain);

  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Unit(dim, i);
    const MollifierSpec s = m.spec_from(e);
    m.c[i] = s1_constant(s);
    diag[static_cast<std::size_t>(i)] = s2_constant(s);
    m.Q(i, i) = diag[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      Eigen::VectorXd e = Eigen::VectorXd::Unit(dim, i) + Eigen::VectorXd::Unit(dim, j);
      const double qij = 0.5 * (s2_constant(m.spec_from(e)) - diag[static_cast<std::size_t>(i)] -
                                diag[static_cast<std::size_t>(j)]);
      m.Q(i, j) = qij;
      m.Q(j, i) = qij;
    }
  }
  return m;
}

}  // namespace mollify
