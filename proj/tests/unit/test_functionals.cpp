#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "mollify/errors.hpp"
#include "mollify/functionals.hpp"

using namespace mollify;

namespace {

MollifierSpec make(Polynomial p1, Polynomial p2, Polynomial p3, double t1 = 0.5, double t2 = 0.25,
                   double t3 = 0.5) {
  MollifierSpec s;
  s.theta1 = t1;
  s.theta2 = t2;
  s.theta3 = t3;
  s.P1 = std::move(p1);
  s.P2 = std::move(p2);
  s.P3 = std::move(p3);
  return s;
}

// Every integral of the second-moment constants by Simpson quadrature.
double lambda_by_quadrature(const MollifierSpec& s) {
  const auto& P1 = s.P1;
  const auto& P2 = s.P2;
  const auto D1 = derivative(P1), D2 = derivative(P2);
  const double t1 = s.theta1, t2 = s.theta2;
  const double intP2 = gen::simpson([&](double x) { return P2(x); });
  double v = P1(1) * P1(1);
  v += gen::simpson([&](double x) { return D1(x) * D1(x); }) / t1;
  v -= t2 * P1(1) * intP2;
  v += 2 * t2 * gen::simpson([&](double x) { return P1(1 - t2 * (1 - x) / t1) * P2(x); });
  v += t2 / t1 * gen::simpson([&](double x) { return D1(1 - t2 * (1 - x) / t1) * P2(x); });
  v += t2 * t2 * gen::simpson([&](double x) { return (1 - x) * P2(x) * P2(x); });
  v += t2 / 2 * gen::simpson([&](double x) { return (1 - x) * (1 - x) * D2(x) * D2(x); });
  v -= t2 * t2 / 4 * intP2 * intP2;
  v += t2 / 4 * gen::simpson([&](double x) { return P2(x) * P2(x); });
  return v;
}

double kappa_by_quadrature(const MollifierSpec& s) {
  return 3 * s.theta2 * s.P3(1) * gen::simpson([&](double x) { return s.P2(x); }) -
         2 * s.theta2 * gen::simpson([&](double x) { return s.P2(x) * s.P3(x); });
}

}  // namespace

TEST_CASE("s1_constant") {
  CHECK(s1_constant(make({}, {}, {})) == 0.0);
  CHECK(s1_constant(make({0, 1}, {}, {}, 0.5, 0.3, 0.5)) == 1.0);
  const auto p = MollifierSpec::reference();
  CHECK(s1_constant(p) == doctest::Approx(4.994 + 4.92 + 0.0815 * integrate01(p.P2)).epsilon(1e-14));
}

TEST_CASE("kappa") {
  CHECK(kappa(make({0, 1}, {}, {0, 1})) == 0.0);
  CHECK(kappa(make({}, {0, 1}, {0, 1}, 0.5, 0.25, 0.5)) == doctest::Approx(5.0 / 24).epsilon(1e-15));
  const auto p = MollifierSpec::reference();
  CHECK(kappa(p) == doctest::Approx(kappa_by_quadrature(p)).epsilon(1e-10));
}

TEST_CASE("lambda_functional") {
  CHECK(lambda_functional(make({0, 1}, {}, {})) == doctest::Approx(3.0).epsilon(1e-15));
  const auto b = make({}, {0, 1}, {}, 0.5, 0.25, 0.5);
  CHECK(lambda_functional(b) == doctest::Approx(lambda_by_quadrature(b)).epsilon(1e-10));
  const auto p = MollifierSpec::reference();
  CHECK(lambda_functional(p) == doctest::Approx(lambda_by_quadrature(p)).epsilon(1e-9));
}

TEST_CASE("s2_constant and proportion") {
  CHECK(s2_constant(make({}, {}, {})) == 0.0);
  CHECK(s2_constant(make({}, {}, {0, 1})) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(proportion(MollifierSpec::reference()) == doctest::Approx(0.50073004).epsilon(1e-6 / 0.5));
  CHECK(std::abs(proportion(MollifierSpec::reference()) - 0.50073004) < 1e-6);
  CHECK(proportion(make({0, 1}, {}, {})) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(proportion(make({}, {}, {})), DegenerateError);
}

TEST_CASE("closed-form benchmarks") {
  CHECK(is_proportion(1.0) == 0.5);
  CHECK(is_proportion(0.5) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(mv_proportion(0.5) == 0.5);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(make({1, 1}, {}, {})), PreconditionError);
  CHECK_THROWS_AS(validate(make({0, 1}, {0, 1}, {}, 0.5, 0.5, 0.5)), PreconditionError);
  CHECK_THROWS_AS(validate(make({0, 1}, {}, {}, 0.6)), PreconditionError);
  CHECK_NOTHROW(validate(make({0, 1}, {}, {}, 0.6), ThetaDomain::kFormal));
  // theta2 only constrains a present B piece
  CHECK_NOTHROW(validate(make({0, 1}, {}, {0, 1}, 0.5, 0.9, 0.5)));
  CHECK_NOTHROW(validate(MollifierSpec::reference()));
}

TEST_CASE("cross terms") {
  CHECK(ismv_main(make({0, 1}, {}, {0, 1})) == 1.0);
  const auto p = MollifierSpec::reference();
  const double expected = 1.5 * p.theta2 * p.P3(1) * gen::simpson([&](double x) { return p.P2(x); }) -
                          p.theta2 * gen::simpson([&](double x) { return p.P2(x) * p.P3(x); });
  CHECK(bmv_main(p) == doctest::Approx(expected).epsilon(1e-10));
  for (int i = 0; i < 50; ++i) {
    const auto s = gen::spec();
    CHECK(bmv_main(s) == doctest::Approx(kappa(s) / 2).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("quadratic model") {
  const auto m = assemble_quadratic_model(1, 1, 1, {0.5, 0.163, 0.5});
  CHECK(m.dimension() == 3);
  CHECK(m.c[0] == doctest::Approx(1.0));
  CHECK((m.Q - m.Q.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  const auto p = MollifierSpec::reference();
  Eigen::VectorXd a(3);
  a << p.P1.coeff(1), p.P2.coeff(1), p.P3.coeff(1);
  const auto s = m.spec_from(a);
  CHECK(m.c.dot(a) == doctest::Approx(s1_constant(s)).epsilon(1e-10));
  CHECK(a.dot(m.Q * a) == doctest::Approx(s2_constant(s)).epsilon(1e-10));
  CHECK_THROWS_AS(assemble_quadratic_model(0, 0, 0, {0.5, 0.1, 0.5}), DegenerateError);
}

TEST_CASE("property: model reproduces the functionals") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = gen::spec();
    const auto m = assemble_quadratic_model(5, 5, 3, {s.theta1, s.theta2, s.theta3});
    const auto a = m.coefficients_of(s);
    CHECK(m.c.dot(a) == doctest::Approx(s1_constant(s)).epsilon(1e-12).scale(1.0));
    CHECK(a.dot(m.Q * a) == doctest::Approx(s2_constant(s)).epsilon(1e-9));
  }
}

TEST_CASE("property: decomposition and theta2 invariance") {
  for (int trial = 0; trial < 100; ++trial) {
    auto s = gen::spec();
    s.P2 = Polynomial{};
    const auto D3 = derivative(s.P3);
    auto only3 = s;
    only3.P1 = Polynomial{};
    const double diag = s.P3(1) * s.P3(1) + integrate01(D3 * D3) / s.theta3;
    CHECK(s2_constant(only3) == doctest::Approx(diag).epsilon(1e-12).scale(1.0));
    auto only1 = s;
    only1.P3 = Polynomial{};
    CHECK(s2_constant(s) - s2_constant(only1) - s2_constant(only3) ==
          doctest::Approx(2 * s.P1(1) * s.P3(1)).epsilon(1e-10).scale(1.0));
    auto moved = s;
    moved.theta2 = gen::uniform(0.01, 0.3);
    CHECK(s1_constant(moved) == s1_constant(s));
    CHECK(s2_constant(moved) == doctest::Approx(s2_constant(s)).epsilon(1e-14));
  }
}
