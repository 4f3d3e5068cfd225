#include <doctest.h>

#include "gen.hpp"
#include "mollify/errors.hpp"
#include "mollify/polynomial.hpp"

using mollify::Polynomial;

namespace {
const Polynomial P1{0.0, 4.86, 0.29, -0.96, 0.974, -0.17};
const Polynomial P2{0.0, -3.11, -0.3, 0.87, -0.18, -0.53};
const Polynomial P3{0.0, 4.86, 0.06};
}  // namespace

TEST_CASE("eval") {
  CHECK(eval(Polynomial{}, 7.0) == 0.0);
  CHECK(P3(1.0) == doctest::Approx(4.92).epsilon(1e-15));
  CHECK(P1(1.0) == doctest::Approx(4.994).epsilon(1e-15));
  CHECK(Polynomial{1, 2, 3}(2.0) == 17.0);
}

TEST_CASE("trimming and degree") {
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{0, 0, 0}.is_zero());
  CHECK(Polynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(Polynomial::monomial(3, 2.0) == Polynomial{0, 0, 0, 2});
  CHECK_THROWS_AS(Polynomial(std::vector<double>(66, 1.0)), mollify::PreconditionError);
}

TEST_CASE("derivative") {
  CHECK(derivative(Polynomial{0, 0, 1}) == Polynomial{0, 2});
  CHECK(derivative(Polynomial{}).is_zero());
  const auto d = derivative(P3);
  CHECK(d.degree() == 1);
  CHECK(d.coeff(0) == doctest::Approx(4.86));
  CHECK(d.coeff(1) == doctest::Approx(0.12));
}

TEST_CASE("integrate01") {
  CHECK(integrate01(Polynomial{1}) == 1.0);
  CHECK(integrate01(Polynomial{0, 1}) == 0.5);
  const double expected = -3.11 / 2 - 0.3 / 3 + 0.87 / 4 - 0.18 / 5 - 0.53 / 6;
  CHECK(integrate01(P2) == doctest::Approx(expected).epsilon(1e-15));
  const auto A = antiderivative(P1);
  CHECK(A(0.0) == 0.0);
  CHECK(A(1.0) == doctest::Approx(integrate01(P1)).epsilon(1e-15));
}

TEST_CASE("mul") {
  CHECK(mul(Polynomial{0, 1}, Polynomial{0, 1}) == Polynomial{0, 0, 1});
  CHECK(mul(P1, Polynomial{}).is_zero());
  CHECK((Polynomial{1, 1} * Polynomial{1, -1}) == Polynomial{1, 0, -1});
}

TEST_CASE("compose_affine") {
  CHECK(compose_affine(Polynomial{0, 1}, 0, 1) == Polynomial{0, 1});
  CHECK(compose_affine(Polynomial{0, 0, 1}, 1, -1) == Polynomial{1, -2, 1});
  const double r = 0.163 / 0.5;
  const auto C = compose_affine(P1, 1 - r, r);
  for (int i = 0; i < 10; ++i) {
    const double x = -1.0 + 0.3 * i;
    CHECK(C(x) == doctest::Approx(P1(1 - r + r * x)).epsilon(1e-12));
  }
}

TEST_CASE("property: calculus and algebra identities") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen::polynomial(8);
    const auto q = gen::polynomial(8);
    CHECK(integrate01(derivative(p)) == doctest::Approx(p(1.0) - p(0.0)).epsilon(1e-12));
    for (int k = 0; k < 20; ++k) {
      const double x = gen::uniform(-2, 2);
      const double a = gen::uniform(-2, 2), b = gen::uniform(-2, 2);
      const double pq = p(x) * q(x);
      CHECK(mul(p, q)(x) == doctest::Approx(pq).epsilon(1e-10).scale(1.0));
      CHECK(compose_affine(p, a, b)(x) == doctest::Approx(p(a + b * x)).epsilon(1e-10).scale(1.0));
      CHECK((p + q)(x) == doctest::Approx(p(x) + q(x)).epsilon(1e-12).scale(1.0));
      CHECK((p - q)(x) == doctest::Approx(p(x) - q(x)).epsilon(1e-12).scale(1.0));
    }
  }
}
