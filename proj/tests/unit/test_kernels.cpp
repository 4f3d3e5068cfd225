#include <doctest.h>

#include <cmath>

#include "mollify/errors.hpp"
#include "mollify/kernels.hpp"

using namespace mollify;

namespace {
const Kernel& V() {
  static const Kernel k(KernelKind::V, KernelConfig{});
  return k;
}
const Kernel& V1() {
  static const Kernel k(KernelKind::V1, KernelConfig{});
  return k;
}
const Kernel& F() {
  static const Kernel k(KernelKind::F, KernelConfig{});
  return k;
}
}  // namespace

TEST_CASE("default_G") {
  CHECK(default_G(0) == Polynomial{1, 0, -8, 0, 16});
  for (int K = 0; K <= 3; ++K) CHECK(default_G(K)(0.0) == 1.0);
  const auto G = default_G(2);
  CHECK(G.degree() == 12);
  CHECK(std::abs(G(2.5)) < 1e-9);
  CHECK(std::abs(derivative(G)(2.5)) < 1e-9);
  CHECK_NOTHROW(validate(KernelConfig{}));
}

TEST_CASE("config validation") {
  KernelConfig odd;
  odd.G = Polynomial{1, 1};
  CHECK_THROWS_AS(validate(odd), PreconditionError);
  KernelConfig simple;
  simple.G = Polynomial{1, 0, -4};  // single zero at 1/2
  CHECK_THROWS_AS(validate(simple), PreconditionError);
  KernelConfig same_side;
  same_side.left_sigma = 0.5;
  CHECK_THROWS_AS(validate(same_side), PreconditionError);
  CHECK_THROWS_AS(Kernel(KernelKind::F, KernelConfig::with_pole_kill_count(1)), PreconditionError);
  CHECK_THROWS_AS(parse_kernel_kind("W"), UsageError);
  CHECK(parse_kernel_kind("V1") == KernelKind::V1);
  CHECK_THROWS_AS(V()(0.0), PreconditionError);
}

TEST_CASE("V against high-precision quadrature") {
  CHECK(V()(1e-4) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(V()(0.25) == doctest::Approx(-10.514853275754927732).epsilon(1e-12));
  CHECK(V()(1.0) == doctest::Approx(-15.260221533682523747).epsilon(1e-12));
  CHECK(V()(3.0) == doctest::Approx(-1.7899153547759640229).epsilon(1e-12));
  CHECK(std::abs(V()(40.0)) < 1e-8);
  const Kernel V3(KernelKind::V, KernelConfig::with_pole_kill_count(3));
  CHECK(V3(1.0) == doctest::Approx(-54.42872340581039407).epsilon(1e-12));
}

TEST_CASE("V1 against high-precision quadrature") {
  CHECK(std::abs(V1()(1e-3) - 1.0) < 0.05);
  CHECK(V1()(0.3) == doctest::Approx(0.2376397570979339894).epsilon(1e-12));
  CHECK(V1()(1.0) == doctest::Approx(0.0042289407026178194061).epsilon(1e-11));
  CHECK(V1()(2.0) == doctest::Approx(1.3650609692318494377e-7).epsilon(1e-8));
  CHECK(std::abs(V1()(50.0)) < 1e-8);
}

TEST_CASE("F against high-precision quadrature") {
  CHECK(std::abs(F()(1.0) - 0.5) < 1e-8);
  CHECK(F()(0.5) == doctest::Approx(-4.3537144631699689655).epsilon(1e-12));
  CHECK(F()(2.0) == doctest::Approx(5.3537144631699689655).epsilon(1e-12));
  CHECK(F()(3.0) == doctest::Approx(2.3416613923091765163).epsilon(1e-12));
  // With K = 2 the first surviving pole at 13/2 caps the decay at x^{-13/2}.
  CHECK(F()(100.0) == doctest::Approx(-1.4276894335211352813e-9).epsilon(1e-4));
  const Kernel F3(KernelKind::F, KernelConfig::with_pole_kill_count(3));
  CHECK(std::abs(F3(100.0)) < 1e-10);
  CHECK(F3(2.0) == doctest::Approx(36.626837013712542321).epsilon(1e-12));
  CHECK(std::abs(F3(1.0) - 0.5) < 1e-8);
}

TEST_CASE("F functional equation") {
  for (double x : {1.0, 2.0, 5.0, 10.0}) {
    CHECK(std::abs(F()(x) + F()(1.0 / x) - 1.0) < 1e-8);
  }
}

TEST_CASE("contour independence") {
  for (double x : {0.5, 1.0, 2.0, 7.0}) {
    CHECK(std::abs(V().eval_on_line(x, 2.0) - V()(x)) < 1e-9);
    CHECK(std::abs(V().eval_on_line(x, -0.25) - V().eval_on_line(x, 1.0)) < 1e-9);
    CHECK(std::abs(V1().eval_on_line(x, 1.5) - V1().eval_on_line(x, 1.0)) < 1e-9);
    CHECK(std::abs(F().eval_on_line(x, 2.0) - F().eval_on_line(x, 1.0)) < 1e-9);
    CHECK(std::abs(F().eval_on_line(x, -1.0) - F().eval_on_line(x, 1.0)) < 1e-9);
  }
  CHECK_THROWS_AS(V1().eval_on_line(1.0, -0.6), PreconditionError);
}

TEST_CASE("limits and decay envelope") {
  CHECK(std::abs(V()(1e-6) - 1.0) < 1e-9);
  for (double x = 40.0; x <= 200.0; x *= 1.5) CHECK(std::abs(V()(x)) <= 1e-6);
}

TEST_CASE("quadrature convergence") {
  KernelConfig fine;
  fine.step /= 2;
  fine.t_cutoff *= 2;
  for (auto kind : {KernelKind::V, KernelKind::V1, KernelKind::F}) {
    const Kernel coarse(kind, KernelConfig{});
    const Kernel refined(kind, fine);
    for (double x : {0.1, 0.7, 1.0, 3.0, 12.0}) CHECK(std::abs(coarse(x) - refined(x)) < 1e-10);
  }
}

TEST_CASE("log derivative") {
  for (double x : {0.3, 1.0, 4.0}) {
    const auto [v, d] = V().eval_with_log_derivative(x);
    const double h = 1e-5;
    const double fd = (V()(x * std::exp(h)) - V()(x * std::exp(-h))) / (2 * h);
    CHECK(v == doctest::Approx(V()(x)).epsilon(1e-14));
    CHECK(d == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("table interpolation") {
  const KernelTable t(V1(), 1e-3, 6.0);
  double worst = 0.0;
  for (double x = 1.1e-3; x < 6.0; x *= 1.0137) worst = std::max(worst, std::abs(t(x) - V1()(x)));
  CHECK(worst < 1e-9);
  CHECK(t(10.0) == V1()(10.0));
  CHECK(t(1e-4) == V1()(1e-4));
}
