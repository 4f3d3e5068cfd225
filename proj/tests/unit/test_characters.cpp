#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mollify/arith.hpp"
#include "mollify/characters.hpp"
#include "mollify/errors.hpp"

using namespace mollify;
using cd = std::complex<double>;

namespace {

// Smallest d | q such that chi is constant on units congruent mod d.
int brute_conductor(const DirichletCharacter& chi) {
  const int q = chi.modulus();
  for (auto d : divisors(q)) {
    bool induced = true;
    for (int a = 1; a < q && induced; ++a) {
      if (gcd(a, q) != 1 || a % d != 1 % d) continue;
      induced = std::abs(chi(a) - 1.0) < 1e-9;
    }
    if (induced) return static_cast<int>(d);
  }
  return q;
}

cd direct_gauss(const DirichletCharacter& chi) {
  cd acc = 0;
  for (int h = 0; h < chi.modulus(); ++h) acc += chi(h) * std::polar(1.0, 2 * std::numbers::pi * h / chi.modulus());
  return acc;
}

}  // namespace

TEST_CASE("small moduli") {
  const auto one = enumerate(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0](0) == cd(1.0));
  CHECK(one[0].is_primitive());

  const auto five = enumerate(5);
  REQUIRE(five.size() == 4);
  int even = 0, even_prim = 0;
  for (const auto& c : five) {
    even += c.is_even();
    even_prim += c.is_even() && c.is_primitive();
  }
  CHECK(even == 2);
  CHECK(even_prim == 1);

  const auto twelve = enumerate(12);
  CHECK(twelve.size() == 4);
  CHECK(phi_star(12) == 1);
  CHECK(phi_star(5) == 3);
  CHECK(phi_plus(5) == 1);
  CHECK(phi_star(1) == 1);
  CHECK(phi_plus(1) == 1);
}

TEST_CASE("property: character axioms for q <= 200") {
  for (int q = 1; q <= 200; ++q) {
    const CharacterGroup g(q);
    REQUIRE(g.size() == euler_phi(q));
    for (int i = 0; i < g.size(); ++i) {
      const auto chi = g.character(i);
      CHECK(chi.index() == i);
      CHECK(g.index_of(chi.exponents()) == i);
      CHECK(std::abs(chi(1) - 1.0) < 1e-15);
      CHECK(chi.is_even() == (std::abs(chi(-1) - 1.0) < 1e-12));
      for (int m = 0; m < q; ++m) {
        const bool unit = gcd(m, q) == 1;
        CHECK((std::abs(chi(m)) == doctest::Approx(unit ? 1.0 : 0.0)));
        if (unit) CHECK(std::abs(std::pow(chi(m), chi.order()) - 1.0) < 1e-9);
      }
      if (q <= 60) {
        for (int m = 0; m < q; ++m) {
          for (int n = 0; n < q; ++n) CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-12);
        }
        const auto bar = g.character(chi.conjugate_index());
        for (int m = 0; m < q; ++m) CHECK(std::abs(bar(m) - std::conj(chi(m))) < 1e-12);
      }
    }
  }
}

TEST_CASE("property: conductor and primitive counts against brute force") {
  long fast = 0, slow = 0;
  for (int q = 1; q <= 300; ++q) {
    fast += phi_star(q);
    for (const auto& chi : enumerate(q)) {
      const int f = brute_conductor(chi);
      if (q <= 120) CHECK(chi.conductor() == f);
      slow += f == q;
    }
  }
  CHECK(fast == slow);
}

TEST_CASE("Gauss sums and root numbers") {
  const auto five = enumerate(5);
  for (const auto& c : five) {
    if (c.order() != 2) continue;
    CHECK(std::abs(gauss_sum(c) - std::sqrt(5.0)) < 1e-10);
    CHECK(std::abs(root_number(c) - 1.0) < 1e-10);
  }
  CHECK(std::abs(gauss_sum(enumerate(4)[0])) < 1e-12);
  CHECK_THROWS_AS(root_number(enumerate(4)[0]), PreconditionError);

  for (int q = 1; q <= 200; ++q) {
    const CharacterGroup g(q);
    for (int i = 0; i < g.size(); ++i) {
      const auto chi = g.character(i);
      if (!chi.is_primitive()) continue;
      const auto bar = g.character(chi.conjugate_index());
      const cd tau = gauss_sum(chi);
      CHECK(std::abs(tau - direct_gauss(chi)) < 1e-9);
      CHECK(std::abs(std::abs(tau) - std::sqrt(q)) < 1e-10);
      CHECK(std::abs(std::abs(root_number(chi)) - 1.0) < 1e-10);
      CHECK(std::abs(root_number(chi) * root_number(bar) - chi(-1)) < 1e-10);
      CHECK(std::abs(tau * gauss_sum(bar) - chi(-1) * static_cast<double>(q)) < 1e-9);
    }
  }
}

TEST_CASE("Ramanujan sums") {
  CHECK(ramanujan_sum(4, 2) == -2);
  for (int q = 1; q <= 100; ++q) {
    CHECK(ramanujan_sum(q, 1) == mobius(q));
    for (int n = 1; n <= 100; ++n) {
      cd direct = 0;
      for (int h = 1; h <= q; ++h) {
        if (gcd(h, q) == 1) direct += std::polar(1.0, 2 * std::numbers::pi * h * n / q);
      }
      const auto c = ramanujan_sum(q, n);
      CHECK(std::abs(direct - static_cast<double>(c)) < 1e-9);
      CHECK(std::abs(c) <= gcd(q, n));
    }
  }
}

TEST_CASE("even primitive pair sums") {
  CHECK(even_primitive_pair_sum(5, 1, 1) == 1.0);
  CHECK(even_primitive_pair_sum(1, 1, 1) == 1.0);
  CHECK_THROWS_AS(even_primitive_pair_sum(6, 2, 1), PreconditionError);
  for (int q = 1; q <= 60; ++q) {
    const CharacterGroup g(q);
    const auto idx = g.even_primitive_indices();
    std::vector<DirichletCharacter> chars;
    for (int i : idx) chars.push_back(g.character(i));
    for (int m = 1; m <= 20; ++m) {
      if (gcd(m, q) != 1) continue;
      for (int n = 1; n <= 20; ++n) {
        if (gcd(n, q) != 1) continue;
        cd direct = 0;
        for (const auto& c : chars) direct += c(m) * std::conj(c(n));
        CHECK(std::abs(even_primitive_pair_sum(q, m, n) - direct) < 1e-9);
        CHECK(even_primitive_pair_sum(q, m, n) == even_primitive_pair_sum(q, n, m));
      }
    }
  }
}

TEST_CASE("even primitive count is about half the primitive count") {
  for (int q = 1; q <= 500; ++q) CHECK(std::abs(phi_plus(q) - phi_star(q) / 2.0) <= 1.0);
}
