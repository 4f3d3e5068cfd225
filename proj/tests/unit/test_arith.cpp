#include <doctest.h>

#include <cmath>

#include "mollify/arith.hpp"
#include "mollify/errors.hpp"

using namespace mollify;

TEST_CASE("gcd and mod") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(-4, 6) == 2);
  CHECK(mod(-3, 5) == 2);
  CHECK(mod(10, 5) == 0);
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 5) == 2);
  CHECK(mod_inverse(5, 3) == 2);
  CHECK(mod_inverse(0, 1) == 0);
  CHECK(mod_inverse(-1, 7) == 6);
  CHECK_THROWS_AS(mod_inverse(4, 6), PreconditionError);
  for (std::int64_t m = 2; m <= 300; ++m) {
    for (std::int64_t a = 1; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      CHECK(mod(a * mod_inverse(a, m), m) == 1);
    }
  }
}

TEST_CASE("factorization and divisors") {
  const auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::int64_t, int>{2, 3});
  CHECK(f[2] == std::pair<std::int64_t, int>{5, 1});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(primes_up_to(20) == std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19});
}

TEST_CASE("multiplicative functions against the sieve") {
  const ArithmeticSieve s(5000);
  for (int n = 1; n <= 5000; ++n) {
    CHECK(s.mu(n) == mobius(n));
    CHECK(s.lambda(n) == doctest::Approx(von_mangoldt(n)).epsilon(1e-15));
    // sum_{d | n} phi(d) = n and sum_{d | n} mu(d) = [n = 1]
    std::int64_t phi_sum = 0;
    int mu_sum = 0;
    double lambda_sum = 0;
    for (auto d : divisors(n)) {
      phi_sum += euler_phi(d);
      mu_sum += mobius(d);
      lambda_sum += von_mangoldt(d);
    }
    CHECK(phi_sum == n);
    CHECK(mu_sum == (n == 1 ? 1 : 0));
    CHECK(lambda_sum == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-12).scale(1.0));
  }
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(97) == 96);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
