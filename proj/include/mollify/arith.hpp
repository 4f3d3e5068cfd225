#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mollify {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;
std::int64_t mod(std::int64_t a, std::int64_t m) noexcept;  // result in [0, m)
// Inverse of a modulo m by extended Euclid; m = 1 gives 0. Throws
// PreconditionError when gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

// Prime factorization as (p, e) pairs in increasing p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
bool is_prime(std::int64_t n) noexcept;
std::vector<int> primes_up_to(int n);

std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);
double von_mangoldt(std::int64_t n);

// Mobius and von Mangoldt values for 1..limit from a linear sieve.
class ArithmeticSieve {
 public:
  explicit ArithmeticSieve(int limit);
  int limit() const noexcept { return limit_; }
  int mu(int n) const { return mu_[static_cast<std::size_t>(n)]; }
  double lambda(int n) const { return lambda_[static_cast<std::size_t>(n)]; }

 private:
  int limit_;
  std::vector<int> mu_;
  std::vector<double> lambda_;
};

}  // namespace mollify
