#include "mollify/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mollify/errors.hpp"

namespace mollify {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw PreconditionError("modulus must be positive");
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw PreconditionError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw PreconditionError("factorize expects a positive integer");
  std::vector<std::pair<std::int64_t, int>> f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> d{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = d.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<int> primes_up_to(int n) {
  std::vector<int> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (int p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (long long m = static_cast<long long>(p) * p; m <= n; m += p) composite[static_cast<std::size_t>(m)] = true;
  }
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

int mobius(std::int64_t n) {
  int s = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

double von_mangoldt(std::int64_t n) {
  if (n < 2) return 0.0;
  const auto f = factorize(n);
  return f.size() == 1 ? std::log(static_cast<double>(f[0].first)) : 0.0;
}

ArithmeticSieve::ArithmeticSieve(int limit) : limit_(std::max(limit, 1)) {
  const auto n = static_cast<std::size_t>(limit_);
  mu_.assign(n + 1, 1);
  lambda_.assign(n + 1, 0.0);
  mu_[0] = 0;
  std::vector<int> smallest(n + 1, 0);
  std::vector<int> primes;
  for (std::size_t i = 2; i <= n; ++i) {
    if (smallest[i] == 0) {
      smallest[i] = static_cast<int>(i);
      primes.push_back(static_cast<int>(i));
      mu_[i] = -1;
    }
    for (int p : primes) {
      const std::size_t m = i * static_cast<std::size_t>(p);
      if (p > smallest[i] || m > n) break;
      smallest[m] = p;
      mu_[m] = (smallest[i] == p) ? 0 : -mu_[i];
    }
  }
  for (int p : primes) {
    const double lp = std::log(static_cast<double>(p));
    for (std::size_t pk = static_cast<std::size_t>(p); pk <= n; pk *= static_cast<std::size_t>(p)) {
      lambda_[pk] = lp;
      if (pk > n / static_cast<std::size_t>(p)) break;
    }
  }
}

}  // namespace mollify
