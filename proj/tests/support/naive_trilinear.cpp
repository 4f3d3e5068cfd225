#include "naive_trilinear.hpp"

#include <cmath>
#include <numeric>
#include <numbers>

namespace oracle {

namespace {

long inverse_by_search(long a, long m) {
  if (m == 1) return 0;
  a %= m;
  for (long x = 1; x < m; ++x) {
    if (a * x % m == 1) return x;
  }
  return -1;
}

}  // namespace

std::complex<double> naive_trilinear(const mollify::TrilinearInstance& inst) {
  std::complex<long double> acc = 0;
  for (const auto& t : inst.b) {
    for (long c = 1; c <= 3 * inst.C; ++c) {
      for (long d = 1; d <= 3 * inst.D; ++d) {
        const double g = inst.g0.eval(c / inst.C, d / inst.D);
        if (g == 0.0) continue;
        const long rd = t.r * d, sc = t.s * c;
        if (std::gcd(rd, sc) != 1) continue;
        const long inv = inverse_by_search(rd, sc);
        const long num = (t.n % sc) * inv % sc;
        const auto e = std::polar(1.0L, 2 * std::numbers::pi_v<long double> * num / sc);
        acc += std::complex<long double>(t.value.real(), t.value.imag()) * static_cast<long double>(g) * e;
      }
    }
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::complex<double> naive_kloosterman(long a, long b, long c) {
  std::complex<long double> acc = 0;
  for (long x = 0; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    const long xbar = inverse_by_search(x, c);
    const long num = (((a % c + c) % c) * x + ((b % c + c) % c) * xbar) % c;
    acc += std::polar(1.0L, 2 * std::numbers::pi_v<long double> * num / c);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace oracle
