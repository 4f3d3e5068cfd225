#include "naive_moments.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mollify/arith.hpp"
#include "mollify/characters.hpp"
#include "mollify/kernels.hpp"

namespace oracle {

namespace {

using cld = std::complex<long double>;

cld to_ld(std::complex<double> z) { return {z.real(), z.imag()}; }

int mu(long n) {
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

double vm(long n) {
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return 0.0;
}

double smooth(const mollify::Polynomial& P, double y, double x) { return P(std::log(y / x) / std::log(y)); }

}  // namespace

NaiveMoments naive_moments(double Q, const mollify::MollifierSpec& spec, const mollify::WeightFunction& psi) {
  const mollify::Kernel v1(mollify::KernelKind::V1, mollify::KernelConfig{});
  const double y1 = std::pow(Q, spec.theta1), y2 = std::pow(Q, spec.theta2), y3 = std::pow(Q, spec.theta3);
  const double logQ = std::log(Q);
  NaiveMoments out;
  for (int q = 1; q < 2 * Q; ++q) {
    if (!(q > Q / 2)) continue;
    const double w = psi(q / Q) * q / static_cast<double>(mollify::euler_phi(q));
    // V1(n / sqrt q) is below 1e-17 once n / sqrt q > 4.5
    std::vector<double> kv;
    for (int n = 1; n <= static_cast<int>(4.5 * std::sqrt(q)) + 1; ++n) {
      kv.push_back(v1.eval(n / std::sqrt(static_cast<double>(q))) / std::sqrt(static_cast<double>(n)));
    }
    for (const auto& chi : mollify::enumerate(q)) {
      if (!chi.is_even() || !chi.is_primitive()) continue;
      ++out.count;
      cld tau = 0;
      for (int h = 0; h < q; ++h) {
        tau += to_ld(chi(h)) * to_ld(std::polar(1.0, 2 * std::numbers::pi * h / q));
      }
      const cld eps = tau / std::sqrt(static_cast<long double>(q));
      cld a = 0, b = 0;
      for (std::size_t i = 0; i < kv.size(); ++i) {
        a += to_ld(chi(static_cast<long>(i + 1))) * static_cast<long double>(kv[i]);
        b += std::conj(to_ld(chi(static_cast<long>(i + 1)))) * static_cast<long double>(kv[i]);
      }
      const cld L = a + eps * b;

      cld m = 0;
      for (long l = 1; l <= y1; ++l) {
        m += static_cast<long double>(mu(l) / std::sqrt(static_cast<double>(l)) * smooth(spec.P1, y1, l)) *
             to_ld(chi(l));
      }
      for (long bb = 1; bb <= y2; ++bb) {
        for (long c = 1; bb * c <= y2; ++c) {
          const double coef = vm(bb) * mu(c) / std::sqrt(static_cast<double>(bb * c)) *
                              smooth(spec.P2, y2, static_cast<double>(bb * c)) / logQ;
          m += static_cast<long double>(coef) * std::conj(to_ld(chi(bb))) * to_ld(chi(c));
        }
      }
      cld mv = 0;
      for (long l = 1; l <= y3; ++l) {
        mv += static_cast<long double>(mu(l) / std::sqrt(static_cast<double>(l)) * smooth(spec.P3, y3, l)) *
              std::conj(to_ld(chi(l)));
      }
      // eps(conj chi) = conj eps(chi) for even chi
      m += std::conj(eps) * mv;

      out.S1 += static_cast<long double>(w) * L * m;
      out.S2 += static_cast<long double>(w) * std::norm(L * m);
      out.norm += static_cast<long double>(w);
    }
  }
  return out;
}

}  // namespace oracle
