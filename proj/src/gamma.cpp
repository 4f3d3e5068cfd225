#include "mollify/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "mollify/errors.hpp"

namespace mollify {

namespace {

// B_{2k} / (2k (2k - 1)) for k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kShiftTarget = 14.0;

std::complex<double> stirling(std::complex<double> w) {
  const std::complex<double> inv = 1.0 / w;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
  series *= inv;
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PreconditionError("log_gamma: pole at nonpositive integer");
  }
  // lnG(z) = lnG(z + n) - sum_{k<n} log(z + k); every term is analytic off the
  // negative real axis, so the principal branch is preserved.
  std::complex<double> shift = 0.0;
  std::complex<double> w = z;
  while (w.real() < kShiftTarget) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift;
}

}  // namespace mollify
