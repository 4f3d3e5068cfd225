#include "mollify/kloosterman.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mollify/arith.hpp"
#include "mollify/errors.hpp"
#include "mollify/parallel.hpp"
#include "mollify/summation.hpp"

namespace mollify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTermBudget = 1e8;
__extension__ using i128 = __int128;

std::complex<double> phase(std::int64_t num, std::int64_t den) {
  std::int64_t r = mod(num, den);
  if (2 * r > den) r -= den;
  const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

double bump(double u) {
  if (!(u > 1.0 && u < 2.0)) return 0.0;
  return std::exp(-1.0 / ((u - 1.0) * (2.0 - u)));
}

}  // namespace

std::complex<double> kloosterman_sum_complex(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (c < 1) throw PreconditionError("Kloosterman modulus must be positive");
  CompensatedComplexSum acc;
  for (std::int64_t x = 0; x < c; ++x) {
    if (gcd(x, c) != 1) continue;
    const std::int64_t xbar = mod_inverse(x, c);
    acc += phase(mod(a, c) * x + mod(b, c) * xbar, c);
  }
  return acc.value();
}

double kloosterman_sum(std::int64_t a, std::int64_t b, std::int64_t c) {
  const auto s = kloosterman_sum_complex(a, b, c);
  if (std::abs(s.imag()) > 1e-10 * std::max(1.0, static_cast<double>(c))) {
    throw AccuracyError("Kloosterman sum has a nonzero imaginary part");
  }
  return s.real();
}

WeilReport weil_check(int p_max) {
  WeilReport rep;
  for (int p : primes_up_to(p_max)) {
    ++rep.primes_checked;
    const int top = std::min(p - 1, 10);
    const double bound = 2.0 * std::sqrt(static_cast<double>(p));
    for (int a = 1; a <= top; ++a) {
      for (int b = 1; b <= top; ++b) {
        const double s = kloosterman_sum(a, b, p);
        ++rep.sums_checked;
        const double ratio = std::abs(s) / bound;
        if (ratio > rep.worst_ratio) {
          rep.worst_ratio = ratio;
          rep.worst_p = p;
          rep.worst_a = a;
          rep.worst_b = b;
        }
        if (std::abs(s) > bound) {
          throw AccuracyError("Weil bound violated at p=" + std::to_string(p) + ", a=" +
                              std::to_string(a) + ", b=" + std::to_string(b));
        }
      }
    }
  }
  return rep;
}

SmoothWeight2D default_g0() {
  SmoothWeight2D g;
  g.eval = [](double xi, double eta) { return bump(xi) * bump(eta); };
  return g;
}

void TrilinearInstance::validate() const {
  if (!(C > 0 && D > 0 && N > 0 && R > 0 && S > 0)) {
    throw PreconditionError("trilinear ranges must be positive");
  }
  for (const auto& t : b) {
    const bool inside = t.n > 0 && t.n <= N && t.r > R && t.r <= 2 * R && t.s > S && t.s <= 2 * S;
    if (!inside) throw PreconditionError("coefficient outside (0,N] x (R,2R] x (S,2S]");
  }
}

double TrilinearInstance::b_norm() const {
  double acc = 0.0;
  for (const auto& t : b) acc += std::norm(t.value);
  return std::sqrt(acc);
}

std::complex<double> trilinear_form(const TrilinearInstance& inst) {
  inst.validate();
  const auto c_lo = static_cast<std::int64_t>(std::max(1.0, std::floor(inst.g0.xi_lo * inst.C)));
  const auto c_hi = static_cast<std::int64_t>(std::ceil(inst.g0.xi_hi * inst.C));
  const auto d_lo = static_cast<std::int64_t>(std::max(1.0, std::floor(inst.g0.eta_lo * inst.D)));
  const auto d_hi = static_cast<std::int64_t>(std::ceil(inst.g0.eta_hi * inst.D));
  const double terms = static_cast<double>(c_hi - c_lo + 1) * static_cast<double>(d_hi - d_lo + 1) *
                       static_cast<double>(inst.b.size());
  if (terms > kTermBudget) {
    throw BudgetError("trilinear instance has " + std::to_string(terms) + " raw terms (budget 1e8)");
  }
  CompensatedComplexSum acc;
  for (std::int64_t c = c_lo; c <= c_hi; ++c) {
    for (std::int64_t d = d_lo; d <= d_hi; ++d) {
      const double g = inst.g0.eval(static_cast<double>(c) / inst.C, static_cast<double>(d) / inst.D);
      if (g == 0.0) continue;
      for (const auto& t : inst.b) {
        const std::int64_t rd = t.r * d;
        const std::int64_t sc = t.s * c;
        if (gcd(rd, sc) != 1) continue;
        const std::int64_t inv = mod_inverse(rd, sc);
        acc += t.value * g * phase(mod(t.n, sc) * inv, sc);
      }
    }
  }
  return acc.value();
}

double di_bound(double C, double D, double N, double R, double S, double b_norm) {
  if (!(C > 0 && D > 0 && N > 0 && R > 0 && S > 0)) {
    throw PreconditionError("di_bound arguments must be positive");
  }
  const double k2 = C * S * (R * S + N) * (C + R * D) + C * C * D * S * std::sqrt((R * S + N) * R) +
                    D * D * N * R / S;
  return std::sqrt(k2) * b_norm;
}

bool reciprocity_check(std::int64_t x, std::int64_t y) {
  if (x < 1 || y < 1) throw PreconditionError("reciprocity needs positive integers");
  if (gcd(x, y) != 1) throw PreconditionError("reciprocity needs coprime integers");
  // xbar/y + ybar/x - 1/(xy) = (xbar x + ybar y - 1) / (xy)
  const i128 xbar = mod_inverse(x, y);
  const i128 ybar = mod_inverse(y, x);
  const i128 num = xbar * x + ybar * y - 1;
  return num % (static_cast<i128>(x) * y) == 0;
}

TrilinearInstance random_instance(double C, double D, double N, double R, double S, std::uint64_t seed) {
  TrilinearInstance inst;
  inst.C = C;
  inst.D = D;
  inst.N = N;
  inst.R = R;
  inst.S = S;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (auto n = std::int64_t{1}; n <= static_cast<std::int64_t>(std::floor(N)); ++n)
    for (auto r = static_cast<std::int64_t>(std::floor(R)) + 1; r <= static_cast<std::int64_t>(std::floor(2 * R)); ++r)
      for (auto s = static_cast<std::int64_t>(std::floor(S)) + 1; s <= static_cast<std::int64_t>(std::floor(2 * S)); ++s)
        inst.b.push_back({n, r, s, coin(rng) ? 1.0 : -1.0});
  return inst;
}

std::vector<BenchRow> kloosterman_bench(int scale, std::uint64_t seed, unsigned workers) {
  if (scale < 1) throw PreconditionError("bench scale must be at least 1");
  std::vector<std::array<double, 5>> grid;
  for (int i = 1; i <= scale; ++i) {
    const double base = std::ldexp(4.0, i - 1);
    grid.push_back({base, base, base, base / 2, base / 2});
    grid.push_back({2 * base, base, base, base / 2, base / 2});
    grid.push_back({base, base, 2 * base, base / 2, base});
  }
  std::vector<BenchRow> rows(grid.size());
  parallel_for(grid.size(), workers, [&](std::size_t i) {
    const auto [C, D, N, R, S] = grid[i];
    const auto inst = random_instance(C, D, N, R, S, seed + i);
    const double form = std::abs(trilinear_form(inst));
    const double bound = di_bound(C, D, N, R, S, inst.b_norm());
    rows[i] = {C, D, N, R, S, form, bound, bound > 0 ? form / bound : 0.0};
  });
  return rows;
}

}  // namespace mollify
