#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace mollify {

// S(a, b; c) = sum_{x mod c, (x, c) = 1} e((a x + b xbar) / c). Real because
// x -> -x conjugates every term.
double kloosterman_sum(std::int64_t a, std::int64_t b, std::int64_t c);
std::complex<double> kloosterman_sum_complex(std::int64_t a, std::int64_t b, std::int64_t c);

struct WeilReport {
  int primes_checked = 0;
  long sums_checked = 0;
  double worst_ratio = 0.0;  // max |S(a,b;p)| / (2 sqrt p)
  std::int64_t worst_p = 0, worst_a = 0, worst_b = 0;
};

// |S(a,b;p)| <= 2 sqrt(p) for primes p <= p_max and 1 <= a, b <= min(p-1, 10).
// A violation is an arithmetic bug and raises AccuracyError.
WeilReport weil_check(int p_max);

struct TrilinearCoefficient {
  std::int64_t n, r, s;
  std::complex<double> value;
};

// Smooth weight g0 on the positive quadrant with a box containing its support.
struct SmoothWeight2D {
  std::function<double(double, double)> eval;
  double xi_lo = 1.0, xi_hi = 2.0, eta_lo = 1.0, eta_hi = 2.0;
};

// Product bump exp(-1/((u-1)(2-u))) on [1, 2]^2.
SmoothWeight2D default_g0();

struct TrilinearInstance {
  double C = 1, D = 1, N = 1, R = 1, S = 1;
  std::vector<TrilinearCoefficient> b;  // supported in (0,N] x (R,2R] x (S,2S]
  SmoothWeight2D g0 = default_g0();

  // Throws PreconditionError when a coefficient leaves the support box.
  void validate() const;
  double b_norm() const;
};

// sum_{c,d,n,r,s; (rd, sc) = 1} b_{n,r,s} g0(c/C, d/D) e(n * inv(rd mod sc) / sc).
// BudgetError when the raw (c, d, coefficient) term count exceeds 1e8.
std::complex<double> trilinear_form(const TrilinearInstance& inst);

// sqrt(CS(RS+N)(C+RD) + C^2 D S sqrt((RS+N)R) + D^2 N R / S) * b_norm
double di_bound(double C, double D, double N, double R, double S, double b_norm);

// xbar/y + ybar/x == 1/(xy) (mod 1), checked exactly in integers.
bool reciprocity_check(std::int64_t x, std::int64_t y);

// Random +-1 coefficients on the full support of an instance.
TrilinearInstance random_instance(double C, double D, double N, double R, double S, std::uint64_t seed);

struct BenchRow {
  double C, D, N, R, S;
  double form_abs;
  double bound;
  double ratio;
};
std::vector<BenchRow> kloosterman_bench(int scale, std::uint64_t seed = 1, unsigned workers = 1);

}  // namespace mollify
