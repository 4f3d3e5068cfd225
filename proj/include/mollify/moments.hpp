#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mollify/functionals.hpp"
#include "mollify/lfunctions.hpp"

namespace mollify {

// Nonnegative smooth weight supported in [1/2, 2].
struct WeightFunction {
  std::function<double(double)> eval;
  double operator()(double x) const { return eval(x); }
};

// exp(-1 / ((x - 1/2)(2 - x))) on (1/2, 2), zero elsewhere.
WeightFunction default_psi();

struct SweepOptions {
  int stride = 1;
  unsigned workers = 1;
  // |L(1/2, chi)| above this counts as non-vanishing.
  double vanishing_threshold = 1e-8;
  LFunctionOptions lfun;
};

// Contribution of one modulus, before the Psi(q/Q) q/phi(q) weight.
struct ModulusPartial {
  int q = 0;
  double weight = 0.0;  // Psi(q/Q) q / phi(q)
  int phi_plus = 0;
  int nonzero = 0;
  std::complex<double> s1;  // sum over even primitive chi of L psi
  double s2 = 0.0;          // sum of |L psi|^2
};

struct MomentReport {
  double Q = 0.0;
  std::complex<double> S1;
  double S2 = 0.0;
  double norm = 0.0;  // sum_q Psi(q/Q) q/phi(q) phi^+(q)
  double predicted_s1 = 0.0;
  double predicted_s2 = 0.0;
  long census_total = 0;
  long census_nonzero = 0;
  double weighted_nonzero = 0.0;  // sum_q Psi(q/Q) q/phi(q) #{chi : L != 0}
  double lower_bound = 0.0;       // (Re S1)^2 / S2, or 0 when S2 = 0
  std::vector<ModulusPartial> partials;  // ascending q
};

// Moduli in the open support (Q/2, 2Q) taken with the given stride.
std::vector<int> sweep_moduli(double Q, int stride);

// S1 = sum_q Psi(q/Q) q/phi(q) sum^+_chi L(1/2,chi) psi(chi), S2 likewise
// with |L psi|^2. Per-modulus partials are computed independently and
// reduced in ascending q with compensated sums, so the report does not
// depend on the worker count.
MomentReport compute_moments(double Q, const MollifierSpec& spec, const WeightFunction& psi,
                             const SweepOptions& opts = {});

struct Census {
  long total = 0;
  long nonzero = 0;
};
Census nonvanishing_census(double Q, const SweepOptions& opts = {});

}  // namespace mollify
