#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <array>
#include <utility>
#include <vector>

#include "mollify/characters.hpp"
#include "mollify/functionals.hpp"
#include "mollify/kernels.hpp"

namespace mollify {

struct LFunctionOptions {
  KernelConfig kernel;
  // Use the interpolated V1 table for central values (direct evaluation
  // otherwise).
  bool use_table = true;
  // Every truncated kernel sum must have an estimated tail below this.
  double truncation_tolerance = 1e-10;
};

// Smallest x (on a 1.25-geometric ladder) such that |K| < tol at x and at a
// probe set up to 4x. Valid for the super-polynomially decaying V and V1.
double decay_cutoff(const Kernel& kernel, double tol);

// Kernels and memoized kernel series shared by all characters. Construction
// builds every table eagerly; the series cache is mutex-guarded, so one
// engine may be shared across threads.
class LFunctionEngine {
 public:
  explicit LFunctionEngine(LFunctionOptions opts = {});

  const LFunctionOptions& options() const noexcept { return opts_; }
  const Kernel& V() const noexcept { return v_; }
  const Kernel& V1() const noexcept { return v1_; }
  const Kernel& F() const;

  // Entry n is n^{-1/2} V1(n / sqrt(q)) for n = 1..N (entry 0 unused, zero),
  // with the tail past N negligible.
  std::vector<double> v1_weights(int q) const;
  double v1_at(double x) const;

  // K(n * scale) for n = 1..count, memoized on (kind, scale, count).
  std::shared_ptr<const std::vector<double>> series(KernelKind kind, double scale, std::size_t count) const;
  double v_cutoff() const noexcept { return v_cut_; }
  double v1_cutoff() const noexcept { return v1_cut_; }
  // Number of terms in sum_n n^{-1/2} |F(n / T)| needed for the tolerance,
  // from the power-law envelope x^{-(1/2 + 2(K+1))} of F.
  std::size_t f_terms(double T) const;

 private:
  LFunctionOptions opts_;
  Kernel v_;
  Kernel v1_;
  std::optional<Kernel> f_;
  double v_cut_ = 0.0;
  double v1_cut_ = 0.0;
  std::unique_ptr<KernelTable> v1_table_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, double>, std::shared_ptr<const std::vector<double>>> cache_;
};

DirichletCharacter conjugate(const DirichletCharacter& chi);

// L(1/2, chi) = sum chi(n) n^-1/2 V1(n/sqrt q) + eps(chi) sum conj chi(n) n^-1/2 V1(n/sqrt q).
// Even primitive characters of modulus q >= 2 only (PreconditionError otherwise).
std::complex<double> central_value(const DirichletCharacter& chi, const LFunctionEngine& engine);
std::complex<double> central_value(const DirichletCharacter& chi, std::complex<double> epsilon,
                                   std::span<const double> v1_weights);
// |L(1/2, chi)|^2 = 2 sum_{m,n} chi(m) conj chi(n) (mn)^-1/2 V(mn/q).
double central_value_sq(const DirichletCharacter& chi, const LFunctionEngine& engine);

// |sum conj chi(n) n^-1/2 V(Tn/q) - L(1/2, conj chi) + eps(conj chi) sum chi(n) n^-1/2 F(n/T)|
double vf_identity_residual(const DirichletCharacter& chi, double T, const LFunctionEngine& engine);

struct MollifierValues {
  std::complex<double> psi_is;
  std::complex<double> psi_b;
  std::complex<double> psi_mv;
  std::complex<double> total() const noexcept { return psi_is + psi_b + psi_mv; }
};

// The Dirichlet-polynomial coefficients of the three pieces for a given Q,
// independent of the character:
//   IS: mu(l) l^-1/2 P1[l],  B: Lambda(b) mu(c) (bc)^-1/2 P2[bc] / log Q,
//   MV: mu(l) l^-1/2 P3[l],  with P_i[x] = P_i(log(y_i/x) / log y_i).
class MollifierCoefficients {
 public:
  MollifierCoefficients(const MollifierSpec& spec, double Q);

  double y(int piece) const noexcept { return y_[static_cast<std::size_t>(piece)]; }
  MollifierValues evaluate(const DirichletCharacter& chi, std::complex<double> epsilon_conj) const;

  struct Term {
    int n;
    double coeff;
  };
  struct PairTerm {
    int b;
    int c;
    double coeff;
  };
  const std::vector<Term>& is_terms() const noexcept { return is_; }
  const std::vector<PairTerm>& b_terms() const noexcept { return b_; }
  const std::vector<Term>& mv_terms() const noexcept { return mv_; }

 private:
  std::array<double, 3> y_{};
  std::vector<Term> is_;
  std::vector<PairTerm> b_;
  std::vector<Term> mv_;
};

MollifierValues mollifier_values(const DirichletCharacter& chi, const MollifierSpec& spec, double Q);

struct CentralData {
  int modulus = 0;
  int index = 0;
  std::complex<double> L_half;
  double L_half_sq = 0.0;     // from the |L|^2 expansion
  std::complex<double> epsilon;
  std::optional<MollifierValues> psi;
};

CentralData central_data(const DirichletCharacter& chi, const LFunctionEngine& engine);

}  // namespace mollify
