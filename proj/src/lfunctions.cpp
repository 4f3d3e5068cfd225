#include "mollify/lfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mollify/arith.hpp"
#include "mollify/errors.hpp"
#include "mollify/summation.hpp"

namespace mollify {

namespace {

using cd = std::complex<double>;

// Per-term threshold for the super-polynomially decaying kernels. Past the
// cutoff each term is below this and falls off faster than geometrically.
constexpr double kKernelFloor = 1e-15;
constexpr double kTableLow = 1e-3;
constexpr std::size_t kMaxTerms = 5'000'000;

void require_even_primitive(const DirichletCharacter& chi) {
  // mod 1 the L-function is zeta, whose pole at s = 1 adds terms to both expansions
  if (chi.modulus() == 1) throw PreconditionError("central values need a modulus q >= 2");
  if (!chi.is_primitive()) throw PreconditionError("central values need a primitive character");
  if (!chi.is_even()) throw PreconditionError("central values are implemented for even characters only");
}

double piece_argument(int n, double y) {
  if (n == 1) return 1.0;
  return std::log(y / n) / std::log(y);
}

}  // namespace

double decay_cutoff(const Kernel& kernel, double tol) {
  double x = 1.0;
  for (int iter = 0; iter < 400; ++iter, x *= 1.25) {
    bool small = true;
    for (double f : {1.0, 1.25, 1.5, 2.0, 3.0, 4.0}) {
      if (std::abs(kernel(x * f)) >= tol) {
        small = false;
        break;
      }
    }
    if (small) return x;
  }
  throw AccuracyError(std::string("kernel ") + to_string(kernel.kind()) + " shows no decay");
}

LFunctionEngine::LFunctionEngine(LFunctionOptions opts)
    : opts_(std::move(opts)),
      v_(KernelKind::V, opts_.kernel),
      v1_(KernelKind::V1, opts_.kernel) {
  if (opts_.kernel.pole_kill_count >= 2) f_.emplace(KernelKind::F, opts_.kernel);
  v_cut_ = decay_cutoff(v_, kKernelFloor);
  v1_cut_ = decay_cutoff(v1_, kKernelFloor);
  if (opts_.use_table) v1_table_ = std::make_unique<KernelTable>(v1_, kTableLow, v1_cut_);
}

const Kernel& LFunctionEngine::F() const {
  if (!f_) throw PreconditionError("F needs a pole kill count of at least 2");
  return *f_;
}

double LFunctionEngine::v1_at(double x) const { return v1_table_ ? (*v1_table_)(x) : v1_(x); }

std::vector<double> LFunctionEngine::v1_weights(int q) const {
  const double root_q = std::sqrt(static_cast<double>(q));
  const auto n_max = static_cast<std::size_t>(std::ceil(v1_cut_ * root_q));
  std::vector<double> w(n_max + 1, 0.0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double dn = static_cast<double>(n);
    w[n] = v1_at(dn / root_q) / std::sqrt(dn);
  }
  return w;
}

std::shared_ptr<const std::vector<double>> LFunctionEngine::series(KernelKind kind, double scale,
                                                                    std::size_t count) const {
  const auto key = std::make_pair(static_cast<int>(kind), scale);
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end() && it->second->size() > count) return it->second;
  }
  const Kernel& k = kind == KernelKind::V ? v_ : kind == KernelKind::V1 ? v1_ : F();
  auto values = std::make_shared<std::vector<double>>(count + 1, 0.0);
  for (std::size_t n = 1; n <= count; ++n) (*values)[n] = k(static_cast<double>(n) * scale);
  std::lock_guard lock(mu_);
  auto& slot = cache_[key];
  if (!slot || slot->size() < values->size()) slot = values;
  return slot;
}

std::size_t LFunctionEngine::f_terms(double T) const {
  const Kernel& f = F();
  const double p = 0.5 + 2.0 * (opts_.kernel.pole_kill_count + 1);
  std::size_t n = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(4.0 * T)));
  while (n < kMaxTerms) {
    const double x0 = static_cast<double>(n) / T;
    double c = 0.0;
    for (double m : {1.0, 1.5, 2.0, 3.0, 4.0}) c = std::max(c, std::abs(f(x0 * m)) * std::pow(x0 * m, p));
    // sum_{k>n} k^-1/2 |F(k/T)| <= c T^p n^{1/2-p} / (p - 1/2)
    const double tail = c * std::pow(T, p) * std::pow(static_cast<double>(n), 0.5 - p) / (p - 0.5);
    if (tail < opts_.truncation_tolerance) return n;
    n *= 2;
  }
  throw AccuracyError("F series does not reach the truncation tolerance");
}

DirichletCharacter conjugate(const DirichletCharacter& chi) {
  return CharacterGroup(chi.modulus()).character(chi.conjugate_index());
}

cd central_value(const DirichletCharacter& chi, cd epsilon, std::span<const double> v1_weights) {
  CompensatedComplexSum a;
  for (std::size_t n = 1; n < v1_weights.size(); ++n) {
    a += chi(static_cast<std::int64_t>(n)) * v1_weights[n];
  }
  const cd s = a.value();
  return s + epsilon * std::conj(s);
}

cd central_value(const DirichletCharacter& chi, const LFunctionEngine& engine) {
  require_even_primitive(chi);
  const auto w = engine.v1_weights(chi.modulus());
  return central_value(chi, root_number(chi), w);
}

double central_value_sq(const DirichletCharacter& chi, const LFunctionEngine& engine) {
  require_even_primitive(chi);
  const int q = chi.modulus();
  const auto k_max = static_cast<std::size_t>(std::ceil(engine.v_cutoff() * q));
  const auto v = engine.series(KernelKind::V, 1.0 / q, k_max);
  // c_k = sum_{mn = k} chi(m) conj chi(n)
  std::vector<cd> conv(k_max + 1, 0.0);
  for (std::size_t m = 1; m <= k_max; ++m) {
    const cd cm = chi(static_cast<std::int64_t>(m));
    if (cm == cd(0.0)) continue;
    for (std::size_t n = 1; m * n <= k_max; ++n) {
      conv[m * n] += cm * std::conj(chi(static_cast<std::int64_t>(n)));
    }
  }
  CompensatedComplexSum acc;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (conv[k] == cd(0.0)) continue;
    acc += conv[k] * ((*v)[k] / std::sqrt(static_cast<double>(k)));
  }
  const cd total = 2.0 * acc.value();
  if (std::abs(total.imag()) > 1e-9 * std::max(1.0, std::abs(total.real()))) {
    throw AccuracyError("|L|^2 expansion left an imaginary part of " + std::to_string(total.imag()));
  }
  return total.real();
}

double vf_identity_residual(const DirichletCharacter& chi, double T, const LFunctionEngine& engine) {
  require_even_primitive(chi);
  if (!(T > 0.0)) throw PreconditionError("T must be positive");
  const int q = chi.modulus();
  const DirichletCharacter chibar = conjugate(chi);

  const auto n_v = static_cast<std::size_t>(std::ceil(engine.v_cutoff() * q / T));
  const auto v = engine.series(KernelKind::V, T / q, n_v);
  CompensatedComplexSum lhs;
  for (std::size_t n = 1; n <= n_v; ++n) {
    lhs += chibar(static_cast<std::int64_t>(n)) * ((*v)[n] / std::sqrt(static_cast<double>(n)));
  }

  const std::size_t n_f = engine.f_terms(T);
  const auto f = engine.series(KernelKind::F, 1.0 / T, n_f);
  CompensatedComplexSum dual;
  for (std::size_t n = 1; n <= n_f; ++n) {
    dual += chi(static_cast<std::int64_t>(n)) * ((*f)[n] / std::sqrt(static_cast<double>(n)));
  }

  const cd eps_bar = root_number(chibar);
  const cd l_bar = central_value(chibar, eps_bar, engine.v1_weights(q));
  return std::abs(lhs.value() - l_bar + eps_bar * dual.value());
}

MollifierCoefficients::MollifierCoefficients(const MollifierSpec& spec, double Q) {
  if (!(Q > 1.0)) throw DegenerateError("Q must exceed 1 so that log Q > 0");
  const double thetas[3] = {spec.theta1, spec.theta2, spec.theta3};
  for (int i = 0; i < 3; ++i) {
    y_[static_cast<std::size_t>(i)] = std::pow(Q, thetas[i]);
    if (!(y_[static_cast<std::size_t>(i)] >= 1.0)) {
      throw DegenerateError("mollifier length y" + std::to_string(i + 1) + " is below 1");
    }
  }
  const int limit = static_cast<int>(std::floor(std::max({y_[0], y_[1], y_[2]}))) + 1;
  const ArithmeticSieve sieve(limit);
  const double log_q = std::log(Q);

  auto single = [&](const Polynomial& P, double y, std::vector<Term>& out) {
    if (P.is_zero()) return;
    for (int l = 1; l <= static_cast<int>(std::floor(y)); ++l) {
      if (sieve.mu(l) == 0) continue;
      const double c = sieve.mu(l) / std::sqrt(static_cast<double>(l)) * P(piece_argument(l, y));
      if (c != 0.0) out.push_back({l, c});
    }
  };
  single(spec.P1, y_[0], is_);
  single(spec.P3, y_[2], mv_);

  if (!spec.P2.is_zero()) {
    const int y2 = static_cast<int>(std::floor(y_[1]));
    for (int b = 2; b <= y2; ++b) {
      if (sieve.lambda(b) == 0.0) continue;
      for (int c = 1; b * c <= y2; ++c) {
        if (sieve.mu(c) == 0) continue;
        const int bc = b * c;
        const double coeff = sieve.lambda(b) * sieve.mu(c) / std::sqrt(static_cast<double>(bc)) *
                             spec.P2(piece_argument(bc, y_[1])) / log_q;
        if (coeff != 0.0) b_.push_back({b, c, coeff});
      }
    }
  }
}

MollifierValues MollifierCoefficients::evaluate(const DirichletCharacter& chi, cd epsilon_conj) const {
  CompensatedComplexSum is, b, mv;
  for (const auto& t : is_) is += t.coeff * chi(t.n);
  for (const auto& t : b_) b += t.coeff * std::conj(chi(t.b)) * chi(t.c);
  for (const auto& t : mv_) mv += t.coeff * std::conj(chi(t.n));
  return {is.value(), b.value(), epsilon_conj * mv.value()};
}

MollifierValues mollifier_values(const DirichletCharacter& chi, const MollifierSpec& spec, double Q) {
  const MollifierCoefficients coeffs(spec, Q);
  cd eps_conj = 0.0;
  if (!coeffs.mv_terms().empty()) eps_conj = root_number(conjugate(chi));
  return coeffs.evaluate(chi, eps_conj);
}

CentralData central_data(const DirichletCharacter& chi, const LFunctionEngine& engine) {
  require_even_primitive(chi);
  CentralData d;
  d.modulus = chi.modulus();
  d.index = chi.index();
  d.epsilon = root_number(chi);
  d.L_half = central_value(chi, d.epsilon, engine.v1_weights(chi.modulus()));
  d.L_half_sq = central_value_sq(chi, engine);
  return d;
}

}  // namespace mollify
