#include "mollify/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mollify/errors.hpp"
#include "mollify/gamma.hpp"

namespace mollify {

namespace {

using cd = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kTailTolerance = 1e-13;
constexpr double kSymmetryTolerance = 1e-12;

cd eval_complex(const Polynomial& p, cd s) {
  cd acc = 0.0;
  auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
  return acc;
}

double first_unkilled_pole(int K) { return 0.5 + 2.0 * (K + 1); }

}  // namespace

const char* to_string(KernelKind kind) noexcept {
  switch (kind) {
    case KernelKind::V:
      return "V";
    case KernelKind::V1:
      return "V1";
    case KernelKind::F:
      return "F";
  }
  return "?";
}

KernelKind parse_kernel_kind(const std::string& name) {
  if (name == "V") return KernelKind::V;
  if (name == "V1") return KernelKind::V1;
  if (name == "F") return KernelKind::F;
  throw UsageError("unknown kernel '" + name + "' (expected V, V1 or F)");
}

Polynomial default_G(int K) {
  if (K < 0) throw PreconditionError("pole kill count must be nonnegative");
  Polynomial g{1.0};
  for (int k = 0; k <= K; ++k) {
    const double r = 0.5 + 2.0 * k;
    const Polynomial factor{1.0, 0.0, -1.0 / (r * r)};
    g = g * factor * factor;
  }
  return g;
}

KernelConfig KernelConfig::with_pole_kill_count(int K) {
  KernelConfig cfg;
  cfg.G = default_G(K);
  cfg.pole_kill_count = K;
  return cfg;
}

void validate(const KernelConfig& cfg) {
  if (cfg.pole_kill_count < 0) throw PreconditionError("pole kill count must be nonnegative");
  if (!(cfg.step > 0.0) || !(cfg.t_cutoff > cfg.step)) {
    throw PreconditionError("quadrature step and cutoff must be positive");
  }
  if (!(cfg.contour_sigma > 0.0) || !(cfg.left_sigma < 0.0)) {
    throw PreconditionError("contour lines must straddle the pole at s = 0");
  }
  for (const Polynomial* g : {&cfg.G, &cfg.G1}) {
    if (std::abs(g->coeff(0) - 1.0) > 1e-14) throw PreconditionError("G(0) must equal 1");
    for (int k = 1; k <= g->degree(); k += 2) {
      if (g->coeff(static_cast<std::size_t>(k)) != 0.0) {
        throw PreconditionError("G must be an even polynomial");
      }
    }
  }
  const Polynomial dG = derivative(cfg.G);
  for (int k = 0; k <= cfg.pole_kill_count; ++k) {
    const double r = 0.5 + 2.0 * k;
    // Rounding scale of Horner evaluation at r.
    double g_scale = 0.0;
    double dg_scale = 0.0;
    auto c = cfg.G.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      g_scale += std::abs(c[i]) * std::pow(r, static_cast<double>(i));
      if (i > 0) dg_scale += static_cast<double>(i) * std::abs(c[i]) * std::pow(r, static_cast<double>(i - 1));
    }
    if (std::abs(cfg.G(r)) > 1e-9 * g_scale || std::abs(dG(r)) > 1e-9 * dg_scale) {
      throw PreconditionError("G must vanish to second order at +-" + std::to_string(r));
    }
  }
}

Kernel::Kernel(KernelKind kind, KernelConfig cfg) : kind_(kind), cfg_(std::move(cfg)) {
  validate(cfg_);
  if (kind_ == KernelKind::F && cfg_.pole_kill_count < 2) {
    throw PreconditionError("F requires G to kill at least the poles at +-1/2, +-5/2, +-9/2");
  }
  const auto [lo, hi] = admissible_strip();
  if (!(cfg_.contour_sigma < hi) || !(cfg_.left_sigma > lo)) {
    throw PreconditionError("contour line leaves the pole-free strip of the kernel");
  }
  right_ = make_line(cfg_.contour_sigma);
  left_ = make_line(cfg_.left_sigma);
}

std::pair<double, double> Kernel::admissible_strip() const noexcept {
  const double edge = first_unkilled_pole(cfg_.pole_kill_count);
  switch (kind_) {
    case KernelKind::V:
      return {-edge, INFINITY};
    case KernelKind::F:
      return {-edge, edge};
    case KernelKind::V1:
      return {-0.5, INFINITY};
  }
  return {0.0, 0.0};
}

cd Kernel::integrand(cd s) const {
  static const double log_gamma_quarter = std::lgamma(0.25);
  const cd a = log_gamma(s / 2.0 + 0.25);
  switch (kind_) {
    case KernelKind::V:
      return std::exp(2.0 * a - 2.0 * log_gamma_quarter - s * std::log(kPi)) *
             eval_complex(cfg_.G, s) / s;
    case KernelKind::F:
      return std::exp(a + log_gamma(-s / 2.0 + 0.25) - 2.0 * log_gamma_quarter) *
             eval_complex(cfg_.G, s) / s;
    case KernelKind::V1:
      return std::exp(a - log_gamma_quarter - 0.5 * s * std::log(kPi)) *
             eval_complex(cfg_.G1, s) / s;
  }
  return 0.0;
}

Kernel::Line Kernel::make_line(double sigma) const {
  if (sigma == 0.0) throw PreconditionError("integration line passes through the pole at s = 0");
  const auto [lo, hi] = admissible_strip();
  if (!(sigma > lo && sigma < hi)) {
    throw PreconditionError("line Re(s) = " + std::to_string(sigma) +
                            " crosses a pole the kernel's G does not cancel");
  }
  Line line;
  line.sigma = sigma;
  const double h = cfg_.step;
  const auto count = static_cast<std::size_t>(std::llround(cfg_.t_cutoff / h));
  line.t.resize(count + 1);
  line.weight.resize(count + 1);
  line.s.resize(count + 1);
  for (std::size_t j = 0; j <= count; ++j) {
    const double t = static_cast<double>(j) * h;
    const cd s{sigma, t};
    const cd f = integrand(s);
    if (j > 0) {
      // The integrand has real Taylor coefficients, so f(conj s) = conj f(s)
      // and the t < 0 half folds onto the t > 0 half.
      const cd g = integrand(std::conj(s));
      if (std::abs(g - std::conj(f)) > kSymmetryTolerance * std::max(1.0, std::abs(f))) {
        throw AccuracyError("kernel integrand lost conjugate symmetry");
      }
    }
    line.t[j] = t;
    line.s[j] = s;
    line.weight[j] = f * (h / (2.0 * kPi)) * (j == 0 ? 1.0 : 2.0);
    line.mass += std::abs(line.weight[j]);
    if (t >= cfg_.t_cutoff - 1.0) line.tail_mass += std::abs(line.weight[j]);
  }
  return line;
}

std::pair<double, double> Kernel::sum_line(const Line& line, double x, bool want_derivative) const {
  if (!(x > 0.0) || !std::isfinite(x)) throw PreconditionError("kernel argument must be positive");
  const double u = std::log(x);
  const double scale = std::exp(-line.sigma * u);
  double value = 0.0;
  double deriv = 0.0;
  for (std::size_t j = 0; j < line.t.size(); ++j) {
    const double c = std::cos(line.t[j] * u);
    const double sn = std::sin(line.t[j] * u);
    const cd w = line.weight[j];
    value += w.real() * c + w.imag() * sn;
    if (want_derivative) {
      const cd ws = -line.s[j] * w;
      deriv += ws.real() * c + ws.imag() * sn;
    }
  }
  value *= scale;
  deriv *= scale;
  if (line.tail_mass * scale > kTailTolerance * std::max(1.0, std::abs(value))) {
    throw AccuracyError(std::string("kernel ") + to_string(kind_) +
                        " quadrature tail too large at x = " + std::to_string(x));
  }
  if (line.sigma < 0.0) value += 1.0;  // residue at s = 0
  return {value, deriv};
}

double Kernel::eval(double x) const {
  return sum_line(x >= 1.0 ? right_ : left_, x, false).first;
}

std::pair<double, double> Kernel::eval_with_log_derivative(double x) const {
  return sum_line(x >= 1.0 ? right_ : left_, x, true);
}

double Kernel::eval_on_line(double x, double sigma) const {
  if (sigma == right_.sigma) return sum_line(right_, x, false).first;
  if (sigma == left_.sigma) return sum_line(left_, x, false).first;
  return sum_line(make_line(sigma), x, false).first;
}

KernelTable::KernelTable(const Kernel& kernel, double x_lo, double x_hi, double nodes_per_unit_log)
    : kernel_(kernel), x_lo_(x_lo), x_hi_(x_hi) {
  if (!(x_lo > 0.0) || !(x_hi > x_lo) || !(nodes_per_unit_log > 0.0)) {
    throw PreconditionError("kernel table needs 0 < x_lo < x_hi");
  }
  u_lo_ = std::log(x_lo);
  const double span = std::log(x_hi) - u_lo_;
  const auto n = static_cast<std::size_t>(std::ceil(span * nodes_per_unit_log)) + 1;
  h_ = span / static_cast<double>(n - 1);
  value_.resize(n);
  slope_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = std::exp(u_lo_ + h_ * static_cast<double>(k));
    const auto [v, d] = kernel_.eval_with_log_derivative(x);
    value_[k] = v;
    slope_[k] = d;
  }
}

double KernelTable::operator()(double x) const {
  if (!(x >= x_lo_ && x <= x_hi_)) return kernel_.eval(x);
  const double pos = (std::log(x) - u_lo_) / h_;
  auto k = static_cast<std::size_t>(pos);
  if (k >= value_.size() - 1) k = value_.size() - 2;
  const double tau = pos - static_cast<double>(k);
  const double t2 = tau * tau;
  const double t3 = t2 * tau;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + tau;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * value_[k] + h10 * h_ * slope_[k] + h01 * value_[k + 1] + h11 * h_ * slope_[k + 1];
}

}  // namespace mollify
