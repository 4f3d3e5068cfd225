#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "mollify/polynomial.hpp"

namespace mollify {

enum class KernelKind { V, V1, F };

const char* to_string(KernelKind kind) noexcept;
KernelKind parse_kernel_kind(const std::string& name);

// prod_{k=0}^{K} (1 - (s / (1/2 + 2k))^2)^2
Polynomial default_G(int K);

struct KernelConfig {
  Polynomial G = default_G(2);
  Polynomial G1{1.0};
  int pole_kill_count = 2;
  // Integration line for x >= 1; for x < 1 the line left of the pole at s = 0
  // and the residue there (G(0) = 1) is added back.
  double contour_sigma = 1.0;
  double left_sigma = -0.25;
  double t_cutoff = 60.0;
  double step = 1.0 / 64.0;

  static KernelConfig with_pole_kill_count(int K);
};

// Checks evenness, G(0) = 1 and the double zeros at +-(1/2 + 2k), k <= K.
void validate(const KernelConfig& cfg);

// One of the Mellin-type kernels, evaluated by trapezoidal quadrature on a
// vertical line:
//   V(x)  = (1/2 pi i) int Gamma^2(s/2+1/4)/Gamma^2(1/4) G(s)/s pi^{-s} x^{-s} ds
//   F(x)  = (1/2 pi i) int Gamma(s/2+1/4)Gamma(-s/2+1/4)/Gamma^2(1/4) G(s)/s x^{-s} ds
//   V1(x) = (1/2 pi i) int Gamma(s/2+1/4)/Gamma(1/4) G1(s)/s pi^{-s/2} x^{-s} ds
// The integrand samples (everything except x^{-s}) are tabulated once per
// line, so an evaluation costs one pass of sin/cos over the nodes.
// Immutable after construction; safe for concurrent readers.
class Kernel {
 public:
  Kernel(KernelKind kind, KernelConfig cfg);

  KernelKind kind() const noexcept { return kind_; }
  const KernelConfig& config() const noexcept { return cfg_; }

  double operator()(double x) const { return eval(x); }
  double eval(double x) const;
  // Value at x and x * d/dx of the kernel.
  std::pair<double, double> eval_with_log_derivative(double x) const;
  // Direct evaluation on an arbitrary admissible line (tabulated on the fly).
  double eval_on_line(double x, double sigma) const;

  // Open interval of admissible real parts (excluding the pole at 0).
  std::pair<double, double> admissible_strip() const noexcept;

 private:
  struct Line {
    double sigma = 0.0;
    std::vector<double> t;                     // nodes t_j >= 0
    std::vector<std::complex<double>> weight;  // A(s_j) * h / 2pi, doubled for t_j > 0
    std::vector<std::complex<double>> s;
    double tail_mass = 0.0;  // sum of |weights| over the last unit of t
    double mass = 0.0;
  };

  Line make_line(double sigma) const;
  std::complex<double> integrand(std::complex<double> s) const;
  std::pair<double, double> sum_line(const Line& line, double x, bool want_derivative) const;

  KernelKind kind_;
  KernelConfig cfg_;
  Line right_;
  Line left_;
};

// Tabulated kernel on a geometric x-grid with cubic Hermite interpolation in
// log x using exact derivatives. Outside [x_lo, x_hi] the kernel is evaluated
// directly. Built eagerly; immutable afterwards.
class KernelTable {
 public:
  KernelTable(const Kernel& kernel, double x_lo, double x_hi, double nodes_per_unit_log = 256.0);

  double operator()(double x) const;
  double x_lo() const noexcept { return x_lo_; }
  double x_hi() const noexcept { return x_hi_; }
  const Kernel& kernel() const noexcept { return kernel_; }

 private:
  Kernel kernel_;
  double x_lo_;
  double x_hi_;
  double u_lo_;
  double h_;
  std::vector<double> value_;
  std::vector<double> slope_;  // d/du at the nodes, u = log x
};

}  // namespace mollify
