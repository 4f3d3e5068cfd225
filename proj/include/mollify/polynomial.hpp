#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mollify {

// Real polynomial in one variable; coeffs()[k] is the coefficient of x^k.
// Trailing zeros are trimmed, so the zero polynomial has no coefficients and
// degree() == -1.
class Polynomial {
 public:
  static constexpr int kMaxDegree = 64;

  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial monomial(int k, double c = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  // Coefficient of x^k, zero beyond the degree.
  double coeff(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0.0;
  }

  double operator()(double x) const noexcept { return eval(*this, x); }

  friend double eval(const Polynomial& p, double x) noexcept;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(double a, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

double eval(const Polynomial& p, double x) noexcept;
Polynomial derivative(const Polynomial& p);
// Exact integral over [0, 1].
double integrate01(const Polynomial& p);
// Antiderivative vanishing at 0.
Polynomial antiderivative(const Polynomial& p);
Polynomial mul(const Polynomial& p, const Polynomial& q);
// p(a + b x), expanded binomially.
Polynomial compose_affine(const Polynomial& p, double a, double b);

inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

}  // namespace mollify
