#include "mollify/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mollify/errors.hpp"

namespace mollify {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int k, double c) {
  if (k < 0) throw PreconditionError("monomial degree must be nonnegative");
  std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
  v[static_cast<std::size_t>(k)] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (degree() > kMaxDegree) {
    throw PreconditionError("polynomial degree " + std::to_string(degree()) +
                            " exceeds cap " + std::to_string(kMaxDegree));
  }
}

double eval(const Polynomial& p, double x) noexcept {
  double acc = 0.0;
  for (auto it = p.coeffs_.rbegin(); it != p.coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<double> r(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(k) + q.coeff(k);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-1.0) * q; }

Polynomial operator*(double a, const Polynomial& p) {
  std::vector<double> r(p.coeffs_);
  for (double& c : r) c *= a;
  return Polynomial(std::move(r));
}

Polynomial derivative(const Polynomial& p) {
  auto c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<double> r(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) r[k - 1] = static_cast<double>(k) * c[k];
  return Polynomial(std::move(r));
}

double integrate01(const Polynomial& p) {
  double acc = 0.0;
  auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] / static_cast<double>(k + 1);
  return acc;
}

Polynomial antiderivative(const Polynomial& p) {
  auto c = p.coeffs();
  if (c.empty()) return {};
  std::vector<double> r(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) r[k + 1] = c[k] / static_cast<double>(k + 1);
  return Polynomial(std::move(r));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  auto a = p.coeffs();
  auto b = q.coeffs();
  if (p.degree() + q.degree() > Polynomial::kMaxDegree) {
    throw PreconditionError("product degree exceeds cap");
  }
  std::vector<double> r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return Polynomial(std::move(r));
}

Polynomial compose_affine(const Polynomial& p, double a, double b) {
  auto c = p.coeffs();
  if (c.empty()) return {};
  // sum_k c_k (a + b x)^k = sum_j x^j b^j sum_{k>=j} C(k, j) a^(k-j) c_k
  std::vector<double> r(c.size(), 0.0);
  std::vector<double> binom(c.size(), 0.0);  // row k of Pascal's triangle
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t j = k; j > 0; --j) binom[j] += binom[j - 1];
    binom[0] = 1.0;
    double apow = 1.0;  // a^(k-j), built from j = k downwards
    for (std::size_t j = k + 1; j-- > 0;) {
      r[j] += c[k] * binom[j] * apow * std::pow(b, static_cast<double>(j));
      apow *= a;
    }
  }
  return Polynomial(std::move(r));
}

}  // namespace mollify
