#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "mollify/functionals.hpp"
#include "mollify/polynomial.hpp"

namespace gen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(20240611);
  return r;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }
inline int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline mollify::Polynomial polynomial(int max_degree, bool vanish_at_zero = false) {
  const int d = integer(0, max_degree);
  std::vector<double> c(static_cast<std::size_t>(d + 1));
  for (auto& x : c) x = uniform(-3, 3);
  if (vanish_at_zero) c[0] = 0.0;
  return mollify::Polynomial(c);
}

// Random admissible second-moment spec.
inline mollify::MollifierSpec spec() {
  mollify::MollifierSpec s;
  s.theta1 = uniform(0.2, 0.5);
  s.theta3 = uniform(0.2, 0.5);
  s.theta2 = uniform(0.01, 0.95) * std::min(s.theta1, s.theta3);
  s.P1 = polynomial(5, true);
  s.P2 = polynomial(5, true);
  s.P3 = polynomial(3, true);
  return s;
}

// Composite Simpson on [0, 1] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, int n = 10000) {
  const double h = 1.0 / n;
  double acc = f(0.0) + f(1.0);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

}  // namespace gen
