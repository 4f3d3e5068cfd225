#include "mollify/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "mollify/arith.hpp"
#include "mollify/errors.hpp"
#include "mollify/summation.hpp"

namespace mollify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e(m / n) with the angle reduced to (-1/2, 1/2] turns before scaling.
std::complex<double> unit_root(std::int64_t m, std::int64_t n) {
  std::int64_t r = mod(m, n);
  if (2 * r > n) r -= n;
  const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

int valuation(int k, int p) {
  if (k == 0) return 1 << 29;
  int v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

int primitive_root(int p, int pe) {
  const int phi = static_cast<int>(euler_phi(pe));
  const auto f = factorize(phi);
  for (int g = 2; g < pe; ++g) {
    if (gcd(g, p) != 1) continue;
    bool ok = true;
    for (auto [r, e] : f) {
      std::int64_t x = 1;
      const std::int64_t exp = phi / r;
      for (std::int64_t i = 0; i < exp; ++i) x = x * g % pe;
      if (x == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

}  // namespace

CharacterGroup::CharacterGroup(int q) : q_(q) {
  if (q < 1) throw PreconditionError("modulus must be at least 1");
  unit_.resize(static_cast<std::size_t>(q));
  for (int n = 0; n < q; ++n) unit_[static_cast<std::size_t>(n)] = gcd(n, q) == 1;

  auto add_cyclic = [&](int p, int pe, int e, int generator, int order, bool minus_one) {
    Component c;
    c.prime = p;
    c.prime_power = pe;
    c.local_exponent = e;
    c.order = order;
    c.is_two_minus_one = minus_one;
    std::vector<int> local_log(static_cast<std::size_t>(pe), -1);
    std::int64_t x = 1;
    for (int i = 0; i < order; ++i) {
      local_log[static_cast<std::size_t>(x)] = i;
      x = x * generator % pe;
    }
    c.log.assign(static_cast<std::size_t>(q), -1);
    for (int n = 0; n < q; ++n) {
      if (!unit_[static_cast<std::size_t>(n)]) continue;
      int r = n % pe;
      if (p == 2 && pe >= 8) {
        // n = (-1)^a 5^b mod 2^e
        const bool neg = (r % 4) == 3;
        if (minus_one) {
          c.log[static_cast<std::size_t>(n)] = neg ? 1 : 0;
          continue;
        }
        if (neg) r = pe - r;
      }
      c.log[static_cast<std::size_t>(n)] = local_log[static_cast<std::size_t>(r)];
    }
    comps_.push_back(std::move(c));
  };

  for (auto [p64, e] : factorize(q)) {
    const int p = static_cast<int>(p64);
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 1) continue;  // trivial group
      add_cyclic(2, pe, e, pe - 1, 2, true);
      if (e >= 3) add_cyclic(2, pe, e, 5, pe / 4, false);
    } else {
      add_cyclic(p, pe, e, primitive_root(p, pe), pe / p * (p - 1), false);
    }
  }
  for (const auto& c : comps_) {
    size_ *= c.order;
    exponent_ = std::lcm(exponent_, c.order);
  }
}

std::vector<int> CharacterGroup::exponents(int index) const {
  if (index < 0 || index >= size_) throw PreconditionError("character index out of range");
  std::vector<int> k(comps_.size());
  for (std::size_t j = comps_.size(); j-- > 0;) {
    k[j] = index % comps_[j].order;
    index /= comps_[j].order;
  }
  return k;
}

int CharacterGroup::index_of(const std::vector<int>& k) const {
  int idx = 0;
  for (std::size_t j = 0; j < comps_.size(); ++j) idx = idx * comps_[j].order + k[j];
  return idx;
}

int CharacterGroup::conductor(int index) const {
  const auto k = exponents(index);
  int cond = 1;
  int two_minus = 0;
  int two_five = -1;
  int two_e = 0;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    const Component& c = comps_[j];
    if (c.prime == 2) {
      two_e = c.local_exponent;
      if (c.is_two_minus_one) {
        two_minus = k[j];
      } else {
        two_five = k[j];
      }
      continue;
    }
    if (k[j] == 0) continue;
    // Trivial on 1 + p^f Z exactly when p^{e-f} divides the exponent.
    const int f = std::max(1, c.local_exponent - valuation(k[j], c.prime));
    for (int i = 0; i < f; ++i) cond *= c.prime;
  }
  if (two_e >= 2) {
    int f = 0;
    if (two_five > 0) {
      f = std::max(3, two_e - valuation(two_five, 2));
    } else if (two_minus == 1) {
      f = 2;
    }
    cond <<= f;
  }
  return cond;
}

bool CharacterGroup::is_even(int index) const {
  // chi(-1): -1 has log order/2 in odd cyclic components and sits on the -1
  // generator for 2^e; it is trivial in the 5 component.
  const auto k = exponents(index);
  int parity = 0;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    const Component& c = comps_[j];
    if (c.prime == 2) {
      if (c.is_two_minus_one) parity += k[j];
    } else {
      parity += k[j];
    }
  }
  return parity % 2 == 0;
}

DirichletCharacter CharacterGroup::character(int index) const {
  DirichletCharacter chi;
  chi.modulus_ = q_;
  chi.index_ = index;
  chi.exponents_ = exponents(index);
  chi.conductor_ = conductor(index);
  chi.even_ = is_even(index);

  std::vector<int> conj(chi.exponents_.size());
  int order = 1;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    const int kj = chi.exponents_[j];
    conj[j] = kj == 0 ? 0 : comps_[j].order - kj;
    order = std::lcm(order, comps_[j].order / std::gcd(kj, comps_[j].order));
  }
  chi.order_ = order;
  chi.conjugate_index_ = index_of(conj);

  std::vector<std::complex<double>> roots(static_cast<std::size_t>(exponent_));
  for (int m = 0; m < exponent_; ++m) roots[static_cast<std::size_t>(m)] = unit_root(m, exponent_);
  chi.values_.assign(static_cast<std::size_t>(q_), 0.0);
  for (int n = 0; n < q_; ++n) {
    if (!unit_[static_cast<std::size_t>(n)]) continue;
    std::int64_t m = 0;
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      const auto& c = comps_[j];
      m += static_cast<std::int64_t>(chi.exponents_[j]) * c.log[static_cast<std::size_t>(n)] *
           (exponent_ / c.order);
    }
    chi.values_[static_cast<std::size_t>(n)] = roots[static_cast<std::size_t>(mod(m, exponent_))];
  }
  return chi;
}

std::vector<int> CharacterGroup::even_primitive_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size_; ++i)
    if (conductor(i) == q_ && is_even(i)) out.push_back(i);
  return out;
}

std::vector<DirichletCharacter> enumerate(int q) {
  const CharacterGroup group(q);
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(group.size()));
  for (int i = 0; i < group.size(); ++i) out.push_back(group.character(i));
  return out;
}

int phi_star(int q) {
  const CharacterGroup group(q);
  int count = 0;
  for (int i = 0; i < group.size(); ++i) count += group.conductor(i) == q;
  return count;
}

int phi_plus(int q) { return static_cast<int>(CharacterGroup(q).even_primitive_indices().size()); }

std::complex<double> gauss_sum(const DirichletCharacter& chi) {
  const int q = chi.modulus();
  CompensatedComplexSum acc;
  for (int h = 0; h < q; ++h) {
    const auto v = chi(h);
    if (v == std::complex<double>(0.0)) continue;
    acc += v * unit_root(h, q);
  }
  return acc.value();
}

std::complex<double> root_number(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) {
    throw PreconditionError("root number requires a primitive character (conductor " +
                            std::to_string(chi.conductor()) + ", modulus " +
                            std::to_string(chi.modulus()) + ")");
  }
  return gauss_sum(chi) / std::sqrt(static_cast<double>(chi.modulus()));
}

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n) {
  if (q < 1) throw PreconditionError("ramanujan_sum: q must be positive");
  const std::int64_t g = gcd(q, n == 0 ? q : n);
  std::int64_t total = 0;
  for (std::int64_t d : divisors(g)) total += d * mobius(q / d);
  return total;
}

double even_primitive_pair_sum(std::int64_t q, std::int64_t m, std::int64_t n) {
  if (q < 1) throw PreconditionError("modulus must be positive");
  if (gcd(m * n, q) != 1) throw PreconditionError("even_primitive_pair_sum needs gcd(mn, q) = 1");
  std::int64_t total = 0;
  for (std::int64_t w : divisors(q)) {
    const std::int64_t term = mobius(q / w) * euler_phi(w);
    if ((m - n) % w == 0) total += term;
    if ((m + n) % w == 0) total += term;
  }
  return 0.5 * static_cast<double>(total);
}

}  // namespace mollify
