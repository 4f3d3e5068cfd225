#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace mollify {

class CharacterGroup;

// A Dirichlet character mod q stored as its full value table. Values on units
// are e(m / exponent) with m taken from an exact integer table, so no angle
// drift accumulates.
class DirichletCharacter {
 public:
  int modulus() const noexcept { return modulus_; }
  // Position in CharacterGroup order (lexicographic in component exponents).
  int index() const noexcept { return index_; }
  int conductor() const noexcept { return conductor_; }
  int order() const noexcept { return order_; }
  bool is_even() const noexcept { return even_; }
  bool is_primitive() const noexcept { return conductor_ == modulus_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  std::complex<double> operator()(std::int64_t n) const noexcept {
    const std::int64_t r = n % modulus_;
    return values_[static_cast<std::size_t>(r < 0 ? r + modulus_ : r)];
  }
  const std::vector<std::complex<double>>& values() const noexcept { return values_; }
  // Index of the conjugate character in the same group.
  int conjugate_index() const noexcept { return conjugate_index_; }

 private:
  friend class CharacterGroup;
  int modulus_ = 1;
  int index_ = 0;
  int conductor_ = 1;
  int order_ = 1;
  bool even_ = true;
  int conjugate_index_ = 0;
  std::vector<int> exponents_;
  std::vector<std::complex<double>> values_;
};

// (Z/q)^x decomposed into cyclic components: one per odd prime power, and
// for 2^e the components generated by -1 and 5.
class CharacterGroup {
 public:
  explicit CharacterGroup(int q);

  int modulus() const noexcept { return q_; }
  int size() const noexcept { return size_; }  // phi(q)

  DirichletCharacter character(int index) const;
  int conductor(int index) const;
  bool is_even(int index) const;
  std::vector<int> exponents(int index) const;
  int index_of(const std::vector<int>& exponents) const;

  // Indices in group order of the even primitive characters.
  std::vector<int> even_primitive_indices() const;

 private:
  struct Component {
    int prime = 0;
    int prime_power = 1;  // p^e of the local factor
    int local_exponent = 0;
    int order = 1;
    bool is_two_minus_one = false;    // the -1 generator of (Z/2^e)^x
    std::vector<int> log;             // discrete log of each residue mod q, -1 off units
  };

  int q_;
  int size_ = 1;
  int exponent_ = 1;  // lcm of component orders
  std::vector<Component> comps_;
  std::vector<bool> unit_;
};

std::vector<DirichletCharacter> enumerate(int q);
int phi_star(int q);
int phi_plus(int q);

std::complex<double> gauss_sum(const DirichletCharacter& chi);
// tau(chi) / sqrt(q); PreconditionError for imprimitive characters.
std::complex<double> root_number(const DirichletCharacter& chi);
// c_q(n) from sum_{d | (q, n)} d mu(q / d).
std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n);
// Closed form for sum over even primitive chi mod q of chi(m) conj(chi(n)),
// taking the +- as the sum of the w | m - n and w | m + n terms.
double even_primitive_pair_sum(std::int64_t q, std::int64_t m, std::int64_t n);

}  // namespace mollify
