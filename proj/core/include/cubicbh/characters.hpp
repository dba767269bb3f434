#pragma once

// Dirichlet characters mod q with exact root-of-unity values.
//
// (Z/q)^* is split by CRT into prime-power components; each component is
// cyclic (odd p, or 2 and 4) or C2 x C_{2^(e-2)} (2^e, e >= 3, generated by
// -1 and 5). A character is an exponent vector over those cyclic factors:
// chi(g_i) = e(t_i / d_i). Discrete logs come from full per-component tables.

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cubicbh/arith.hpp"

namespace cubicbh {

// e(num / den) = exp(2 pi i num / den), kept reduced with 0 <= num < den.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(i64 num, i64 den);

  static RootOfUnity one() { return {}; }

  i64 num() const { return num_; }
  i64 den() const { return den_; }
  bool is_one() const { return num_ == 0; }
  // Order of the root in the unit circle group; equals den().
  i64 order() const { return den_; }

  std::complex<double> value() const;
  RootOfUnity conj() const { return {den_ - num_, den_}; }
  RootOfUnity pow(i64 k) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  i64 num_ = 0;
  i64 den_ = 1;
};

// Value of a character: a root of unity, or zero when gcd(n, q) > 1.
using CharValue = std::optional<RootOfUnity>;

std::complex<double> to_complex(const CharValue& v);

// e(x) for a real phase x, reduced to [-1/2, 1/2) before evaluation.
std::complex<double> unit_phase(double x);

// e(num / den) for an exact rational phase.
std::complex<double> unit_phase(i64 num, i64 den);

namespace detail {

struct CyclicFactor {
  u64 generator = 1;  // generator inside its prime-power component
  u64 order = 1;
  std::size_t component = 0;
  int slot = 0;  // which dlog table of the component
};

struct Component {
  u64 p = 0;
  int e = 0;
  u64 pe = 1;
  // dlog[slot][r] for r a unit mod pe.
  std::array<std::vector<std::uint32_t>, 2> dlog;
};

struct GroupData {
  u64 q = 1;
  u64 size = 1;  // phi(q)
  u64 exponent = 1;  // lcm of factor orders
  std::vector<Component> components;
  std::vector<CyclicFactor> factors;
};

}  // namespace detail

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const detail::GroupData> group,
                     std::vector<u64> exponents);

  u64 modulus() const { return group_->q; }
  const std::vector<u64>& exponents() const { return exponents_; }

  CharValue evaluate(i64 n) const;
  std::complex<double> operator()(i64 n) const { return to_complex(evaluate(n)); }

  u64 order() const;
  bool is_principal() const;
  bool is_primitive() const;

  DirichletCharacter conj() const;
  DirichletCharacter pow(u64 k) const;

  friend bool operator==(const DirichletCharacter& a,
                         const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  std::shared_ptr<const detail::GroupData> group_;
  std::vector<u64> exponents_;
};

inline constexpr u64 kCharacterModulusBound = 1'000'000;

class CharacterGroup {
 public:
  explicit CharacterGroup(u64 q);

  u64 modulus() const { return data_->q; }
  u64 size() const { return data_->size; }
  u64 exponent() const { return data_->exponent; }
  // (generator, order) of each cyclic factor, component-local generators.
  std::vector<std::pair<u64, u64>> cyclic_factors() const;

  // Mixed-radix enumeration: index in [0, size()).
  DirichletCharacter character(u64 index) const;
  std::vector<DirichletCharacter> characters() const;
  DirichletCharacter principal() const;
  DirichletCharacter from_exponents(std::vector<u64> exponents) const;

 private:
  std::shared_ptr<const detail::GroupData> data_;
};

// tau(chi) = sum_{r mod q} chi(r) e(r/q).
std::complex<double> gauss_sum(const DirichletCharacter& chi);

// The two characters of order 3 mod p; the first maps primitive_root(p) to
// e(1/3), the second is its conjugate.
std::array<DirichletCharacter, 2> cubic_characters(u64 p);

// n_{k,p} as 1 + chi_1(-k) + chi_2(-k) for p = 1 (mod 3), else 1.
int np_via_characters(i64 k, u64 p);

struct PolyaVinogradovResult {
  double max_window_sum = 0.0;
  double bound = 0.0;
  bool pass = false;
};

// Maximum of |sum_{M < n <= M+N} chi(n)| over 0 <= M < M+N <= 2q, against
// 6 sqrt(q) log q.
PolyaVinogradovResult polya_vinogradov_check(const DirichletCharacter& chi);

}  // namespace cubicbh
