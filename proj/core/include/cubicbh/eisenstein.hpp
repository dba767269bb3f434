#pragma once

// Arithmetic in Z[w], w = e(1/3), w^2 = -1 - w.
//
// Primary convention: a + bw is primary when a = 2 and b = 0 (mod 3). Every
// element with norm prime to 3 has exactly one primary associate, and the
// cubic residue symbol is reciprocal between coprime primary elements.

#include <optional>
#include <string>
#include <vector>

#include "cubicbh/arith.hpp"
#include "cubicbh/characters.hpp"

namespace cubicbh {

struct EisensteinInt {
  i64 a = 0;
  i64 b = 0;

  static EisensteinInt omega() { return {0, 1}; }

  i64 norm() const;
  EisensteinInt conj() const;
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_unit() const { return norm() == 1; }

  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

// All arithmetic is overflow-checked.
EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x);
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);

// "a+bw" rendering, e.g. "2+3w", "1-w", "-4".
std::string to_string(const EisensteinInt& x);
// Parses "a,b" (the CLI form).
EisensteinInt parse_eisenstein(const std::string& text);

// The six units 1, -w^2 (= 1 + w), w, -1, w^2, -w in rotation order.
const std::vector<EisensteinInt>& eisenstein_units();

struct EisDivMod {
  EisensteinInt quotient;
  EisensteinInt remainder;
};

// x = q y + r with N(r) < N(y); q rounds the exact coordinates of x / y.
EisDivMod eis_divmod(const EisensteinInt& x, const EisensteinInt& y);
bool divides(const EisensteinInt& d, const EisensteinInt& x);
EisensteinInt eis_gcd(EisensteinInt x, EisensteinInt y);

bool is_primary(const EisensteinInt& x);
// Throws DomainError when 3 | N(x).
EisensteinInt primary_associate(const EisensteinInt& x);

enum class SplitKind { split, inert, ramified };

struct SplitResult {
  SplitKind kind = SplitKind::inert;
  // split: {pi, conj(pi)}, both primary, N = p. inert: {p}. ramified: {1-w}.
  std::vector<EisensteinInt> factors;
  int multiplicity = 1;
};

SplitResult factor_rational_prime(u64 p);

struct EisPrimeFactor {
  EisensteinInt prime;
  int exponent = 0;
};

// Prime factorisation up to a unit, primes primary where 3 does not divide
// their norm. Trial division on N(x).
std::vector<EisPrimeFactor> factor_eisenstein(const EisensteinInt& x);

// (n / pi)_3 as e(j/3), or nullopt when the symbol vanishes (a prime factor
// of pi divides n). pi must be primary; composite pi by multiplicativity.
CharValue cubic_residue_symbol(const EisensteinInt& n, const EisensteinInt& pi);

// Renders a symbol value as 1, w, w2 or 0.
std::string symbol_label(const CharValue& v);

struct ReciprocityResult {
  CharValue alpha_over_beta;
  CharValue beta_over_alpha;
  bool equal = false;
};

ReciprocityResult reciprocity_check(const EisensteinInt& alpha,
                                    const EisensteinInt& beta);

// n_{k,p} from the cubic symbols over the primes above p: 1 + (k/pi)_3 +
// (k/conj pi)_3 when p splits, (k/p)_3 when p is inert. Requires p != 3 and
// p not dividing k.
int np_via_symbols(i64 k, u64 p);

}  // namespace cubicbh
