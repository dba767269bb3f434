#include "cubicbh/eisenstein.hpp"

#include <cmath>
#include <sstream>

#include "cubicbh/errors.hpp"

namespace cubicbh {

namespace {

i64 narrow(i128 v) {
  if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN)) {
    throw OverflowError("Eisenstein integer coordinate overflow");
  }
  return static_cast<i64>(v);
}

// Nearest integer to num / den (den > 0), ties toward +infinity.
i64 round_div(i128 num, i128 den) {
  i128 t = 2 * num + den;
  i128 d = 2 * den;
  i128 q = t / d;
  if ((t % d != 0) && ((t < 0) != (d < 0))) --q;
  return narrow(q);
}

}  // namespace

i64 EisensteinInt::norm() const {
  const i128 A = a;
  const i128 B = b;
  return narrow(A * A - A * B + B * B);
}

EisensteinInt EisensteinInt::conj() const {
  // conj(w) = w^2 = -1 - w.
  return {checked_add(a, -b), narrow(-static_cast<i128>(b))};
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
  return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

EisensteinInt operator-(const EisensteinInt& x) {
  return {narrow(-static_cast<i128>(x.a)), narrow(-static_cast<i128>(x.b))};
}

EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
  return x + (-y);
}

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
  const i128 ac = static_cast<i128>(x.a) * y.a;
  const i128 bd = static_cast<i128>(x.b) * y.b;
  const i128 ad = static_cast<i128>(x.a) * y.b;
  const i128 bc = static_cast<i128>(x.b) * y.a;
  return {narrow(ac - bd), narrow(ad + bc - bd)};
}

std::string to_string(const EisensteinInt& x) {
  std::ostringstream os;
  if (x.b == 0) {
    os << x.a;
    return os.str();
  }
  if (x.a != 0) os << x.a;
  if (x.b > 0 && x.a != 0) os << '+';
  if (x.b == -1) {
    os << '-';
  } else if (x.b != 1) {
    os << x.b;
  }
  os << 'w';
  return os.str();
}

EisensteinInt parse_eisenstein(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("expected Eisenstein integer as 'a,b', got '" + text + "'");
  }
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    auto trim = [](std::string t) {
      const auto b = t.find_first_not_of(' ');
      const auto e = t.find_last_not_of(' ');
      return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    const std::string sa = trim(text.substr(0, comma));
    const std::string sb = trim(text.substr(comma + 1));
    const i64 a = std::stoll(sa, &used_a);
    const i64 b = std::stoll(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size()) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("malformed Eisenstein integer '" + text + "'");
  }
}

const std::vector<EisensteinInt>& eisenstein_units() {
  static const std::vector<EisensteinInt> units = {
      {1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  return units;
}

EisDivMod eis_divmod(const EisensteinInt& x, const EisensteinInt& y) {
  if (y.is_zero()) throw DivisionByZero("eis_divmod: division by zero");
  const i128 n = y.norm();
  const EisensteinInt yc = y.conj();
  // x * conj(y), computed wide.
  const i128 ac = static_cast<i128>(x.a) * yc.a;
  const i128 bd = static_cast<i128>(x.b) * yc.b;
  const i128 u = ac - bd;
  const i128 v = static_cast<i128>(x.a) * yc.b + static_cast<i128>(x.b) * yc.a - bd;
  const EisensteinInt q{round_div(u, n), round_div(v, n)};
  return {q, x - q * y};
}

bool divides(const EisensteinInt& d, const EisensteinInt& x) {
  if (d.is_zero()) return x.is_zero();
  return eis_divmod(x, d).remainder.is_zero();
}

EisensteinInt eis_gcd(EisensteinInt x, EisensteinInt y) {
  while (!y.is_zero()) {
    EisensteinInt r = eis_divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return x;
}

bool is_primary(const EisensteinInt& x) {
  return mod_floor(x.a, 3) == 2 && mod_floor(x.b, 3) == 0;
}

EisensteinInt primary_associate(const EisensteinInt& x) {
  if (x.norm() % 3 == 0) {
    throw DomainError("primary_associate: 3 divides N(" + to_string(x) + ")");
  }
  for (const auto& u : eisenstein_units()) {
    const EisensteinInt y = u * x;
    if (is_primary(y)) return y;
  }
  throw DomainError("primary_associate: no primary associate");  // unreachable
}

SplitResult factor_rational_prime(u64 p) {
  if (!is_prime(p)) {
    throw DomainError("factor_rational_prime: " + std::to_string(p) +
                      " is not prime");
  }
  SplitResult out;
  if (p == 3) {
    out.kind = SplitKind::ramified;
    out.factors = {{1, -1}};
    out.multiplicity = 2;
    return out;
  }
  if (p % 3 == 2) {
    out.kind = SplitKind::inert;
    out.factors = {{static_cast<i64>(p), 0}};
    return out;
  }
  // r is a primitive cube root of unity mod p, so (p, r - w) is a prime
  // ideal of norm p.
  const u64 r = powmod(primitive_root(p), (p - 1) / 3, p);
  EisensteinInt pi = primary_associate(
      eis_gcd({static_cast<i64>(p), 0}, {static_cast<i64>(r), -1}));
  if (pi.norm() != static_cast<i64>(p)) {
    throw DomainError("factor_rational_prime: gcd did not isolate a prime");
  }
  EisensteinInt other = pi.conj();
  if (pi.b < 0) std::swap(pi, other);
  out.kind = SplitKind::split;
  out.factors = {pi, other};
  return out;
}

std::vector<EisPrimeFactor> factor_eisenstein(const EisensteinInt& x) {
  if (x.is_zero()) throw DomainError("factor_eisenstein: zero has no factorisation");
  std::vector<EisPrimeFactor> out;
  EisensteinInt rest = x;
  auto strip = [&](const EisensteinInt& prime) {
    int e = 0;
    for (;;) {
      const auto dm = eis_divmod(rest, prime);
      if (!dm.remainder.is_zero()) break;
      rest = dm.quotient;
      ++e;
    }
    if (e > 0) out.push_back({prime, e});
  };
  for (const auto& [p, e] : factorize(static_cast<u64>(x.norm())).factors) {
    const auto split = factor_rational_prime(p);
    for (const auto& prime : split.factors) strip(prime);
  }
  if (!rest.is_unit()) {
    throw DomainError("factor_eisenstein: incomplete factorisation");
  }
  return out;
}

namespace {

// (n / pi)_3 for a prime pi with 3 not dividing N(pi), by the Euler criterion.
CharValue symbol_at_prime(const EisensteinInt& n, const EisensteinInt& pi) {
  const EisensteinInt base = eis_divmod(n, pi).remainder;
  if (base.is_zero()) return std::nullopt;
  u64 exp = static_cast<u64>(pi.norm() - 1) / 3;
  EisensteinInt result{1, 0};
  EisensteinInt sq = base;
  while (exp > 0) {
    if (exp & 1) result = eis_divmod(result * sq, pi).remainder;
    sq = eis_divmod(sq * sq, pi).remainder;
    exp >>= 1;
  }
  const EisensteinInt cube_roots[3] = {{1, 0}, {0, 1}, {-1, -1}};
  for (int j = 0; j < 3; ++j) {
    if (divides(pi, result - cube_roots[j])) return RootOfUnity(j, 3);
  }
  throw DomainError("cubic_residue_symbol: " + to_string(pi) +
                    " is not prime (Euler criterion failed)");
}

}  // namespace

CharValue cubic_residue_symbol(const EisensteinInt& n, const EisensteinInt& pi) {
  if (pi.norm() % 3 == 0) {
    throw DomainError("cubic_residue_symbol: 3 divides N(" + to_string(pi) + ")");
  }
  if (!is_primary(pi)) {
    throw DomainError("cubic_residue_symbol: " + to_string(pi) +
                      " is not primary");
  }
  RootOfUnity acc = RootOfUnity::one();
  for (const auto& [prime, e] : factor_eisenstein(pi)) {
    const auto v = symbol_at_prime(n, prime);
    if (!v) return std::nullopt;
    acc = acc * v->pow(e);
  }
  return acc;
}

std::string symbol_label(const CharValue& v) {
  if (!v) return "0";
  if (v->is_one()) return "1";
  if (v->den() != 3) return "?";
  return v->num() == 1 ? "w" : "w2";
}

ReciprocityResult reciprocity_check(const EisensteinInt& alpha,
                                    const EisensteinInt& beta) {
  for (const auto* x : {&alpha, &beta}) {
    if (x->norm() % 3 == 0 || !is_primary(*x)) {
      throw DomainError("reciprocity_check: " + to_string(*x) +
                        " is not primary with norm prime to 3");
    }
  }
  if (!eis_gcd(alpha, beta).is_unit()) {
    throw DomainError("reciprocity_check: arguments are not coprime");
  }
  ReciprocityResult r;
  r.alpha_over_beta = cubic_residue_symbol(alpha, beta);
  r.beta_over_alpha = cubic_residue_symbol(beta, alpha);
  r.equal = r.alpha_over_beta == r.beta_over_alpha;
  return r;
}

int np_via_symbols(i64 k, u64 p) {
  if (p == 3 || !is_prime(p) || mod_floor(k, p) == 0) {
    throw DomainError("np_via_symbols: needs prime p != 3 with p not dividing k");
  }
  const auto split = factor_rational_prime(p);
  const EisensteinInt kk{k, 0};
  std::complex<double> total{0.0, 0.0};
  if (split.kind == SplitKind::split) {
    total = 1.0 + to_complex(cubic_residue_symbol(kk, split.factors[0])) +
            to_complex(cubic_residue_symbol(kk, split.factors[1]));
  } else {
    // p = 2 (mod 3): the single inert prime. p is primary as an element
    // since p = 2 (mod 3).
    total = to_complex(cubic_residue_symbol(kk, split.factors[0]));
  }
  return static_cast<int>(std::lround(total.real()));
}

}  // namespace cubicbh
