#include "cubicbh/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cubicbh/errors.hpp"

namespace cubicbh {

i64 checked_mul(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return out;
}

i64 checked_add(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return out;
}

u64 mod_floor(i64 a, u64 m) {
  const i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i128>(m) : r);
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool Factorization::squarefree() const {
  for (const auto& f : factors) {
    if (f.e > 1) return false;
  }
  return true;
}

u64 Factorization::radical() const {
  u64 r = 1;
  for (const auto& f : factors) r *= f.p;
  return r;
}

std::vector<u64> Factorization::divisors() const {
  std::vector<u64> out{1};
  for (const auto& f : factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (int i = 1; i <= f.e; ++i) {
      pk *= f.p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization f;
  f.n = n;
  u64 m = n;
  auto take = [&](u64 p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  take(2);
  take(3);
  for (u64 p = 5; p * p <= m; p += 6) {
    take(p);
    take(p + 2);
  }
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

namespace {

int mobius_of(const Factorization& f) {
  if (!f.squarefree()) return 0;
  return (f.omega() % 2 == 0) ? 1 : -1;
}

u64 phi_of(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

VonMangoldt lambda_of(const Factorization& f) {
  if (f.factors.size() != 1) return {};
  const auto& [p, e] = f.factors.front();
  return {p, e, std::log(static_cast<double>(p))};
}

u64 tau_of(const Factorization& f) {
  u64 d = 1;
  for (const auto& pe : f.factors) d *= static_cast<u64>(pe.e + 1);
  return d;
}

void require_positive(u64 n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + ": n must be >= 1");
}

}  // namespace

int mobius(u64 n) {
  require_positive(n, "mobius");
  return mobius_of(factorize(n));
}

u64 euler_phi(u64 n) {
  require_positive(n, "euler_phi");
  return phi_of(factorize(n));
}

VonMangoldt von_mangoldt(u64 n) {
  require_positive(n, "von_mangoldt");
  return lambda_of(factorize(n));
}

u64 divisor_count(u64 n) {
  require_positive(n, "divisor_count");
  return tau_of(factorize(n));
}

SieveTables::SieveTables(u64 limit, u64 capacity) : limit_(limit) {
  if (limit == 0) throw DomainError("sieve: limit must be >= 1");
  if (limit > capacity) {
    throw CapacityError("sieve: limit " + std::to_string(limit) +
                        " exceeds capacity " + std::to_string(capacity));
  }
  spf_.assign(limit + 1, 0);
  spf_[1] = 1;
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(i);
    }
    // Linear sieve: each composite is written once, by its least prime.
    for (u64 p : primes_) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = static_cast<std::uint32_t>(p);
    }
  }
}

void SieveTables::check(u64 n) const {
  if (n == 0) throw DomainError("sieve query: n must be >= 1");
  if (n > limit_) {
    throw CapacityError("sieve query " + std::to_string(n) +
                        " beyond limit " + std::to_string(limit_));
  }
}

u64 SieveTables::spf(u64 n) const {
  check(n);
  return spf_[n];
}

bool SieveTables::is_prime(u64 n) const {
  check(n);
  return n >= 2 && spf_[n] == n;
}

Factorization SieveTables::factorize(u64 n) const {
  check(n);
  Factorization f;
  f.n = n;
  while (n > 1) {
    const u64 p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  return f;
}

int SieveTables::mobius(u64 n) const { return mobius_of(factorize(n)); }
u64 SieveTables::euler_phi(u64 n) const { return phi_of(factorize(n)); }
u64 SieveTables::divisor_count(u64 n) const { return tau_of(factorize(n)); }

VonMangoldt SieveTables::von_mangoldt(u64 n) const {
  check(n);
  if (n == 1) return {};
  const u64 p = spf_[n];
  u64 m = n;
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return {};
  return {p, e, std::log(static_cast<double>(p))};
}

double SieveTables::chebyshev_psi(u64 t) const {
  if (t > limit_) check(t);
  double psi = 0.0;
  for (u64 n = 2; n <= t; ++n) psi += von_mangoldt(n).value;
  return psi;
}

int count_cube_roots(i64 k, u64 p) {
  if (!is_prime(p)) {
    throw DomainError("count_cube_roots: " + std::to_string(p) +
                      " is not prime");
  }
  const u64 target = (p - mod_floor(k, p)) % p;
  int count = 0;
  for (u64 n = 0; n < p; ++n) {
    if (mulmod(mulmod(n, n, p), n, p) == target) ++count;
  }
  return count;
}

int count_cube_roots_fast(i64 k, u64 p) {
  if (!is_prime(p)) {
    throw DomainError("count_cube_roots_fast: " + std::to_string(p) +
                      " is not prime");
  }
  if (p % 3 != 1) return 1;
  const u64 target = (p - mod_floor(k, p)) % p;
  if (target == 0) return 1;
  return powmod(target, (p - 1) / 3, p) == 1 ? 3 : 0;
}

u64 multiplicative_order(u64 a, u64 n) {
  if (n == 0) throw DomainError("multiplicative_order: modulus 0");
  a %= n;
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) {
    throw DomainError("multiplicative_order: element not a unit");
  }
  const u64 group = euler_phi(n);
  u64 order = group;
  for (const auto& [q, e] : factorize(group).factors) {
    for (int i = 0; i < e; ++i) {
      if (powmod(a, order / q, n) == 1) {
        order /= q;
      } else {
        break;
      }
    }
  }
  return order;
}

u64 primitive_root(u64 p) {
  if (!is_prime(p)) {
    throw DomainError("primitive_root: " + std::to_string(p) + " is not prime");
  }
  if (p == 2) return 1;
  const auto f = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool generator = true;
    for (const auto& pe : f.factors) {
      if (powmod(g, (p - 1) / pe.p, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw DomainError("primitive_root: none found");  // unreachable for prime p
}

u64 primitive_root_prime_power(u64 p, int e) {
  if (p == 2 || !is_prime(p) || e < 1) {
    throw DomainError("primitive_root_prime_power: needs odd prime power");
  }
  if (e == 1) return primitive_root(p);
  const auto f = factorize(p - 1);
  const u64 p2 = p * p;
  for (u64 g = 2;; ++g) {
    if (g % p == 0) continue;
    bool generator = true;
    for (const auto& pe : f.factors) {
      if (powmod(g, (p - 1) / pe.p, p) == 1) {
        generator = false;
        break;
      }
    }
    // A root mod p lifts to every p^e unless g^(p-1) = 1 (mod p^2).
    if (generator && powmod(g, p - 1, p2) != 1) return g;
  }
}

bool is_perfect_cube(i64 n) {
  const bool negative = n < 0;
  const u64 m = negative ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
  u64 r = static_cast<u64>(std::llround(std::cbrt(static_cast<double>(m))));
  for (u64 c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c) {
    if (static_cast<u128>(c) * c * c == m) return true;
  }
  return false;
}

}  // namespace cubicbh
