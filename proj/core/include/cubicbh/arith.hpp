#pragma once

// Integer arithmetic substrate: checked products, modular powering, the
// least-prime-factor sieve and the classical multiplicative functions.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cubicbh {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Throws OverflowError when the exact result does not fit.
i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);

// Least non-negative residue of a mod m (m > 0).
u64 mod_floor(i64 a, u64 m);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

struct PrimePower {
  u64 p = 0;
  int e = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod p^e with primes strictly increasing.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  bool squarefree() const;
  int omega() const { return static_cast<int>(factors.size()); }
  u64 radical() const;
  std::vector<u64> divisors() const;
};

// Trial division; fine for the desk-scale inputs used here (n < ~1e13).
Factorization factorize(u64 n);

// Lambda(n) kept as the exact prime power alongside its float value, so sums
// can be re-associated without depending on evaluation order. prime == 0
// encodes Lambda(n) = 0.
struct VonMangoldt {
  u64 prime = 0;
  int exponent = 0;
  double value = 0.0;

  bool is_prime_power() const { return prime != 0; }
};

int mobius(u64 n);
u64 euler_phi(u64 n);
VonMangoldt von_mangoldt(u64 n);
u64 divisor_count(u64 n);

inline constexpr u64 kDefaultSieveCapacity = 200'000'000;

// Least-prime-factor table on 1..N. Immutable once built; concurrent readers
// need no synchronisation.
class SieveTables {
 public:
  explicit SieveTables(u64 limit, u64 capacity = kDefaultSieveCapacity);

  u64 limit() const { return limit_; }
  // spf(1) == 1 by convention.
  u64 spf(u64 n) const;
  bool is_prime(u64 n) const;
  const std::vector<u64>& primes() const { return primes_; }

  Factorization factorize(u64 n) const;
  int mobius(u64 n) const;
  u64 euler_phi(u64 n) const;
  VonMangoldt von_mangoldt(u64 n) const;
  u64 divisor_count(u64 n) const;

  // psi(t) = sum_{n <= t} Lambda(n), summed in ascending n.
  double chebyshev_psi(u64 t) const;

 private:
  void check(u64 n) const;

  u64 limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<u64> primes_;
};

// Number of n in [0, p) with n^3 + k = 0 (mod p), by direct enumeration.
int count_cube_roots(i64 k, u64 p);

// Same count through the cubic Euler criterion; O(log p). Used where the
// enumeration is too slow (long singular-series products).
int count_cube_roots_fast(i64 k, u64 p);

u64 multiplicative_order(u64 a, u64 n);

// Least generator of (Z/p)^*; returns 1 for p = 2.
u64 primitive_root(u64 p);

// Least generator of (Z/p^e)^* for odd p.
u64 primitive_root_prime_power(u64 p, int e);

// True when n = m^3 for some integer m (signed).
bool is_perfect_cube(i64 n);

}  // namespace cubicbh
