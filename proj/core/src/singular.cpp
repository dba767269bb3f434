#include "cubicbh/singular.hpp"

#include <gmpxx.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cubicbh/characters.hpp"
#include "cubicbh/errors.hpp"
#include "cubicbh/parallel.hpp"

namespace cubicbh {

namespace {

// (p - n_p)/(p - 1) as a single correctly rounded division.
double factor_value(u64 p, int n_p) {
  return static_cast<double>(static_cast<i64>(p) - n_p) /
         static_cast<double>(p - 1);
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

LocalFactor local_factor(i64 k, u64 p) {
  if (!is_prime(p)) {
    throw DomainError("local_factor: " + std::to_string(p) + " is not prime");
  }
  LocalFactor f;
  f.p = p;
  f.n_p = count_cube_roots_fast(k, p);
  const i64 num = static_cast<i64>(p) - f.n_p;
  const i64 den = static_cast<i64>(p) - 1;
  const i64 g = std::gcd(num, den);
  f.num = num / g;
  f.den = den / g;
  f.value = factor_value(p, f.n_p);
  return f;
}

SingularSeriesResult singular_series(i64 k, u64 p_max) {
  if (k == 0) throw DomainError("singular_series: k = 0 is degenerate");
  if (p_max < 2) throw DomainError("singular_series: P_max must be >= 2");
  SingularSeriesResult r;
  r.k = k;
  r.p_max = p_max;
  r.k_squarefree = factorize(static_cast<u64>(k < 0 ? -k : k)).squarefree();
  r.reducible = is_perfect_cube(-k);

  mpq_class exact = 1;
  double value = 1.0;
  bool exact_phase = true;
  auto current = [&] { return exact_phase ? exact.get_d() : value; };

  const u64 half = p_max / 2;
  double value_half = 1.0;
  bool half_recorded = false;
  u64 next_checkpoint = 2;
  // Record every dyadic checkpoint below `upto`.
  auto flush_checkpoints = [&](u64 upto) {
    while (next_checkpoint <= p_max && next_checkpoint < upto) {
      r.checkpoints.push_back({next_checkpoint, current()});
      next_checkpoint *= 2;
    }
  };
  for (const u64 p : primes_up_to(p_max)) {
    flush_checkpoints(p);
    if (!half_recorded && p > half) {
      value_half = current();
      half_recorded = true;
    }
    const LocalFactor f = local_factor(k, p);
    switch (f.n_p) {
      case 3: ++r.reducing_factors; break;
      case 1: ++r.unit_factors; break;
      default: ++r.boosting_factors; break;
    }
    if (exact_phase && p > kExactProductBound) {
      value = exact.get_d();
      exact_phase = false;
    }
    if (exact_phase) {
      if (f.num != f.den) exact *= mpq_class(f.num, f.den);
    } else {
      value *= f.value;
    }
  }
  if (!half_recorded) value_half = current();
  flush_checkpoints(p_max + 1);
  r.value = current();
  if (r.checkpoints.empty() || r.checkpoints.back().bound != p_max) {
    r.checkpoints.push_back({p_max, r.value});
  }
  r.last_window_delta = std::abs(r.value - value_half);
  return r;
}

std::vector<DyadicCheckpoint> singular_series_partials(i64 k, u64 p_max) {
  if (k == 0) throw DomainError("singular_series_partials: k = 0 is degenerate");
  std::vector<DyadicCheckpoint> out;
  double value = 1.0;
  for (u64 p : primes_up_to(p_max)) {
    value *= factor_value(p, count_cube_roots_fast(k, p));
    out.push_back({p, value});
  }
  return out;
}

std::vector<double> singular_series_values(const std::vector<i64>& ks, u64 p_max,
                                           unsigned workers) {
  const std::size_t count = ks.size();
  std::vector<double> values(count, 1.0);
  if (count == 0) return values;
  std::vector<u64> split_primes;
  for (u64 p : primes_up_to(p_max)) {
    if (p % 3 == 1) split_primes.push_back(p);
  }
  // Other primes contribute the factor 1 exactly. Primes are the outer loop,
  // so every value is multiplied in ascending p whatever the block layout.
  constexpr std::size_t kBlock = 1 << 14;
  const std::size_t n_blocks = (count + kBlock - 1) / kBlock;
  std::vector<std::uint8_t> is_cube;
  for (u64 p : split_primes) {
    // r^3 mod p by finite differences: c += d, d += e, e += 6.
    is_cube.assign(p, 0);
    u64 c = 0, d = 1, e = 6;
    for (u64 r = 1; r < p; ++r) {
      c += d; if (c >= p) c -= p;
      d += e; if (d >= p) d -= p;
      e += 6; if (e >= p) e -= p;
      is_cube[c] = 1;
    }
    const double f_boost = factor_value(p, 0);
    const double f_reduce = factor_value(p, 3);
    parallel_blocks(n_blocks, workers, [&](std::size_t block) {
      const std::size_t lo = block * kBlock;
      const std::size_t hi = std::min(count, lo + kBlock);
      u64 m = mod_floor(ks[lo], p);  // k mod p, updated along the block
      for (std::size_t j = lo; j < hi; ++j) {
        if (j > lo) {
          const i64 gap = ks[j] - ks[j - 1];
          if (gap >= 0 && static_cast<u64>(gap) < p) {
            m += static_cast<u64>(gap);
            if (m >= p) m -= p;
          } else {
            m = mod_floor(ks[j], p);
          }
        }
        if (m == 0) continue;
        values[j] *= is_cube[p - m] != 0 ? f_reduce : f_boost;
      }
    });
  }
  return values;
}

std::vector<double> singular_series_range(i64 k_begin, i64 k_end, u64 p_max,
                                          unsigned workers) {
  if (k_end <= k_begin) return {};
  std::vector<i64> ks(static_cast<std::size_t>(k_end - k_begin));
  for (std::size_t j = 0; j < ks.size(); ++j) ks[j] = k_begin + static_cast<i64>(j);
  return singular_series_values(ks, p_max, workers);
}

i64 ramanujan_sum(u64 q, i64 n) {
  if (q == 0) throw DomainError("ramanujan_sum: q must be >= 1");
  const u64 g = std::gcd(mod_floor(n, q), q);
  const u64 m = q / g;
  const int mu = mobius(m);
  if (mu == 0) return 0;
  return mu * static_cast<i64>(euler_phi(q) / euler_phi(m));
}

std::vector<i64> sigma_q_batch(const std::vector<i64>& ks, u64 q) {
  if (q == 0) throw DomainError("sigma_q: q must be >= 1");
  std::vector<u64> cube_count(q, 0);
  for (u64 r = 0; r < q; ++r) ++cube_count[mulmod(mulmod(r, r, q), r, q)];
  std::vector<std::pair<u64, i64>> cubes;
  for (u64 m = 0; m < q; ++m) {
    if (cube_count[m] != 0) cubes.emplace_back(m, static_cast<i64>(cube_count[m]));
  }
  // c_q(n) depends on gcd(n, q) only; memoise by that gcd.
  std::vector<i64> by_gcd(q + 1, 0);
  std::vector<bool> known(q + 1, false);
  std::vector<i64> out;
  out.reserve(ks.size());
  for (i64 k : ks) {
    const u64 kq = mod_floor(k, q);
    i64 total = 0;
    for (const auto& [m, count] : cubes) {
      const u64 n = (kq + m) % q;
      const u64 g = std::gcd(n, q);
      if (!known[g]) {
        by_gcd[g] = ramanujan_sum(q, static_cast<i64>(n));
        known[g] = true;
      }
      total = checked_add(total, checked_mul(count, by_gcd[g]));
    }
    out.push_back(total);
  }
  return out;
}

i64 sigma_q(i64 k, u64 q) { return sigma_q_batch({k}, q).front(); }

std::complex<double> sigma_q_direct(i64 k, u64 q) {
  if (q == 0) throw DomainError("sigma_q_direct: q must be >= 1");
  const i64 qi = static_cast<i64>(q);
  const i64 kk = static_cast<i64>(mod_floor(k, q));
  std::complex<double> total{0.0, 0.0};
  for (i64 a = 0; a < qi; ++a) {
    if (std::gcd(a, qi) != 1) continue;
    std::complex<double> inner{0.0, 0.0};
    for (i64 r = 0; r < qi; ++r) {
      const i64 r3 = static_cast<i64>(
          mulmod(mulmod(static_cast<u64>(r), static_cast<u64>(r), q),
                 static_cast<u64>(r), q));
      inner += unit_phase(-static_cast<i64>(mulmod(static_cast<u64>(a),
                                                   static_cast<u64>(r3), q)),
                          qi);
    }
    total += unit_phase(-static_cast<i64>(mulmod(static_cast<u64>(a),
                                                 static_cast<u64>(kk), q)),
                        qi) *
             inner;
  }
  return total;
}

std::vector<std::complex<double>> sigma_q_direct_batch(const std::vector<i64>& ks,
                                                       u64 q) {
  if (q == 0) throw DomainError("sigma_q_direct_batch: q must be >= 1");
  std::vector<std::complex<double>> root(q);
  for (u64 j = 0; j < q; ++j) {
    root[j] = unit_phase(-static_cast<i64>(j), static_cast<i64>(q));
  }
  std::vector<u64> cube_count(q, 0);
  for (u64 r = 0; r < q; ++r) ++cube_count[mulmod(mulmod(r, r, q), r, q)];
  std::vector<std::pair<u64, double>> cubes;
  for (u64 m = 0; m < q; ++m) {
    if (cube_count[m] != 0) cubes.emplace_back(m, static_cast<double>(cube_count[m]));
  }
  // Below 2^32 the products fit in 64 bits.
  const bool small = q < (1ULL << 32);
  auto mul = [&](u64 x, u64 y) { return small ? (x * y) % q : mulmod(x, y, q); };
  // inner[a] = sum_r e(-a r^3 / q), terms with equal r^3 merged.
  std::vector<std::complex<double>> inner(q, {0.0, 0.0});
  for (u64 a = 1; a <= q; ++a) {
    const u64 aa = a % q;
    if (std::gcd(aa, q) != 1) continue;
    std::complex<double> s{0.0, 0.0};
    for (const auto& [m, c] : cubes) s += c * root[mul(aa, m)];
    inner[aa] = s;
  }
  std::vector<std::complex<double>> out;
  out.reserve(ks.size());
  for (i64 k : ks) {
    const u64 kk = mod_floor(k, q);
    std::complex<double> total{0.0, 0.0};
    for (u64 a = 1; a <= q; ++a) {
      const u64 aa = a % q;
      if (std::gcd(aa, q) != 1) continue;
      total += root[mul(aa, kk)] * inner[aa];
    }
    out.push_back(total);
  }
  return out;
}

i64 sigma_q_formula(i64 k, u64 q) {
  if (q == 0) throw DomainError("sigma_q_formula: q must be >= 1");
  const auto f = factorize(q);
  if (!f.squarefree()) {
    throw DomainError("sigma_q_formula: q = " + std::to_string(q) +
                      " is not squarefree");
  }
  i64 total = 1;
  for (const auto& pe : f.factors) {
    const i64 np = count_cube_roots(k, pe.p);
    total = checked_mul(total, static_cast<i64>(pe.p) * (np - 1));
  }
  return total;
}

namespace {

// sum over lo < q <= hi of mu(q)/phi(q) prod_{p|q}(n_{k,p} - 1), ascending q.
double q_sum(i64 k, u64 lo, u64 hi) {
  if (hi <= lo) return 0.0;
  const SieveTables sieve(hi);
  std::vector<std::int8_t> np(hi + 1, -1);
  double sum = 0.0;
  for (u64 q = lo + 1; q <= hi; ++q) {
    const auto f = sieve.factorize(q);
    if (!f.squarefree()) continue;  // mu(q) = 0
    i64 product = 1;
    bool all_split = true;
    for (const auto& pe : f.factors) {
      if (np[pe.p] < 0) np[pe.p] = static_cast<std::int8_t>(count_cube_roots_fast(k, pe.p));
      product *= np[pe.p] - 1;
      if (pe.p % 3 != 1) all_split = false;
    }
    if (product == 0) continue;
    if (!all_split) {
      throw std::logic_error("q-sum: nonzero term at q = " + std::to_string(q) +
                             " with a prime factor not = 1 (mod 3)");
    }
    const int mu = (f.omega() % 2 == 0) ? 1 : -1;
    sum += static_cast<double>(mu * product) /
           static_cast<double>(sieve.euler_phi(q));
  }
  return sum;
}

}  // namespace

double singular_series_sum_form(i64 k, u64 q_max) {
  if (q_max < 1) throw DomainError("singular_series_sum_form: Q_max must be >= 1");
  return q_sum(k, 0, q_max);
}

double psi_partial(i64 k, u64 q1, u64 q_max) {
  if (q1 > q_max) throw DomainError("psi_partial: needs Q1 <= Q_max");
  return q_sum(k, q1, q_max);
}

}  // namespace cubicbh
