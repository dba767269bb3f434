#pragma once

// Local densities of n^3 + k, the complete sums Sigma(q), and the singular
// series S(k) = prod_p (1 - (n_p - 1)/(p - 1)) together with its
// conditionally convergent q-sum form.

#include <complex>
#include <cstddef>
#include <vector>

#include "cubicbh/arith.hpp"

namespace cubicbh {

struct LocalFactor {
  u64 p = 0;
  int n_p = 0;
  // 1 - (n_p - 1)/(p - 1) = (p - n_p)/(p - 1), reduced.
  i64 num = 1;
  i64 den = 1;
  double value = 1.0;
};

LocalFactor local_factor(i64 k, u64 p);

struct DyadicCheckpoint {
  u64 bound = 0;  // product over p <= bound
  double value = 0.0;
};

struct SingularSeriesResult {
  i64 k = 0;
  u64 p_max = 0;
  double value = 0.0;
  // Factor types by n_p: 3 roots (< 1), 1 root (= 1), no root (> 1).
  std::size_t reducing_factors = 0;
  std::size_t unit_factors = 0;
  std::size_t boosting_factors = 0;
  bool k_squarefree = false;
  bool reducible = false;  // -k is a perfect cube
  // Partial products at P = 2^j (j >= 1, 2^j <= p_max), then at p_max.
  std::vector<DyadicCheckpoint> checkpoints;
  // |value(p_max) - value(p_max / 2)|.
  double last_window_delta = 0.0;
};

// Bound up to which the product is accumulated as an exact rational.
inline constexpr u64 kExactProductBound = 10'000;

// Truncated Euler product over p <= p_max, ascending p.
SingularSeriesResult singular_series(i64 k, u64 p_max);

// Partial products of the Euler product, one entry per prime p <= p_max:
// (p, product over primes <= p). Float accumulation in ascending p.
std::vector<DyadicCheckpoint> singular_series_partials(i64 k, u64 p_max);

// S(k) for every k in [k_begin, k_end), float product over p <= p_max in
// ascending p. Results do not depend on the worker count.
std::vector<double> singular_series_range(i64 k_begin, i64 k_end, u64 p_max,
                                          unsigned workers = 1);

// S(k) for an arbitrary list of k, same arithmetic as singular_series_range.
std::vector<double> singular_series_values(const std::vector<i64>& ks, u64 p_max,
                                           unsigned workers = 1);

// c_q(n) = sum_{a mod q, (a,q)=1} e(a n / q), via von Sterneck's formula.
i64 ramanujan_sum(u64 q, i64 n);

// Sigma(q) = sum_{(a,q)=1} e(-ak/q) sum_{r mod q} e(-a r^3/q), exact: the
// a-sum is a Ramanujan sum c_q(k + r^3), grouped by the residue of r^3.
i64 sigma_q(i64 k, u64 q);

// sigma_q for several k at one modulus, sharing the cube histogram.
std::vector<i64> sigma_q_batch(const std::vector<i64>& ks, u64 q);

// The same double sum evaluated term by term in floating point.
std::complex<double> sigma_q_direct(i64 k, u64 q);

// Direct double sums for a batch of k at one modulus; the inner r-sum is
// shared across k.
std::vector<std::complex<double>> sigma_q_direct_batch(const std::vector<i64>& ks,
                                                       u64 q);

// prod_{p | q} p (n_{k,p} - 1); q must be squarefree.
i64 sigma_q_formula(i64 k, u64 q);

// Partial sum over q <= q_max of mu(q)/phi(q) prod_{p|q}(n_{k,p} - 1) in
// ascending q.
double singular_series_sum_form(i64 k, u64 q_max);

// The same sum over q1 < q <= q_max.
double psi_partial(i64 k, u64 q1, u64 q_max);

}  // namespace cubicbh
