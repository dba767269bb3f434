#pragma once

// Circle-method machinery for sum_{n <= x} Lambda(n^3 + k):
//   S1(alpha) = sum_{m <= z} Lambda(m) e(alpha m)
//   S2(alpha) = sum_{n <= x} e(-alpha n^3)
// their major-arc decompositions at alpha = a/q + beta, the Farey major
// arcs, Dirichlet approximation, the Weyl-shift bound, the discrete form of
// the convolution identity, and a numerical Perron integral.

#include <gmpxx.h>

#include <complex>
#include <variant>
#include <vector>

#include "cubicbh/arith.hpp"

namespace cubicbh {

using cplx = std::complex<double>;

// frac(alpha * m) in [0, 1), exact up to the final rounding: alpha's
// mantissa is multiplied by m in 128-bit integers before scaling.
double phase_frac(double alpha, u64 m);

// S1(alpha) over m <= z. The sieve must cover z.
cplx s1_sum(double alpha, u64 z, const SieveTables& sieve, unsigned workers = 1);

// S2(alpha) = sum_{n <= x} e(-alpha n^3); requires x^3 < 2^53.
cplx s2_sum(double alpha, u64 x, unsigned workers = 1);

struct ExpSumDecomposition {
  i64 a = 0;
  u64 q = 1;
  double beta = 0.0;
  cplx S;  // the full sum at a/q + beta
  cplx T;  // main term
  cplx E;  // remaining character contribution
  cplx residual() const { return S - T - E; }
};

// S2 = T2 + E2: T2 collects characters mod q1* with chi^3 principal, E2 the
// rest. The split is an exact identity.
ExpSumDecomposition s2_decompose(i64 a, u64 q, double beta, u64 x);

// Same split with T2 in its reduced form: the cubic-character sum replaced
// by the complete sum over l mod q1* of e(-a d* l^3 / q1*). Only T is filled.
cplx t2_via_cubic_sums(i64 a, u64 q, double beta, u64 x);

// S1 = T1 + E1 + residual with T1 = mu(q)/phi(q) sum e(beta m) and E1 the
// Gauss-sum expansion (principal term uses Lambda(m) - 1). The residual
// comes from m sharing a factor with q.
ExpSumDecomposition s1_decompose(i64 a, u64 q, double beta, u64 z,
                                 const SieveTables& sieve);

struct RationalApprox {
  i64 a = 0;
  i64 q = 1;
  double beta = 0.0;  // alpha - a/q
};

// Last continued-fraction convergent a/q of alpha with q <= Q; then
// |alpha - a/q| <= 1/(qQ).
RationalApprox dirichlet_approx(double alpha, i64 Q);

struct RationalArc {
  i64 a = 0;
  i64 q = 1;
  mpq_class center;  // a/q
  mpq_class radius;  // 1/(qQ)
};

struct MajorArc {
  i64 a = 0;
  i64 q = 1;
  friend bool operator==(const MajorArc&, const MajorArc&) = default;
};
struct MinorArc {
  friend bool operator==(const MinorArc&, const MinorArc&) = default;
};
using ArcClass = std::variant<MajorArc, MinorArc>;

class ArcDecomposition {
 public:
  // Throws ConfigError unless Q > 2 Q1^2 (and the arcs are disjoint).
  ArcDecomposition(i64 q1, i64 q);

  i64 q1() const { return q1_; }
  i64 width() const { return q_; }
  const std::vector<RationalArc>& arcs() const { return arcs_; }

  // alpha is first moved into [1/Q, 1 + 1/Q) by an integer shift; the
  // comparison with each arc is exact.
  ArcClass classify(double alpha) const;

 private:
  i64 q1_;
  i64 q_;
  std::vector<RationalArc> arcs_;  // sorted by center
};

ArcDecomposition build_arcs(i64 q1, i64 q);

// Default arc parameters for a given x: Q1 = ceil((log x)^2),
// Q = max(ceil(x / log x), 2 Q1^2 + 1).
std::pair<i64, i64> default_arc_parameters(u64 x);

// ||t||: distance to the nearest integer.
double dist_to_int(double t);

// 2N { N^-3 sum_{-N < l1, l2 < N} min(N, 1/||6 alpha l1 l2||) }^(1/4), an
// upper bound for |sum_{n <= N} e(alpha n^3 + lower order)|.
double weyl_rhs(double alpha, u64 N);

struct ConvolutionResult {
  double integral = 0.0;  // real part of the grid average
  double integral_imag = 0.0;
  double direct = 0.0;  // sum_{n <= x} Lambda(n^3 + k), from a scan over m
  bool agree = false;  // within 1e-6 relative
};

// (1/N) sum_j S1(j/N) S2(j/N) e(-jk/N) against the direct prime-power count.
// Needs N > z + x^3 + |k| and z >= x^3 + k (PrecisionError / DomainError).
ConvolutionResult convolution_check(i64 k, u64 x, u64 z, u64 grid,
                                    const SieveTables& sieve);

// (1 / 2 pi i) int_{c - iT}^{c + iT} y^s / s ds by composite Simpson with
// step <= min(0.01, 1/(10 |log y|)).
cplx perron_integral(double y, double c, double T);

// 10 y^c min(1, 1/(T |log y|)).
double perron_error_bound(double y, double c, double T);

}  // namespace cubicbh
