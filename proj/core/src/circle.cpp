#include "cubicbh/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "cubicbh/characters.hpp"
#include "cubicbh/errors.hpp"
#include "cubicbh/parallel.hpp"

namespace cubicbh {

namespace {

constexpr u64 kSumBlock = 4096;
constexpr u64 kMaxCubeArgument = 1ULL << 53;

void require_unit(i64 a, u64 q, const char* what) {
  if (q == 0) throw DomainError(std::string(what) + ": q must be >= 1");
  if (std::gcd(mod_floor(a, q), q) != 1 && q != 1) {
    throw DomainError(std::string(what) + ": gcd(a, q) must be 1");
  }
}

u64 cube(u64 n) { return n * n * n; }

// Fractional phase of (a m mod q)/q + beta m, reduced to [0, 1).
double split_phase(i64 a, u64 q, double beta, u64 m) {
  const u64 r = mulmod(mod_floor(a, q), m % q, q);
  double t = static_cast<double>(r) / static_cast<double>(q) +
             phase_frac(beta, m);
  return t - std::floor(t);
}

}  // namespace

double phase_frac(double alpha, u64 m) {
  if (alpha == 0.0 || m == 0) return 0.0;
  int exp = 0;
  const double mant = std::frexp(std::fabs(alpha), &exp);
  // |alpha| = M / 2^shift exactly.
  const u64 M = static_cast<u64>(std::ldexp(mant, 53));
  const int shift = 53 - exp;
  if (shift <= 0) return 0.0;
  const u128 prod = static_cast<u128>(M) * m;
  long double frac = 0.0L;
  if (shift >= 128) {
    frac = std::ldexp(static_cast<long double>(prod), -shift);
  } else {
    const u128 mask = (static_cast<u128>(1) << shift) - 1;
    frac = std::ldexp(static_cast<long double>(prod & mask), -shift);
  }
  double f = static_cast<double>(frac);
  if (alpha < 0.0 && f > 0.0) f = 1.0 - f;
  if (f >= 1.0) f = 0.0;
  return f;
}

cplx s1_sum(double alpha, u64 z, const SieveTables& sieve, unsigned workers) {
  if (z > sieve.limit()) {
    throw CapacityError("s1_sum: z = " + std::to_string(z) +
                        " beyond sieve limit " + std::to_string(sieve.limit()));
  }
  const u64 n_blocks = (z + kSumBlock - 1) / kSumBlock;
  std::vector<cplx> partial(n_blocks);
  parallel_blocks(n_blocks, workers, [&](std::size_t b) {
    cplx s{0.0, 0.0};
    const u64 lo = b * kSumBlock + 1;
    const u64 hi = std::min(z, lo + kSumBlock - 1);
    for (u64 m = lo; m <= hi; ++m) {
      const double lambda = sieve.von_mangoldt(m).value;
      if (lambda != 0.0) s += lambda * unit_phase(phase_frac(alpha, m));
    }
    partial[b] = s;
  });
  return tree_sum(std::move(partial));
}

cplx s2_sum(double alpha, u64 x, unsigned workers) {
  if (x > 0 && static_cast<u128>(x) * x * x >= kMaxCubeArgument) {
    throw CapacityError("s2_sum: x^3 must stay below 2^53");
  }
  const u64 n_blocks = (x + kSumBlock - 1) / kSumBlock;
  std::vector<cplx> partial(n_blocks);
  parallel_blocks(n_blocks, workers, [&](std::size_t b) {
    cplx s{0.0, 0.0};
    const u64 lo = b * kSumBlock + 1;
    const u64 hi = std::min(x, lo + kSumBlock - 1);
    for (u64 n = lo; n <= hi; ++n) s += unit_phase(-phase_frac(alpha, cube(n)));
    partial[b] = s;
  });
  return tree_sum(std::move(partial));
}

namespace {

struct DivisorBlock {
  u64 d = 1;
  u64 d_star = 1;
  u64 q1_star = 1;
  // sum of e(-beta n^3) over n <= x with gcd(n, q) = d, split by n/d mod q1*.
  std::vector<cplx> by_class;
  cplx total;
};

std::vector<DivisorBlock> s2_divisor_blocks(u64 q, double beta, u64 x) {
  std::vector<DivisorBlock> out;
  for (u64 d : factorize(q).divisors()) {
    DivisorBlock blk;
    blk.d = d;
    const u64 q_star = q / d;
    const u64 g = std::gcd(d * d, q_star);
    blk.d_star = d * d / g;
    blk.q1_star = q_star / g;
    blk.by_class.assign(blk.q1_star, cplx{0.0, 0.0});
    for (u64 n_star = 1; n_star * d <= x; ++n_star) {
      if (std::gcd(n_star, q_star) != 1) continue;
      const u64 n = n_star * d;
      blk.by_class[n_star % blk.q1_star] += unit_phase(-phase_frac(beta, cube(n)));
    }
    blk.total = cplx{0.0, 0.0};
    for (const auto& v : blk.by_class) blk.total += v;
    out.push_back(std::move(blk));
  }
  return out;
}

}  // namespace

ExpSumDecomposition s2_decompose(i64 a, u64 q, double beta, u64 x) {
  require_unit(a, q, "s2_decompose");
  if (x > 0 && static_cast<u128>(x) * x * x >= kMaxCubeArgument) {
    throw CapacityError("s2_decompose: x^3 must stay below 2^53");
  }
  ExpSumDecomposition out;
  out.a = a;
  out.q = q;
  out.beta = beta;
  for (u64 n = 1; n <= x; ++n) out.S += unit_phase(-split_phase(a, q, beta, cube(n)));

  for (const auto& blk : s2_divisor_blocks(q, beta, x)) {
    const CharacterGroup group(blk.q1_star);
    const double inv_phi = 1.0 / static_cast<double>(group.size());
    const i64 coeff_arg = -static_cast<i64>(
        mulmod(mod_floor(a, blk.q1_star), blk.d_star % blk.q1_star, blk.q1_star));
    for (const auto& chi : group.characters()) {
      const cplx c = chi(coeff_arg) * gauss_sum(chi.conj()) * inv_phi;
      const DirichletCharacter chi3 = chi.pow(3);
      if (chi3.is_principal()) {
        out.T += c * blk.total;
      } else {
        cplx inner{0.0, 0.0};
        for (u64 r = 0; r < blk.q1_star; ++r) {
          if (blk.by_class[r] == cplx{0.0, 0.0}) continue;
          inner += chi3(static_cast<i64>(r)) * blk.by_class[r];
        }
        out.E += c * inner;
      }
    }
  }
  return out;
}

cplx t2_via_cubic_sums(i64 a, u64 q, double beta, u64 x) {
  require_unit(a, q, "t2_via_cubic_sums");
  cplx t{0.0, 0.0};
  for (const auto& blk : s2_divisor_blocks(q, beta, x)) {
    const u64 m = blk.q1_star;
    const u64 ad = mulmod(mod_floor(a, m), blk.d_star % m, m);
    cplx complete{0.0, 0.0};
    u64 units = 0;
    for (u64 l = 0; l < m; ++l) {
      if (std::gcd(l, m) != 1) continue;
      ++units;
      const u64 l3 = mulmod(mulmod(l, l, m), l, m);
      complete += unit_phase(-static_cast<i64>(mulmod(ad, l3, m)),
                             static_cast<i64>(m));
    }
    t += complete / static_cast<double>(units) * blk.total;
  }
  return t;
}

ExpSumDecomposition s1_decompose(i64 a, u64 q, double beta, u64 z,
                                 const SieveTables& sieve) {
  require_unit(a, q, "s1_decompose");
  if (z > sieve.limit()) {
    throw CapacityError("s1_decompose: z beyond sieve limit");
  }
  ExpSumDecomposition out;
  out.a = a;
  out.q = q;
  out.beta = beta;
  std::vector<cplx> by_class(q, cplx{0.0, 0.0});
  cplx plain{0.0, 0.0};    // sum e(beta m)
  cplx weighted{0.0, 0.0};  // sum Lambda(m) e(beta m)
  for (u64 m = 1; m <= z; ++m) {
    const cplx e_beta = unit_phase(phase_frac(beta, m));
    plain += e_beta;
    const double lambda = sieve.von_mangoldt(m).value;
    if (lambda == 0.0) continue;
    weighted += lambda * e_beta;
    by_class[m % q] += lambda * e_beta;
    out.S += lambda * unit_phase(split_phase(a, q, beta, m));
  }
  const double phi = static_cast<double>(euler_phi(q));
  const int mu = mobius(q);
  out.T = static_cast<double>(mu) / phi * plain;

  const CharacterGroup group(q);
  for (const auto& chi : group.characters()) {
    cplx inner{0.0, 0.0};
    if (chi.is_principal()) {
      inner = weighted - plain;
    } else {
      for (u64 r = 0; r < q; ++r) inner += chi(static_cast<i64>(r)) * by_class[r];
    }
    out.E += gauss_sum(chi.conj()) * chi(a) * inner / phi;
  }
  return out;
}

RationalApprox dirichlet_approx(double alpha, i64 Q) {
  if (Q < 1) throw DomainError("dirichlet_approx: Q must be >= 1");
  if (!std::isfinite(alpha)) throw DomainError("dirichlet_approx: alpha not finite");
  const mpq_class target(alpha);
  mpq_class x = target;
  mpz_class h_prev = 1, h_prev2 = 0;
  mpz_class k_prev = 0, k_prev2 = 1;
  mpz_class best_h = 0, best_k = 1;
  for (;;) {
    mpz_class ai;
    mpz_fdiv_q(ai.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    const mpz_class h = ai * h_prev + h_prev2;
    const mpz_class k = ai * k_prev + k_prev2;
    if (k > Q) break;
    best_h = h;
    best_k = k;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    const mpq_class frac = x - mpq_class(ai);
    if (frac == 0) break;
    x = 1 / frac;
  }
  RationalApprox r;
  r.a = best_h.get_si();
  r.q = best_k.get_si();
  const mpq_class beta = target - mpq_class(best_h, best_k);
  r.beta = beta.get_d();
  return r;
}

ArcDecomposition::ArcDecomposition(i64 q1, i64 q) : q1_(q1), q_(q) {
  if (q1 < 1 || q < 1) throw ConfigError("arcs: Q1 and Q must be >= 1");
  if (static_cast<i128>(q) <= 2 * static_cast<i128>(q1) * q1) {
    throw ConfigError("arcs: need Q > 2 Q1^2 for disjoint major arcs (Q1 = " +
                      std::to_string(q1) + ", Q = " + std::to_string(q) + ")");
  }
  for (i64 den = 1; den <= q1; ++den) {
    for (i64 a = 1; a <= den; ++a) {
      if (std::gcd(a, den) != 1) continue;
      RationalArc arc;
      arc.a = a;
      arc.q = den;
      arc.center = mpq_class(a, den);
      arc.radius = mpq_class(1, mpz_class(den) * mpz_class(q));
      arc.center.canonicalize();
      arc.radius.canonicalize();
      arcs_.push_back(std::move(arc));
    }
  }
  std::sort(arcs_.begin(), arcs_.end(),
            [](const RationalArc& l, const RationalArc& r) { return l.center < r.center; });
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    const auto& lo = arcs_[i - 1];
    const auto& hi = arcs_[i];
    if (hi.center - hi.radius <= lo.center + lo.radius) {
      throw ConfigError("arcs: J(" + std::to_string(lo.q) + "," +
                        std::to_string(lo.a) + ") and J(" + std::to_string(hi.q) +
                        "," + std::to_string(hi.a) + ") overlap");
    }
  }
}

ArcClass ArcDecomposition::classify(double alpha) const {
  if (!std::isfinite(alpha)) throw DomainError("classify: alpha not finite");
  mpq_class x(alpha);
  const mpq_class low(1, q_);
  const mpq_class shifted = x - low;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  x -= fl;
  // 1/Q and 1 + 1/Q are the same point of R/Z; the latter can touch J(1,1).
  if (x == low) return MajorArc{1, 1};
  auto it = std::lower_bound(
      arcs_.begin(), arcs_.end(), x,
      [](const RationalArc& arc, const mpq_class& v) { return arc.center < v; });
  for (auto cand : {it, it == arcs_.begin() ? arcs_.end() : std::prev(it)}) {
    if (cand == arcs_.end()) continue;
    if (abs(x - cand->center) <= cand->radius) return MajorArc{cand->a, cand->q};
  }
  return MinorArc{};
}

ArcDecomposition build_arcs(i64 q1, i64 q) { return ArcDecomposition(q1, q); }

std::pair<i64, i64> default_arc_parameters(u64 x) {
  if (x < 3) return {1, 3};
  const double lx = std::log(static_cast<double>(x));
  const i64 q1 = static_cast<i64>(std::ceil(lx * lx));
  const i64 q = std::max<i64>(static_cast<i64>(std::ceil(static_cast<double>(x) / lx)),
                              2 * q1 * q1 + 1);
  return {q1, q};
}

double dist_to_int(double t) {
  const double f = t - std::floor(t);
  return std::min(f, 1.0 - f);
}

double weyl_rhs(double alpha, u64 N) {
  if (N < 1) throw DomainError("weyl_rhs: N must be >= 1");
  const double n = static_cast<double>(N);
  const i64 lim = static_cast<i64>(N);
  double total = 0.0;
  for (i64 l1 = -lim + 1; l1 < lim; ++l1) {
    for (i64 l2 = -lim + 1; l2 < lim; ++l2) {
      const u64 m = 6 * static_cast<u64>(std::llabs(l1 * l2));
      const double f = phase_frac(alpha, m);
      const double dist = std::min(f, 1.0 - f);
      total += (dist == 0.0) ? n : std::min(n, 1.0 / dist);
    }
  }
  return 2.0 * n * std::pow(total / (n * n * n), 0.25);
}

ConvolutionResult convolution_check(i64 k, u64 x, u64 z, u64 grid,
                                    const SieveTables& sieve) {
  const i128 x3 = static_cast<i128>(x) * x * x;
  if (x3 + k < 1) throw DomainError("convolution_check: n^3 + k must be positive");
  if (static_cast<i128>(z) < x3 + k) {
    throw DomainError("convolution_check: need z >= x^3 + k");
  }
  const i128 need = static_cast<i128>(z) + x3 + (k < 0 ? -k : k);
  if (static_cast<i128>(grid) <= need) {
    throw PrecisionError("convolution_check: grid " + std::to_string(grid) +
                         " too coarse; need > " + std::to_string(static_cast<i64>(need)));
  }
  if (z > sieve.limit()) throw CapacityError("convolution_check: z beyond sieve");

  const i64 N = static_cast<i64>(grid);
  std::vector<double> lambda(z + 1, 0.0);
  for (u64 m = 1; m <= z; ++m) lambda[m] = sieve.von_mangoldt(m).value;
  cplx acc{0.0, 0.0};
  for (i64 j = 0; j < N; ++j) {
    cplx s1{0.0, 0.0};
    for (u64 m = 1; m <= z; ++m) {
      if (lambda[m] == 0.0) continue;
      s1 += lambda[m] * unit_phase(static_cast<i64>(mulmod(j, m, grid)), N);
    }
    cplx s2{0.0, 0.0};
    for (u64 n = 1; n <= x; ++n) {
      s2 += unit_phase(-static_cast<i64>(mulmod(j, cube(n) % grid, grid)), N);
    }
    acc += s1 * s2 * unit_phase(-static_cast<i64>(mulmod(j, mod_floor(k, grid), grid)), N);
  }
  acc /= static_cast<double>(N);

  ConvolutionResult r;
  r.integral = acc.real();
  r.integral_imag = acc.imag();
  // Independent route: scan m and test whether m - k is a cube n^3, n <= x.
  for (u64 m = 1; m <= z; ++m) {
    const i64 t = static_cast<i64>(m) - k;
    if (t < 1 || !is_perfect_cube(t)) continue;
    const u64 n = static_cast<u64>(std::llround(std::cbrt(static_cast<double>(t))));
    if (n <= x) r.direct += lambda[m];
  }
  r.agree = std::abs(r.integral - r.direct) <= 1e-6 * std::max(1.0, std::abs(r.direct)) &&
            std::abs(r.integral_imag) <= 1e-6 * std::max(1.0, std::abs(r.direct));
  return r;
}

cplx perron_integral(double y, double c, double T) {
  if (!(y > 0.0) || y == 1.0) {
    throw DomainError("perron_integral: y must be positive and != 1");
  }
  if (!(c > 0.0) || !(T > 0.0)) throw DomainError("perron_integral: c, T must be > 0");
  const double L = std::log(y);
  const double h_max = std::min(0.01, 1.0 / (10.0 * std::abs(L)));
  u64 n = static_cast<u64>(std::ceil(2.0 * T / h_max));
  if (n % 2 == 1) ++n;
  const double h = 2.0 * T / static_cast<double>(n);
  const double yc = std::pow(y, c);
  // y^(c+it)/(c+it), with s = c + it and ds = i dt.
  auto f = [&](double t) {
    const cplx s{c, t};
    return yc * cplx{std::cos(t * L), std::sin(t * L)} / s;
  };
  cplx acc = f(-T) + f(T);
  for (u64 i = 1; i < n; ++i) {
    const double t = -T + h * static_cast<double>(i);
    acc += (i % 2 == 1 ? 4.0 : 2.0) * f(t);
  }
  acc *= h / 3.0;
  return acc / (2.0 * std::numbers::pi);
}

double perron_error_bound(double y, double c, double T) {
  const double L = std::abs(std::log(y));
  return 10.0 * std::pow(y, c) * std::min(1.0, 1.0 / (T * L));
}

}  // namespace cubicbh
