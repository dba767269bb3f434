// Invariant suites for `verify --suite NAME`. Each check is an independent
// cross-route comparison; a failing check reports its first counterexample.

#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "cubicbh/characters.hpp"
#include "cubicbh/circle.hpp"
#include "cubicbh/eisenstein.hpp"
#include "cubicbh/errors.hpp"
#include "cubicbh/harness.hpp"
#include "cubicbh/singular.hpp"

namespace cubicbh {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

CheckResult run_check(const std::string& name, const Check& check) {
  try {
    std::string failure = check();
    return {name, failure.empty(), failure.empty() ? "ok" : failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

template <typename... Parts>
std::string msg(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::vector<u64> primes_below(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

// --- arith -----------------------------------------------------------------

std::vector<CheckResult> arith_suite() {
  std::vector<CheckResult> out;
  out.push_back(run_check("divisor sums of mu, phi, Lambda (n <= 1e4)", [] {
    const SieveTables sieve(10'000);
    for (u64 n = 1; n <= 10'000; ++n) {
      i64 mu_sum = 0;
      u64 phi_sum = 0;
      double lambda_sum = 0.0;
      for (u64 d : sieve.factorize(n).divisors()) {
        mu_sum += sieve.mobius(d);
        phi_sum += sieve.euler_phi(d);
        lambda_sum += sieve.von_mangoldt(d).value;
      }
      if (mu_sum != (n == 1 ? 1 : 0)) return msg("sum mu(d) wrong at n=", n);
      if (phi_sum != n) return msg("sum phi(d) wrong at n=", n);
      if (std::abs(lambda_sum - std::log(static_cast<double>(n))) > 1e-9) {
        return msg("sum Lambda(d) != log n at n=", n);
      }
    }
    return std::string();
  }));
  out.push_back(run_check("cube-root counts: histogram per prime (p <= 5000, |k| <= 50)", [] {
    for (u64 p : primes_below(5000)) {
      std::vector<int> hist(p, 0);  // hist[t] = #{n : n^3 = t}
      for (u64 n = 0; n < p; ++n) ++hist[mulmod(mulmod(n, n, p), n, p)];
      u64 total = 0;
      for (int h : hist) total += static_cast<u64>(h);
      if (total != p) return msg("histogram total != p at p=", p);
      for (i64 k = -50; k <= 50; ++k) {
        const int expect = hist[(p - mod_floor(k, p)) % p];
        if (count_cube_roots(k, p) != expect) return msg("count mismatch k=", k, " p=", p);
        if (count_cube_roots_fast(k, p) != expect) return msg("fast count mismatch k=", k, " p=", p);
      }
    }
    return std::string();
  }));
  out.push_back(run_check("cube map bijective for p = 3 or p = 2 (mod 3)", [] {
    for (u64 p : primes_below(5000)) {
      if (p % 3 == 1) continue;
      std::vector<int> hist(p, 0);
      for (u64 n = 0; n < p; ++n) ++hist[mulmod(mulmod(n, n, p), n, p)];
      for (u64 t = 0; t < p; ++t) {
        if (hist[t] != 1) return msg("not bijective at p=", p);
      }
    }
    return std::string();
  }));
  return out;
}

// --- characters --------------------------------------------------------------

std::vector<CheckResult> characters_suite() {
  std::vector<CheckResult> out;
  out.push_back(run_check("orthogonality over the group (q <= 200)", [] {
    for (u64 q = 1; q <= 200; ++q) {
      const CharacterGroup g(q);
      const auto chars = g.characters();
      if (chars.size() != euler_phi(q)) return msg("group size wrong at q=", q);
      for (u64 n = 1; n <= q; ++n) {
        if (std::gcd(n, q) != 1) continue;
        std::complex<double> s{0.0, 0.0};
        for (const auto& chi : chars) s += chi(static_cast<i64>(n));
        const double expect = (n % q == 1 % q) ? static_cast<double>(chars.size()) : 0.0;
        if (std::abs(s - expect) > 1e-9) return msg("orthogonality fails q=", q, " n=", n);
      }
    }
    return std::string();
  }));
  out.push_back(run_check("additive characters from Gauss sums (q <= 50)", [] {
    for (u64 q = 1; q <= 50; ++q) {
      const CharacterGroup g(q);
      const auto chars = g.characters();
      std::vector<std::complex<double>> taus;
      for (const auto& chi : chars) taus.push_back(gauss_sum(chi.conj()));
      const double inv_phi = 1.0 / static_cast<double>(chars.size());
      for (u64 a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        for (u64 m = 1; m <= q; ++m) {
          if (std::gcd(m, q) != 1) continue;
          std::complex<double> s{0.0, 0.0};
          for (std::size_t i = 0; i < chars.size(); ++i) {
            s += chars[i](static_cast<i64>(a * m)) * taus[i];
          }
          s *= inv_phi;
          const auto expect = unit_phase(static_cast<i64>(a * m), static_cast<i64>(q));
          if (std::abs(s - expect) > 1e-9) return msg("relation fails q=", q, " a=", a, " m=", m);
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_check("n_p via cubic characters (p <= 2000, k <= 200)", [] {
    for (u64 p : primes_below(2000)) {
      for (i64 k = 1; k <= 200; ++k) {
        if (np_via_characters(k, p) != count_cube_roots(k, p)) {
          return msg("mismatch k=", k, " p=", p);
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_check("tau(chi) tau(conj chi) = chi(-1) q, primitive, q <= 200", [] {
    for (u64 q = 1; q <= 200; ++q) {
      const CharacterGroup g(q);
      for (const auto& chi : g.characters()) {
        if (!chi.is_primitive()) continue;
        const auto lhs = gauss_sum(chi) * gauss_sum(chi.conj());
        const auto rhs = chi(-1) * static_cast<double>(q);
        if (std::abs(lhs - rhs) > 1e-9) return msg("fails at q=", q);
        if (std::abs(std::abs(gauss_sum(chi)) - std::sqrt(static_cast<double>(q))) > 1e-9) {
          return msg("|tau| != sqrt q at q=", q);
        }
      }
    }
    return std::string();
  }));
  return out;
}

// --- eisenstein ---------------------------------------------------------------

std::vector<CheckResult> eisenstein_suite() {
  std::vector<CheckResult> out;
  out.push_back(run_check("norm multiplicative and Euclidean division (1e4 random pairs)", [] {
    std::mt19937_64 rng(20260401);
    std::uniform_int_distribution<i64> coord(-10'000, 10'000);
    for (int i = 0; i < 10'000; ++i) {
      const EisensteinInt x{coord(rng), coord(rng)};
      EisensteinInt y{coord(rng), coord(rng)};
      if (y.is_zero()) y = {1, 0};
      if ((x * y).norm() != x.norm() * y.norm()) return msg("N(xy) != N(x)N(y) at ", to_string(x));
      const auto dm = eis_divmod(x, y);
      if (!(dm.quotient * y + dm.remainder == x)) return msg("x != qy + r at ", to_string(x));
      if (dm.remainder.norm() >= y.norm()) return msg("N(r) >= N(y) at ", to_string(x));
    }
    return std::string();
  }));
  out.push_back(run_check("cubic symbol is a cubic Dirichlet character (p <= 2000)", [] {
    for (u64 p : primes_below(2000)) {
      if (p % 3 != 1) continue;
      const auto pi = factor_rational_prime(p).factors[0];
      const auto chis = cubic_characters(p);
      bool first = true;
      bool second = true;
      for (i64 k = 1; k < static_cast<i64>(p); ++k) {
        const auto s = cubic_residue_symbol({k, 0}, pi);
        if (s != chis[0].evaluate(k)) first = false;
        if (s != chis[1].evaluate(k)) second = false;
      }
      if (!first && !second) return msg("symbol matches neither character at p=", p);
    }
    return std::string();
  }));
  out.push_back(run_check("n_p from the primes above p (p <= 2000, k <= 200)", [] {
    for (u64 p : primes_below(2000)) {
      if (p == 3) continue;
      for (i64 k = 1; k <= 200; ++k) {
        if (k % static_cast<i64>(p) == 0) continue;
        if (np_via_symbols(k, p) != count_cube_roots(k, p)) return msg("mismatch k=", k, " p=", p);
      }
    }
    return std::string();
  }));
  out.push_back(run_check("cubic reciprocity, primary pairs with norm <= 300", [] {
    std::vector<EisensteinInt> prim;
    for (i64 a = -40; a <= 40; ++a) {
      for (i64 b = -40; b <= 40; ++b) {
        const EisensteinInt x{a, b};
        const i64 n = x.norm();
        if (n == 0 || n > 300 || n % 3 == 0 || !is_primary(x)) continue;
        prim.push_back(x);
      }
    }
    for (const auto& x : prim) {
      for (const auto& y : prim) {
        if (!eis_gcd(x, y).is_unit()) continue;
        if (!reciprocity_check(x, y).equal) return msg("fails for ", to_string(x), ", ", to_string(y));
      }
    }
    return std::string();
  }));
  return out;
}

// --- singular ------------------------------------------------------------------

std::vector<CheckResult> singular_suite() {
  std::vector<CheckResult> out;
  out.push_back(run_check("Sigma(q) exact sum = prime-product formula (squarefree q <= 3000, k <= 50)", [] {
    std::vector<i64> ks(50);
    std::iota(ks.begin(), ks.end(), 1);
    for (u64 q = 1; q <= 3000; ++q) {
      if (!factorize(q).squarefree()) continue;
      const auto sums = sigma_q_batch(ks, q);
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (sums[i] != sigma_q_formula(ks[i], q)) return msg("mismatch q=", q, " k=", ks[i]);
      }
    }
    return std::string();
  }));
  out.push_back(run_check("Sigma multiplicative on coprime squarefree pairs (q1 q2 <= 1e4, k <= 5)", [] {
    for (i64 k = 1; k <= 5; ++k) {
      std::vector<i64> cache(10'001, 0);
      std::vector<bool> sf(10'001, false);
      for (u64 q = 1; q <= 10'000; ++q) {
        sf[q] = factorize(q).squarefree();
        if (sf[q]) cache[q] = sigma_q(k, q);
      }
      for (u64 q1 = 2; q1 <= 100; ++q1) {
        if (!sf[q1]) continue;
        for (u64 q2 = q1 + 1; q1 * q2 <= 10'000; ++q2) {
          if (!sf[q2] || std::gcd(q1, q2) != 1) continue;
          if (cache[q1 * q2] != cache[q1] * cache[q2]) {
            return msg("fails k=", k, " q1=", q1, " q2=", q2);
          }
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_check("Sigma(p) = p (n_p - 1) (p <= 2000)", [] {
    for (u64 p : primes_below(2000)) {
      for (i64 k = 1; k <= 20; ++k) {
        if (sigma_q(k, p) != static_cast<i64>(p) * (count_cube_roots(k, p) - 1)) {
          return msg("fails p=", p, " k=", k);
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_check("reducible k: Euler product strictly decreasing past 3k", [] {
    for (i64 k : {1, 8, -8, 27, 64}) {
      const u64 bad = static_cast<u64>(3 * std::llabs(k));
      double prev = 1.0;
      for (const auto& [p, v] : singular_series_partials(k, 20'000)) {
        const bool nontrivial = p % 3 == 1 && bad % p != 0;
        if (nontrivial && !(v < prev)) return msg("not decreasing k=", k, " p=", p);
        if (!nontrivial && v != prev) return msg("trivial factor moved value k=", k, " p=", p);
        prev = v;
      }
    }
    return std::string();
  }));
  return out;
}

// --- circle ----------------------------------------------------------------------

std::vector<CheckResult> circle_suite() {
  std::vector<CheckResult> out;
  out.push_back(run_check("S2 = T2 + E2 (q <= 30, all a, 5 betas, x in {10, 50, 200})", [] {
    const i64 Q = 1000;
    for (u64 q = 1; q <= 30; ++q) {
      const double r = 1.0 / static_cast<double>(q * Q);
      for (u64 a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        for (double beta : {0.0, 1e-4, -1e-4, r, -r}) {
          for (u64 x : {10, 50, 200}) {
            const auto d = s2_decompose(static_cast<i64>(a), q, beta, x);
            if (std::abs(d.residual()) > 1e-9 * std::max(1.0, std::abs(d.S))) {
              return msg("residual ", std::abs(d.residual()), " at q=", q, " a=", a);
            }
          }
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_check("|T1| <= min(z, 1/(2|beta|)) + 1", [] {
    const SieveTables sieve(2000);
    for (u64 q : {1, 2, 3, 5, 6, 7, 30}) {
      for (double beta : {1e-3, 0.01, 0.1, 0.25, 0.5}) {
        for (u64 z : {100, 1000, 2000}) {
          const auto d = s1_decompose(1, q, beta, z, sieve);
          const double bound = std::min(static_cast<double>(z), 1.0 / (2.0 * beta)) + 1.0;
          if (std::abs(d.T) > bound) return msg("bound fails q=", q, " beta=", beta);
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_check("Dirichlet approximations classify as their own major arc", [] {
    const auto arcs = build_arcs(5, 100);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
      const double alpha = unit(rng);
      const auto ap = dirichlet_approx(alpha, 100);
      if (ap.q > 5) continue;
      const auto cls = arcs.classify(alpha);
      const auto* major = std::get_if<MajorArc>(&cls);
      // a/q and (a+q)/q name the same arc once alpha is shifted mod 1.
      if (major == nullptr || major->q != ap.q ||
          mod_floor(major->a - ap.a, static_cast<u64>(ap.q)) != 0) {
        return msg("classification disagrees at alpha=", alpha);
      }
    }
    return std::string();
  }));
  out.push_back(run_check("sum over a of E1(a/q) = mu(q)(psi(z) - z)", [] {
    const SieveTables sieve(500);
    for (u64 q = 1; q <= 30; ++q) {
      for (u64 z : {100, 500}) {
        std::complex<double> total{0.0, 0.0};
        for (u64 a = 1; a <= q; ++a) {
          if (std::gcd(a, q) != 1) continue;
          total += s1_decompose(static_cast<i64>(a), q, 0.0, z, sieve).E;
        }
        const double expect = mobius(q) * (sieve.chebyshev_psi(z) - static_cast<double>(z));
        if (std::abs(total - expect) > 1e-7 * std::max(1.0, std::abs(expect))) {
          return msg("fails q=", q, " z=", z);
        }
      }
    }
    return std::string();
  }));
  return out;
}

// --- harness -----------------------------------------------------------------------

std::vector<CheckResult> harness_suite(unsigned workers) {
  std::vector<CheckResult> out;
  out.push_back(run_check("Lambda-sum equals convolution direct value", [] {
    const SieveTables sieve(1000);
    for (i64 k : {1, 2, 5}) {
      for (u64 x : {1, 2, 3, 5}) {
        const u64 z = x * x * x + static_cast<u64>(k);
        const auto conv = convolution_check(k, x, z, 2 * z + 1, sieve);
        if (std::abs(conv.direct - lambda_sum_cubic(k, x, sieve)) > 1e-9) {
          return msg("mismatch k=", k, " x=", x);
        }
      }
    }
    return std::string();
  }));
  out.push_back(run_check("second moment bit-stable across 1, 2, 8 workers", [workers] {
    ExperimentConfig cfg;
    cfg.x = 12;
    cfg.y = 1728;
    cfg.p_max = 20'000;
    std::optional<double> ref;
    for (unsigned w : {1u, 2u, 8u, workers}) {
      cfg.workers = w;
      const auto rep = second_moment(cfg);
      if (!ref) ref = rep.normalized_moment;
      if (rep.normalized_moment != ref) return msg("D differs at workers=", w);
    }
    return std::string();
  }));
  out.push_back(run_check("squarefree filter agrees with mobius", [] {
    ExperimentConfig cfg;
    cfg.x = 10;
    cfg.y = 1000;
    cfg.p_max = 1000;
    const auto rep = second_moment(cfg);
    std::size_t expect = 0;
    for (u64 k = 1; k <= cfg.y; ++k) expect += mobius(k) != 0 ? 1 : 0;
    if (rep.rows.size() != expect) return msg("row count ", rep.rows.size(), " != ", expect);
    for (const auto& row : rep.rows) {
      if (mobius(static_cast<u64>(row.k)) == 0) return msg("non-squarefree row k=", row.k);
    }
    return std::string();
  }));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "arith", "characters", "eisenstein", "singular", "circle", "harness", "all"};
  return names;
}

SuiteSummary run_suite(const std::string& name, unsigned workers) {
  SuiteSummary summary;
  summary.suite = name;
  auto append = [&](std::vector<CheckResult> part) {
    for (auto& c : part) summary.checks.push_back(std::move(c));
  };
  const bool all = name == "all";
  bool known = all;
  if (all || name == "arith") { append(arith_suite()); known = true; }
  if (all || name == "characters") { append(characters_suite()); known = true; }
  if (all || name == "eisenstein") { append(eisenstein_suite()); known = true; }
  if (all || name == "singular") { append(singular_suite()); known = true; }
  if (all || name == "circle") { append(circle_suite()); known = true; }
  if (all || name == "harness") { append(harness_suite(workers)); known = true; }
  if (!known) throw UsageError("unknown suite '" + name + "'");
  return summary;
}

}  // namespace cubicbh
