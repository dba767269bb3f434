#include <cmath>
#include <numeric>
#include <numbers>
#include <random>

#include "cubicbh/circle.hpp"
#include "cubicbh/errors.hpp"
#include "doctest.h"

using namespace cubicbh;

TEST_CASE("exact phase reduction") {
  CHECK(phase_frac(0.5, 3) == 0.5);
  CHECK(phase_frac(0.25, 8) == 0.0);
  CHECK(phase_frac(-0.25, 1) == 0.75);
  // alpha = 1/3 as a double is slightly below 1/3; frac(alpha * 3e12) must
  // reflect that error exactly rather than a rounded product.
  const double third = 1.0 / 3.0;
  const u64 m = 3'000'000'000'000ULL;
  const mpq_class exact = mpq_class(third) * mpq_class(mpz_class(std::to_string(m)));
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), exact.get_num_mpz_t(), exact.get_den_mpz_t());
  const double expect = mpq_class(exact - fl).get_d();
  CHECK(phase_frac(third, m) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("exponential sums") {
  const SieveTables sieve(10'000);
  CHECK(std::abs(s2_sum(0.0, 10) - cplx(10.0, 0.0)) < 1e-12);
  CHECK(std::abs(s1_sum(0.0, 10, sieve) - cplx(std::log(2520.0), 0.0)) < 1e-12);
  CHECK(std::abs(s2_sum(0.5, 4)) < 1e-12);
  CHECK_THROWS_AS(s1_sum(0.1, 10'001, sieve), CapacityError);
  CHECK_THROWS_AS(s2_sum(0.1, 300'000), CapacityError);

  const cplx a = s1_sum(0.123456, 10'000, sieve, 1);
  const cplx b = s1_sum(0.123456, 10'000, sieve, 7);
  CHECK(a == b);
  CHECK(s2_sum(0.7071, 20'000, 1) == s2_sum(0.7071, 20'000, 5));
}

TEST_CASE("S2 split identity") {
  const auto d1 = s2_decompose(1, 1, 0.0, 10);
  CHECK(std::abs(d1.T - cplx(10.0, 0.0)) < 1e-12);
  CHECK(std::abs(d1.E) < 1e-12);

  const auto d2 = s2_decompose(1, 2, 0.0, 4);
  CHECK(std::abs(d2.T + d2.E) < 1e-12);

  const auto d7 = s2_decompose(1, 7, 1e-4, 50);
  CHECK(std::abs(d7.residual()) < 1e-9 * std::max(1.0, std::abs(d7.S)));
  CHECK(std::abs(d7.E) > 1e-6);  // nontrivial cubic characters do contribute

  CHECK_THROWS_AS(s2_decompose(2, 4, 0.0, 10), DomainError);

  for (u64 q : {9ULL, 12ULL, 13ULL, 27ULL, 28ULL}) {
    for (i64 a = 1; a <= static_cast<i64>(q); ++a) {
      if (std::gcd<u64>(a, q) != 1) continue;
      const auto d = s2_decompose(a, q, 3e-5, 60);
      CHECK(std::abs(d.residual()) < 1e-9 * std::max(1.0, std::abs(d.S)));
      CHECK(std::abs(d.T - t2_via_cubic_sums(a, q, 3e-5, 60)) < 1e-9 * std::max(1.0, std::abs(d.T)));
      const cplx direct = s2_sum(static_cast<double>(a) / static_cast<double>(q) + 3e-5, 60);
      CHECK(std::abs(direct - d.S) < 1e-8);
    }
  }
}

TEST_CASE("S1 decomposition") {
  const SieveTables sieve(1000);
  const auto d = s1_decompose(1, 1, 0.0, 10, sieve);
  CHECK(std::abs(d.T - cplx(10.0, 0.0)) < 1e-12);
  CHECK(std::abs(d.E - cplx(std::log(2520.0) - 10.0, 0.0)) < 1e-12);
  CHECK(std::abs(d.residual()) < 1e-12);

  const double l30 = std::log(30.0);
  CHECK(std::abs(s1_decompose(1, 3, 0.0, 30, sieve).residual()) <= 10 * l30 * l30);
  const double l100 = std::log(100.0);
  CHECK(std::abs(s1_decompose(2, 3, 1e-3, 100, sieve).residual()) <= 10 * l100 * l100);

  // the residual is exactly the prime-power terms with gcd(m, q) > 1
  for (u64 q : {3ULL, 10ULL, 12ULL}) {
    for (i64 a = 1; a <= static_cast<i64>(q); ++a) {
      if (std::gcd<u64>(a, q) != 1) continue;
      const auto dd = s1_decompose(a, q, 2e-3, 800, sieve);
      // S counts these terms at their true phase, T + E at phase beta m
      // with weight mu(q)/phi(q)
      const double w = static_cast<double>(mobius(q)) / static_cast<double>(euler_phi(q));
      cplx expect{0.0, 0.0};
      for (u64 m = 1; m <= 800; ++m) {
        if (std::gcd(m, q) == 1) continue;
        const double lam = sieve.von_mangoldt(m).value;
        if (lam == 0.0) continue;
        const double b = 2e-3 * static_cast<double>(m);
        const double ph = static_cast<double>(a) * static_cast<double>(m) / static_cast<double>(q) + b;
        expect += lam * std::polar(1.0, 2.0 * std::numbers::pi * ph);
        expect -= w * lam * std::polar(1.0, 2.0 * std::numbers::pi * b);
      }
      CHECK(std::abs(dd.residual() - expect) < 1e-8);
    }
  }
  CHECK_THROWS_AS(s1_decompose(1, 3, 0.0, 1001, sieve), CapacityError);
  CHECK_THROWS_AS(s1_decompose(3, 3, 0.0, 10, sieve), DomainError);
}

TEST_CASE("Dirichlet approximation") {
  const auto pi = dirichlet_approx(std::numbers::pi, 100);
  CHECK(pi.a == 22);
  CHECK(pi.q == 7);
  CHECK(std::abs(pi.beta) == doctest::Approx(1.26448927e-3).epsilon(1e-6));
  CHECK(std::abs(pi.beta) <= 1.0 / 700.0);

  const auto third = dirichlet_approx(1.0 / 3.0, 10);
  CHECK(third.a == 1);
  CHECK(third.q == 3);
  CHECK(std::abs(third.beta) < 1e-16);

  const auto half = dirichlet_approx(0.5 + 1e-9, 10);
  CHECK(half.a == 1);
  CHECK(half.q == 2);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = u(rng);
    for (i64 Q : {1, 7, 100, 12345}) {
      const auto r = dirichlet_approx(alpha, Q);
      CHECK(r.q >= 1);
      CHECK(r.q <= Q);
      CHECK(std::gcd(r.a, r.q) == 1);
      CHECK(std::abs(r.beta) <= 1.0 / (static_cast<double>(r.q) * static_cast<double>(Q)) * (1 + 1e-12));
    }
  }
  CHECK_THROWS_AS(dirichlet_approx(0.3, 0), DomainError);
}

TEST_CASE("major arcs") {
  const auto arcs = build_arcs(3, 30);
  REQUIRE(arcs.arcs().size() == 4);
  CHECK(arcs.arcs()[0].center == mpq_class(1, 3));
  CHECK(arcs.arcs()[3].center == 1);
  CHECK(arcs.classify(0.34) == ArcClass{MajorArc{1, 3}});
  CHECK(arcs.classify(0.41) == ArcClass{MinorArc{}});
  CHECK(arcs.classify(1.0) == ArcClass{MajorArc{1, 1}});
  CHECK(arcs.classify(0.01) == ArcClass{MajorArc{1, 1}});
  CHECK(arcs.classify(2.5) == ArcClass{MajorArc{1, 2}});
  CHECK(arcs.classify(-1.0 / 3.0) == ArcClass{MajorArc{2, 3}});
  CHECK_THROWS_AS(build_arcs(3, 18), ConfigError);
  CHECK_NOTHROW(build_arcs(3, 19));
  // boundary: the arc radius is closed
  const auto e = build_arcs(1, 4);
  CHECK(e.classify(0.25) == ArcClass{MajorArc{1, 1}});
  CHECK(e.classify(0.75) == ArcClass{MajorArc{1, 1}});
  CHECK(e.classify(0.5) == ArcClass{MinorArc{}});

  const auto [q1, q] = default_arc_parameters(1000);
  CHECK(q1 == 48);
  CHECK(q > 2 * q1 * q1);
  CHECK_NOTHROW(build_arcs(q1, q));
}

TEST_CASE("Weyl bound") {
  CHECK(weyl_rhs(0.0, 10) >= 10.0);
  const double golden = std::numbers::phi;
  CHECK(weyl_rhs(golden, 40) >= std::abs(s2_sum(-golden, 40)));
  CHECK(dist_to_int(2.3) == doctest::Approx(0.3));
  CHECK(dist_to_int(-0.9) == doctest::Approx(0.1));
  CHECK_THROWS_AS(weyl_rhs(0.1, 0), DomainError);
}

TEST_CASE("convolution identity on a grid") {
  const SieveTables sieve(200);
  const auto a = convolution_check(1, 3, 30, 64, sieve);
  CHECK(a.direct == doctest::Approx(std::log(6.0)));
  CHECK(a.integral == doctest::Approx(std::log(6.0)).epsilon(1e-9));
  CHECK(a.agree);
  const auto b = convolution_check(2, 2, 12, 32, sieve);
  CHECK(b.direct == doctest::Approx(std::log(3.0)));
  CHECK(b.agree);
  const auto c = convolution_check(1, 1, 3, 8, sieve);
  CHECK(c.direct == doctest::Approx(std::log(2.0)));
  CHECK(c.agree);
  CHECK_THROWS_AS(convolution_check(1, 3, 30, 58, sieve), PrecisionError);
  CHECK_THROWS_AS(convolution_check(1, 3, 20, 64, sieve), DomainError);
}

TEST_CASE("Perron integral") {
  const cplx up = perron_integral(2.0, 1.0, 200.0);
  CHECK(std::abs(up - 1.0) <= perron_error_bound(2.0, 1.0, 200.0));
  CHECK(std::abs(up - 1.0) < 0.029);
  const cplx down = perron_integral(0.5, 1.0, 200.0);
  CHECK(std::abs(down) <= perron_error_bound(0.5, 1.0, 200.0));
  // error shrinks roughly like 1/T
  const double e1 = std::abs(perron_integral(2.0, 1.0, 100.0) - 1.0);
  const double e2 = std::abs(perron_integral(2.0, 1.0, 10'000.0) - 1.0);
  CHECK(e2 < e1 / 10.0);
  CHECK_THROWS_AS(perron_integral(1.0, 1.0, 10.0), DomainError);
  CHECK_THROWS_AS(perron_integral(2.0, 0.0, 10.0), DomainError);
}
