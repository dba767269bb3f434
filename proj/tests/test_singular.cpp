#include <cmath>
#include <numeric>

#include "cubicbh/errors.hpp"
#include "cubicbh/singular.hpp"
#include "doctest.h"
#include "golden.hpp"

using namespace cubicbh;

TEST_CASE("local factors") {
  const auto a = local_factor(1, 7);
  CHECK(a.n_p == 3);
  CHECK(a.num == 2);
  CHECK(a.den == 3);
  const auto b = local_factor(2, 7);
  CHECK(b.num == 7);
  CHECK(b.den == 6);
  const auto c = local_factor(2, 5);
  CHECK(c.num == 1);
  CHECK(c.den == 1);
  CHECK(c.value == 1.0);
  // n^3 + k always has exactly one root mod 2
  CHECK(local_factor(1, 2).value == 1.0);
  CHECK(local_factor(2, 2).value == 1.0);
  CHECK(local_factor(5, 3).value == 1.0);
  CHECK_THROWS_AS(local_factor(1, 9), DomainError);

  for (u64 p = 5; p < 2000; ++p) {
    if (!is_prime(p) || p % 3 != 1) continue;
    for (i64 k = 1; k <= 30; ++k) {
      if (k % static_cast<i64>(p) == 0) continue;
      const auto f = local_factor(k, p);
      const double pd = static_cast<double>(p);
      const auto near = [&](double v) { return std::abs(f.value - v) < 1e-15; };
      const bool allowed = near(1.0 - 2.0 / (pd - 1.0)) || f.value == 1.0 ||
                           near(1.0 + 1.0 / (pd - 1.0));
      CHECK(allowed);
    }
  }
}

TEST_CASE("singular series of a reducible polynomial") {
  const auto lo = singular_series(1, 1000);
  const auto hi = singular_series(1, 1'000'000);
  CHECK(lo.reducible);
  CHECK(lo.value > hi.value);
  CHECK(hi.value > 0.0);
  CHECK(hi.boosting_factors == 0);
  CHECK(singular_series(-8, 100).reducible);
  CHECK_FALSE(singular_series(2, 100).reducible);

  double prev = 2.0;
  for (const auto& cp : hi.checkpoints) {
    CHECK(cp.value <= prev);
    prev = cp.value;
  }
}

TEST_CASE("singular series bookkeeping") {
  const auto r = singular_series(2, 100);
  CHECK(r.k_squarefree);
  CHECK_FALSE(singular_series(12, 100).k_squarefree);
  CHECK(r.reducing_factors + r.unit_factors + r.boosting_factors == 25);
  REQUIRE_FALSE(r.checkpoints.empty());
  CHECK(r.checkpoints.front().bound == 2);
  CHECK(r.checkpoints.back().bound == 100);
  CHECK(r.checkpoints.back().value == r.value);
  CHECK(singular_series(2, 7).value == doctest::Approx(7.0 / 6.0));
  CHECK_THROWS_AS(singular_series(0, 100), DomainError);
  CHECK_THROWS_AS(singular_series(2, 1), DomainError);
}

TEST_CASE("golden: S(2) at P = 1e6") {
  const auto r = singular_series(2, 1'000'000);
  CHECK(r.value == doctest::Approx(kGoldenS2).epsilon(1e-12));
}

TEST_CASE("batch singular series matches the single-k product") {
  std::vector<i64> ks;
  for (i64 k = 1; k <= 300; ++k) ks.push_back(k);
  ks.push_back(-8);
  ks.push_back(1'000'003);
  const auto batch = singular_series_values(ks, 50'000, 3);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    CHECK(batch[i] == doctest::Approx(singular_series(ks[i], 50'000).value).epsilon(1e-12));
  }
  const auto range = singular_series_range(1, 301, 50'000, 2);
  for (std::size_t i = 0; i < range.size(); ++i) CHECK(range[i] == batch[i]);
  const auto partials = singular_series_partials(2, 50'000);
  CHECK(partials.back().value == batch[1]);
}

TEST_CASE("ramanujan sums") {
  CHECK(ramanujan_sum(1, 5) == 1);
  CHECK(ramanujan_sum(7, 0) == 6);
  CHECK(ramanujan_sum(7, 3) == -1);
  CHECK(ramanujan_sum(12, 0) == 4);
  for (u64 q = 1; q <= 60; ++q) {
    for (i64 n = -5; n <= 70; ++n) {
      double re = 0.0;
      for (u64 a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        re += std::cos(2.0 * M_PI * static_cast<double>(a) * static_cast<double>(n) /
                       static_cast<double>(q));
      }
      CHECK(static_cast<double>(ramanujan_sum(q, n)) == doctest::Approx(re).epsilon(1e-9));
    }
  }
}

TEST_CASE("complete sums Sigma(q)") {
  CHECK(sigma_q(1, 7) == 14);
  CHECK(sigma_q(2, 7) == -7);
  CHECK(sigma_q(1, 5) == 0);
  CHECK(sigma_q(5, 1) == 1);
  CHECK(sigma_q_formula(1, 91) == 364);
  CHECK(sigma_q(1, 91) == 364);
  CHECK(sigma_q_formula(1, 35) == 0);
  for (i64 k = -5; k <= 20; ++k) CHECK(sigma_q_formula(k, 6) == 0);
  CHECK_THROWS_AS(sigma_q_formula(1, 12), DomainError);

  for (u64 q = 1; q <= 120; ++q) {
    for (i64 k = -3; k <= 12; ++k) {
      const auto d = sigma_q_direct(k, q);
      CHECK(std::abs(d.imag()) < 1e-6);
      CHECK(std::abs(d.real() - static_cast<double>(sigma_q(k, q))) < 1e-6);
    }
  }
  std::vector<i64> ks{1, 2, 3, 10, -4};
  for (u64 q : {49ULL, 63ULL, 91ULL, 210ULL}) {
    const auto batch = sigma_q_direct_batch(ks, q);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      CHECK(std::abs(batch[i] - sigma_q_direct(ks[i], q)) < 1e-6);
    }
  }
}

TEST_CASE("q-sum form and its tail") {
  CHECK(singular_series_sum_form(2, 1) == 1.0);
  CHECK(singular_series_sum_form(2, 7) == doctest::Approx(7.0 / 6.0));
  CHECK(psi_partial(2, 7, 7) == 0.0);
  CHECK(psi_partial(2, 1, 7) == doctest::Approx(1.0 / 6.0));
  CHECK_THROWS_AS(psi_partial(2, 8, 7), DomainError);
  const double head = singular_series_sum_form(2, 200'000);
  CHECK(std::abs(head - singular_series(2, 1'000'000).value) < 0.05);
  CHECK(singular_series_sum_form(2, 500) + psi_partial(2, 500, 5000) ==
        doctest::Approx(singular_series_sum_form(2, 5000)).epsilon(1e-12));
}
