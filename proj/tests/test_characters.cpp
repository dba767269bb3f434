#include <cmath>
#include <numeric>

#include "cubicbh/characters.hpp"
#include "cubicbh/errors.hpp"
#include "doctest.h"

using namespace cubicbh;

namespace {

DirichletCharacter first_of_order(const CharacterGroup& g, u64 order) {
  for (const auto& chi : g.characters()) {
    if (chi.order() == order) return chi;
  }
  throw std::logic_error("no character of that order");
}

}  // namespace

TEST_CASE("root of unity normalisation") {
  const RootOfUnity r(-2, 6);
  CHECK(r.num() == 2);
  CHECK(r.den() == 3);
  CHECK(RootOfUnity(4, 4).is_one());
  CHECK(RootOfUnity(4, 4).den() == 1);
  CHECK((RootOfUnity(1, 3) * RootOfUnity(1, 6)) == RootOfUnity(1, 2));
  CHECK(RootOfUnity(1, 3).pow(3).is_one());
  CHECK(RootOfUnity(1, 3).conj() == RootOfUnity(2, 3));
  for (i64 d = 1; d <= 50; ++d) {
    for (i64 n = 0; n < d; ++n) CHECK(std::abs(std::abs(RootOfUnity(n, d).value()) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(RootOfUnity(1, 0), DomainError);
}

TEST_CASE("group sizes") {
  CHECK(CharacterGroup(7).size() == 6);
  CHECK(CharacterGroup(1).size() == 1);
  const CharacterGroup g12(12);
  CHECK(g12.size() == 4);
  for (const auto& chi : g12.characters()) CHECK(chi.order() <= 2);
  for (u64 q = 1; q <= 300; ++q) {
    const CharacterGroup g(q);
    CHECK(g.size() == euler_phi(q));
    int principal = 0;
    for (const auto& chi : g.characters()) principal += chi.is_principal() ? 1 : 0;
    CHECK(principal == 1);
  }
  CHECK_THROWS_AS(CharacterGroup(0), DomainError);
  CHECK_THROWS_AS(CharacterGroup(kCharacterModulusBound + 1), CapacityError);
}

TEST_CASE("evaluation") {
  const CharacterGroup g7(7);
  CHECK(g7.principal().evaluate(3) == RootOfUnity::one());
  for (const auto& chi : g7.characters()) CHECK_FALSE(chi.evaluate(14).has_value());
  const auto cubic = cubic_characters(7);
  const auto v = cubic[0].evaluate(2);
  REQUIRE(v.has_value());
  CHECK(v->den() == 3);
  CHECK(cubic[0].evaluate(6) == RootOfUnity::one());
  CHECK(cubic[0].evaluate(-1) == RootOfUnity::one());
  CHECK(CharacterGroup(1).principal().evaluate(0) == RootOfUnity::one());
}

TEST_CASE("characters are multiplicative and periodic") {
  for (u64 q : {8ULL, 15ULL, 16ULL, 24ULL, 63ULL, 64ULL, 100ULL, 125ULL}) {
    const CharacterGroup g(q);
    for (const auto& chi : g.characters()) {
      for (i64 m = 1; m < static_cast<i64>(q); ++m) {
        CHECK(chi.evaluate(m) == chi.evaluate(m + static_cast<i64>(q)));
        for (i64 n = 1; n < static_cast<i64>(q); n += 3) {
          const auto a = chi.evaluate(m);
          const auto b = chi.evaluate(n);
          const auto ab = chi.evaluate(m * n);
          if (a && b) {
            CHECK(ab == (*a) * (*b));
          } else {
            CHECK_FALSE(ab.has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("character order is the lcm of factor orders") {
  const CharacterGroup g(40);
  for (const auto& chi : g.characters()) {
    u64 k = 1;
    while (!chi.pow(k).is_principal()) ++k;
    CHECK(k == chi.order());
    CHECK(chi.pow(chi.order()) == g.principal());
  }
}

TEST_CASE("cubic characters") {
  for (u64 p : {7ULL, 13ULL, 19ULL, 31ULL}) {
    const auto c = cubic_characters(p);
    CHECK(c[0].order() == 3);
    CHECK(c[1].order() == 3);
    CHECK(c[1] == c[0].conj());
    CHECK(c[0].evaluate(static_cast<i64>(primitive_root(p))) == RootOfUnity(1, 3));
  }
  CHECK_THROWS_AS(cubic_characters(5), DomainError);
  CHECK_THROWS_AS(cubic_characters(3), DomainError);
}

TEST_CASE("n_p from characters") {
  CHECK(np_via_characters(1, 7) == 3);
  CHECK(np_via_characters(2, 7) == 0);
  CHECK(np_via_characters(2, 5) == 1);
  CHECK(np_via_characters(7, 7) == 1);
  for (u64 p = 2; p < 600; ++p) {
    if (!is_prime(p)) continue;
    for (i64 k = -20; k <= 60; ++k) CHECK(np_via_characters(k, p) == count_cube_roots(k, p));
  }
}

TEST_CASE("gauss sums") {
  const CharacterGroup g3(3);
  const auto chi = first_of_order(g3, 2);
  const auto t = gauss_sum(chi);
  CHECK(std::abs(t.real()) < 1e-12);
  CHECK(t.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  const auto t1 = gauss_sum(CharacterGroup(1).principal());
  CHECK(std::abs(t1 - std::complex<double>(1.0, 0.0)) < 1e-12);

  const CharacterGroup g5(5);
  for (const auto& c : g5.characters()) {
    if (c.is_principal()) continue;
    CHECK(c.is_primitive());
    CHECK(std::abs(gauss_sum(c)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  }
  // principal character mod prime p: tau = -1
  CHECK(std::abs(gauss_sum(g5.principal()) + 1.0) < 1e-12);
}

TEST_CASE("primitivity") {
  // mod 8: one primitive quadratic pair (two of them), principal and the
  // character induced from mod 4 are not primitive.
  const CharacterGroup g8(8);
  int primitive = 0;
  for (const auto& chi : g8.characters()) primitive += chi.is_primitive() ? 1 : 0;
  CHECK(primitive == 2);
  // no primitive characters mod 2 (mod q = 2 mod 4 in general)
  for (const auto& chi : CharacterGroup(6).characters()) CHECK_FALSE(chi.is_primitive());
  CHECK(CharacterGroup(1).principal().is_primitive());
}

TEST_CASE("Polya-Vinogradov window maxima") {
  const CharacterGroup g5(5);
  const auto r = polya_vinogradov_check(first_of_order(g5, 2));
  CHECK(r.max_window_sum == doctest::Approx(2.0));
  CHECK(r.bound == doctest::Approx(6.0 * std::sqrt(5.0) * std::log(5.0)));
  CHECK(r.pass);
  CHECK_THROWS_AS(polya_vinogradov_check(CharacterGroup(7).principal()), DomainError);

  // window maximum against a direct scan over all windows inside [1, 2q]
  for (u64 q : {7ULL, 12ULL, 15ULL}) {
    for (const auto& chi : CharacterGroup(q).characters()) {
      if (chi.is_principal()) continue;
      double best = 0.0;
      for (u64 m = 0; m < 2 * q; ++m) {
        std::complex<double> s{0.0, 0.0};
        for (u64 n = m + 1; n <= 2 * q; ++n) {
          s += chi(static_cast<i64>(n));
          best = std::max(best, std::abs(s));
        }
      }
      CHECK(polya_vinogradov_check(chi).max_window_sum == doctest::Approx(best).epsilon(1e-9));
    }
  }
}

TEST_CASE("unit phases") {
  CHECK(std::abs(unit_phase(0.25) - std::complex<double>(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(unit_phase(1, 2) + 1.0) < 1e-15);
  CHECK(std::abs(unit_phase(7, 4) - std::complex<double>(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(unit_phase(-1, 4) - std::complex<double>(0.0, -1.0)) < 1e-15);
}
