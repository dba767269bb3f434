#include <cmath>
#include <sstream>

#include "cubicbh/errors.hpp"
#include "cubicbh/harness.hpp"
#include "cubicbh/singular.hpp"
#include "doctest.h"
#include "golden.hpp"

using namespace cubicbh;

TEST_CASE("config parsing") {
  std::istringstream in(
      "# desk run\n"
      "x = 30\n"
      "y=1000   # trailing comment\n"
      "p_max = 5000\n"
      "squarefree_only = false\n"
      "workers = 4\n"
      "output = out.csv\n"
      "\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.x == 30);
  CHECK(cfg.y == 1000);
  CHECK(cfg.p_max == 5000);
  CHECK_FALSE(cfg.squarefree_only);
  CHECK(cfg.workers == 4);
  CHECK(cfg.output == "out.csv");
  CHECK(cfg.effective_sieve_limit() == 27'000 + 1000);
  CHECK_NOTHROW(cfg.validate());

  std::istringstream bad_key("z = 3\n");
  CHECK_THROWS_AS(parse_config(bad_key), UsageError);
  std::istringstream bad_value("x = -3\n");
  CHECK_THROWS_AS(parse_config(bad_value), UsageError);
  std::istringstream no_eq("x 3\n");
  CHECK_THROWS_AS(parse_config(no_eq), UsageError);
  std::istringstream bad_bool("squarefree_only = maybe\n");
  CHECK_THROWS_AS(parse_config(bad_bool), UsageError);
  CHECK_THROWS_AS(load_config("/nonexistent/cubicbh.conf"), UsageError);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.x = 10;
  cfg.y = 1001;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.y = 1000;
  cfg.sieve_limit = 1999;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.sieve_limit = 2000;
  CHECK_NOTHROW(cfg.validate());
  cfg.workers = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("Lambda sums along n^3 + k") {
  const SieveTables sieve(10'000);
  CHECK(lambda_sum_cubic(1, 3, sieve) == doctest::Approx(std::log(6.0)));
  CHECK(lambda_sum_cubic(2, 2, sieve) == doctest::Approx(std::log(3.0)));
  CHECK(lambda_sum_cubic(5, 0, sieve) == 0.0);
  const auto terms = lambda_terms_cubic(1, 3, sieve);
  REQUIRE(terms.size() == 3);
  CHECK(terms[1].lambda.prime == 3);
  CHECK(terms[1].lambda.exponent == 2);
  CHECK_THROWS_AS(lambda_sum_cubic(-1, 3, sieve), DomainError);
  CHECK_THROWS_AS(lambda_sum_cubic(1, 30, sieve), CapacityError);
}

TEST_CASE("Bateman-Horn residuals") {
  const SieveTables big(200ULL * 200 * 200 + 10);
  const auto r8 = bh_residual(8, 200, 100'000, big);
  // the reducible case decays only like (log P)^-2
  CHECK(r8.singular < 0.2);
  CHECK(r8.singular < singular_series(8, 1000).value);
  // n^3 + 8 = (n + 2)(n^2 - 2n + 4) is a prime power only for tiny n
  CHECK(r8.lambda_sum < 5.0);

  const auto r2 = bh_residual(2, 200, 100'000, big);
  CHECK(r2.residual == doctest::Approx(r2.lambda_sum - r2.singular * 200.0));
  CHECK(r2.residual == doctest::Approx(kGoldenResidualK2X200).epsilon(1e-12));
  CHECK_THROWS_AS(bh_residual(0, 10, 100, big), DomainError);
}

TEST_CASE("second moment") {
  ExperimentConfig cfg;
  cfg.x = 10;
  cfg.y = 1000;
  cfg.p_max = 10'000;
  const auto rep = second_moment(cfg);
  REQUIRE(rep.normalized_moment.has_value());
  REQUIRE_FALSE(rep.rows.empty());
  for (std::size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i - 1].k < rep.rows[i].k);

  const SieveTables sieve(2000);
  double sum_sq = 0.0;
  for (const auto& row : rep.rows) {
    CHECK(row.lambda_sum == lambda_sum_cubic(row.k, 10, sieve));
    CHECK(row.singular == doctest::Approx(singular_series(row.k, 10'000).value).epsilon(1e-12));
    sum_sq += row.residual * row.residual;
  }
  CHECK(*rep.normalized_moment == doctest::Approx(sum_sq / (1000.0 * 100.0)));

  cfg.squarefree_only = false;
  CHECK(second_moment(cfg).rows.size() == 1000);

  cfg.y = 0;
  const auto empty = second_moment(cfg);
  CHECK(empty.rows.empty());
  CHECK_FALSE(empty.normalized_moment.has_value());
}

TEST_CASE("second moment truncation resample") {
  ExperimentConfig cfg;
  cfg.x = 10;
  cfg.y = 1000;
  cfg.p_max = 1000;
  MomentOptions opt;
  opt.truncation_stride = 100;
  opt.truncation_p_max = 100'000;
  const auto rep = second_moment(cfg, opt);
  REQUIRE(rep.truncation.has_value());
  CHECK(rep.truncation->rows == (rep.rows.size() + 99) / 100);
  CHECK(rep.truncation->max_singular_delta > 0.0);
}

TEST_CASE("CSV output") {
  MomentReport rep;
  rep.rows.push_back({1, 0.6931471805599453, 0.5, -0.3068528194400547});
  rep.rows.push_back({2, 1.0986122886681098, 1.25, 0.0});
  std::ostringstream out;
  write_csv(rep, out);
  CHECK(out.str() ==
        "k,lambda_sum,singular_series,residual\n"
        "1,0.69314718056,0.5,-0.30685281944\n"
        "2,1.09861228867,1.25,0\n");
}

TEST_CASE("invariant suites") {
  CHECK_THROWS_AS(run_suite("bogus"), UsageError);
  const auto e = run_suite("eisenstein");
  CHECK(e.ok());
  CHECK(e.checks.size() == 4);

  const auto all = run_suite("all", 4);
  for (const auto& c : all.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
  CHECK(all.checks.size() == 22);
  CHECK(all.failed() == 0);
  CHECK(suite_names().size() == 7);
}
