// cubicbh: command-line front end.
//
// Exit codes: 0 success, 1 a cross-check disagreed, 2 usage or domain error,
// 3 capacity exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cubicbh/characters.hpp"
#include "cubicbh/circle.hpp"
#include "cubicbh/eisenstein.hpp"
#include "cubicbh/errors.hpp"
#include "cubicbh/harness.hpp"
#include "cubicbh/singular.hpp"

using namespace cubicbh;

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

void print_complex(const char* label, cplx v) {
  std::printf("%s %.12g,%.12g\n", label, v.real() + 0.0, v.imag() + 0.0);
}

int cmd_np(i64 k, u64 p) {
  const int brute = count_cube_roots(k, p);
  const int chars = np_via_characters(k, p);
  std::printf("n_p %d\n", brute);
  std::printf("characters %d\n", chars);
  bool ok = brute == chars;
  if (p != 3 && k % static_cast<i64>(p) != 0) {
    const int symbols = np_via_symbols(k, p);
    std::printf("symbols %d\n", symbols);
    ok = ok && brute == symbols;
  }
  return ok ? 0 : kExitCheck;
}

int cmd_symbol(const std::string& n, const std::string& pi) {
  std::printf("%s\n", symbol_label(cubic_residue_symbol(parse_eisenstein(n), parse_eisenstein(pi))).c_str());
  return 0;
}

int cmd_singular(i64 k, u64 p_max) {
  const auto r = singular_series(k, p_max);
  std::printf("value %.12g\n", r.value);
  std::printf("factors reducing=%zu unit=%zu boosting=%zu\n", r.reducing_factors,
              r.unit_factors, r.boosting_factors);
  std::printf("last_window_delta %.6g\n", r.last_window_delta);
  std::printf("squarefree %s\n", r.k_squarefree ? "yes" : "no");
  std::printf("reducible %s\n", r.reducible ? "yes" : "no");
  return 0;
}

int cmd_sigma(i64 k, u64 q, bool direct) {
  const i64 exact = sigma_q(k, q);
  std::printf("sigma %lld\n", static_cast<long long>(exact));
  bool ok = true;
  if (factorize(q).squarefree()) {
    const i64 formula = sigma_q_formula(k, q);
    std::printf("formula %lld\n", static_cast<long long>(formula));
    ok = formula == exact;
  }
  if (direct) {
    const cplx d = sigma_q_direct(k, q);
    print_complex("direct", d);
    ok = ok && std::abs(d - static_cast<double>(exact)) < 1e-6;
  }
  return ok ? 0 : kExitCheck;
}

int cmd_expsum(const std::string& which, double alpha, u64 x, unsigned workers) {
  if (which == "s1") {
    const SieveTables sieve(x);
    print_complex("S1", s1_sum(alpha, x, sieve, workers));
  } else {
    print_complex("S2", s2_sum(alpha, x, workers));
  }
  return 0;
}

int cmd_arcs(i64 q1, i64 qq, u64 x, double alpha) {
  if (q1 == 0 || qq == 0) {
    const auto [d1, dq] = default_arc_parameters(x);
    if (q1 == 0) q1 = d1;
    if (qq == 0) qq = dq;
  }
  const auto arcs = build_arcs(q1, qq);
  std::printf("Q1 %lld\nQ %lld\narcs %zu\n", static_cast<long long>(q1),
              static_cast<long long>(qq), arcs.arcs().size());
  const auto approx = dirichlet_approx(alpha, qq);
  std::printf("approx %lld/%lld beta %.6g\n", static_cast<long long>(approx.a),
              static_cast<long long>(approx.q), approx.beta);
  const auto cls = arcs.classify(alpha);
  if (const auto* m = std::get_if<MajorArc>(&cls)) {
    std::printf("major %lld/%lld\n", static_cast<long long>(m->a), static_cast<long long>(m->q));
  } else {
    std::printf("minor\n");
  }
  return 0;
}

int cmd_decompose(const std::string& which, i64 a, u64 q, double beta, u64 x) {
  ExpSumDecomposition d;
  if (which == "s1") {
    const SieveTables sieve(x);
    d = s1_decompose(a, q, beta, x, sieve);
  } else {
    d = s2_decompose(a, q, beta, x);
  }
  print_complex("S", d.S);
  print_complex("T", d.T);
  print_complex("E", d.E);
  print_complex("residual", d.residual());
  if (which == "s2" && std::abs(d.residual()) > 1e-9 * std::max(1.0, std::abs(d.S))) {
    return kExitCheck;
  }
  return 0;
}

int cmd_verify(const std::string& suite, unsigned workers) {
  const auto summary = run_suite(suite, workers);
  for (const auto& c : summary.checks) {
    std::printf("[%s] %s%s%s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                c.passed ? "" : ": ", c.passed ? "" : c.detail.c_str());
  }
  std::printf("%s: %zu passed, %zu failed\n", summary.suite.c_str(), summary.passed(),
              summary.failed());
  return summary.ok() ? 0 : kExitCheck;
}

int cmd_moment(ExperimentConfig cfg, std::size_t stride) {
  MomentOptions opt;
  opt.truncation_stride = stride;
  const auto rep = second_moment(cfg, opt);
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + cfg.output);
    write_csv(rep, out);
  }
  std::printf("rows %zu\n", rep.rows.size());
  if (rep.normalized_moment) {
    std::printf("D %.12g\n", *rep.normalized_moment);
  } else {
    std::printf("D empty\n");
  }
  if (rep.truncation) {
    std::printf("truncation p_max=%llu rows=%zu max_delta=%.6g shift=%.6g\n",
                static_cast<unsigned long long>(rep.truncation->p_max), rep.truncation->rows,
                rep.truncation->max_singular_delta, rep.truncation->normalized_shift);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bateman-Horn experiments for n^3 + k"};
  app.require_subcommand(1);
  int status = 0;

  i64 k = 1;
  u64 p = 7;
  auto* np = app.add_subcommand("np", "number of roots of n^3 + k mod p, three ways");
  np->add_option("--k", k, "shift k")->required();
  np->add_option("--p", p, "prime p")->required();
  np->callback([&] { status = cmd_np(k, p); });

  std::string n_text, pi_text;
  auto* sym = app.add_subcommand("symbol", "cubic residue symbol (n/pi)_3");
  sym->add_option("--n", n_text, "numerator as a,b (a + bw)")->required();
  sym->add_option("--pi", pi_text, "primary modulus as a,b")->required();
  sym->callback([&] { status = cmd_symbol(n_text, pi_text); });

  u64 p_max = 1'000'000;
  auto* sing = app.add_subcommand("singular", "truncated Euler product S(k)");
  sing->add_option("--k", k, "shift k")->required();
  sing->add_option("--pmax", p_max, "largest prime in the product");
  sing->callback([&] { status = cmd_singular(k, p_max); });

  u64 q = 1;
  bool direct = false;
  auto* sig = app.add_subcommand("sigma", "complete exponential sum Sigma(q)");
  sig->add_option("--k", k, "shift k")->required();
  sig->add_option("--q", q, "modulus q")->required()->check(CLI::PositiveNumber);
  sig->add_flag("--direct", direct, "also evaluate the float double sum");
  sig->callback([&] { status = cmd_sigma(k, q, direct); });

  std::string which = "s2";
  double alpha = 0.0;
  u64 x = 10;
  unsigned workers = 1;
  auto* exps = app.add_subcommand("expsum", "S1(alpha) over m <= x or S2(alpha) over n <= x");
  exps->add_option("--which", which)->check(CLI::IsMember({"s1", "s2"}));
  exps->add_option("--alpha", alpha)->required();
  exps->add_option("--x", x)->required()->check(CLI::PositiveNumber);
  exps->add_option("--workers", workers)->check(CLI::PositiveNumber);
  exps->callback([&] { status = cmd_expsum(which, alpha, x, workers); });

  i64 q1 = 0, qq = 0;
  auto* arcs = app.add_subcommand("arcs", "classify alpha against the major arcs");
  arcs->add_option("--q1", q1, "denominator threshold Q1 (default from --x)");
  arcs->add_option("--qq", qq, "arc width parameter Q (default from --x)");
  arcs->add_option("--x", x, "size used for the default Q1 and Q");
  arcs->add_option("--alpha", alpha)->required();
  arcs->callback([&] { status = cmd_arcs(q1, qq, x, alpha); });

  i64 a = 1;
  double beta = 0.0;
  auto* dec = app.add_subcommand("decompose", "major-arc split of S1 or S2 at a/q + beta");
  dec->add_option("--a", a)->required();
  dec->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  dec->add_option("--beta", beta);
  dec->add_option("--x", x)->required()->check(CLI::PositiveNumber);
  dec->add_option("--which", which)->check(CLI::IsMember({"s1", "s2"}));
  dec->callback([&] { status = cmd_decompose(which, a, q, beta, x); });

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run an invariant suite");
  ver->add_option("--suite", suite)->required();
  ver->add_option("--workers", workers)->check(CLI::PositiveNumber);
  ver->callback([&] { status = cmd_verify(suite, workers); });

  std::string config_path, out_path;
  ExperimentConfig cfg;
  std::size_t stride = 0;
  auto* mom = app.add_subcommand("moment", "second moment over squarefree k <= y");
  mom->add_option("--config", config_path, "key = value file; flags override it");
  auto* ox = mom->add_option("--x", cfg.x);
  auto* oy = mom->add_option("--y", cfg.y);
  auto* op = mom->add_option("--pmax", cfg.p_max);
  auto* oo = mom->add_option("--out", out_path, "CSV destination");
  auto* ow = mom->add_option("--workers", cfg.workers);
  mom->add_option("--truncation-stride", stride,
                  "recompute S(k) at p <= 1e6 for every n-th row");
  mom->callback([&] {
    ExperimentConfig run;
    if (!config_path.empty()) run = load_config(config_path);
    if (ox->count() > 0) run.x = cfg.x;
    if (oy->count() > 0) run.y = cfg.y;
    if (op->count() > 0) run.p_max = cfg.p_max;
    if (ow->count() > 0) run.workers = cfg.workers;
    if (oo->count() > 0) run.output = out_path;
    status = cmd_moment(run, stride);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const CapacityError& e) {
    std::fprintf(stderr, "capacity: %s\n", e.what());
    return kExitCapacity;
  } catch (const OverflowError& e) {
    std::fprintf(stderr, "overflow: %s\n", e.what());
    return kExitCapacity;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return status;
}
