#pragma once

// End-to-end experiments on sum_{n <= x} Lambda(n^3 + k): per-k residuals
// against S(k) x, the averaged second moment over squarefree k <= y, the
// CSV/config formats, and the named invariant suites behind `verify`.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubicbh/arith.hpp"

namespace cubicbh {

struct ExperimentConfig {
  u64 x = 20;
  u64 y = 8000;
  u64 p_max = 100'000;
  u64 sieve_limit = 0;  // 0: derive x^3 + y
  bool squarefree_only = true;
  unsigned workers = 1;
  std::string output;

  u64 effective_sieve_limit() const;
  // Throws ConfigError on y > x^3 or a sieve limit below x^3 + y.
  void validate() const;
};

// Flat `key = value` lines; '#' starts a comment. Keys are the field names
// above. Unknown keys and malformed values throw UsageError.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

struct CubicTerm {
  u64 n = 0;
  VonMangoldt lambda;
};

// Lambda(n^3 + k) for n = 1..x. Requires every n^3 + k >= 1.
std::vector<CubicTerm> lambda_terms_cubic(i64 k, u64 x, const SieveTables& sieve);

// sum_{n <= x} Lambda(n^3 + k), accumulated in ascending n.
double lambda_sum_cubic(i64 k, u64 x, const SieveTables& sieve);

struct BhResidual {
  double lambda_sum = 0.0;
  double singular = 0.0;
  double residual = 0.0;  // lambda_sum - singular * x
};

BhResidual bh_residual(i64 k, u64 x, u64 p_max, const SieveTables& sieve);

struct MomentRow {
  i64 k = 0;
  double lambda_sum = 0.0;
  double singular = 0.0;
  double residual = 0.0;
};

struct TruncationCheck {
  u64 p_max = 0;
  std::size_t rows = 0;
  double max_singular_delta = 0.0;
  // (sum r'^2 - sum r^2) / (rows x^2) over the resampled rows.
  double normalized_shift = 0.0;
};

struct MomentReport {
  u64 x = 0;
  u64 y = 0;
  u64 p_max = 0;
  std::vector<MomentRow> rows;  // ascending k
  // (1 / (y x^2)) sum r_k^2; empty when y = 0.
  std::optional<double> normalized_moment;
  std::optional<TruncationCheck> truncation;
};

struct MomentOptions {
  // Recompute S(k) at `truncation_p_max` for every `truncation_stride`-th
  // row; 0 disables the check.
  std::size_t truncation_stride = 0;
  u64 truncation_p_max = 1'000'000;
};

MomentReport second_moment(const ExperimentConfig& config,
                           const MomentOptions& options = {});

// Header `k,lambda_sum,singular_series,residual`, 12 significant digits, LF.
void write_csv(const MomentReport& report, std::ostream& out);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteSummary {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

// name in {arith, characters, eisenstein, singular, circle, harness, all};
// anything else throws UsageError.
SuiteSummary run_suite(const std::string& name, unsigned workers = 1);

const std::vector<std::string>& suite_names();

}  // namespace cubicbh
