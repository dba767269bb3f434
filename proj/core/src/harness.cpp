#include "cubicbh/harness.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cubicbh/errors.hpp"
#include "cubicbh/parallel.hpp"
#include "cubicbh/singular.hpp"

namespace cubicbh {

u64 ExperimentConfig::effective_sieve_limit() const {
  return sieve_limit != 0 ? sieve_limit : std::max<u64>(1, x * x * x + y);
}

void ExperimentConfig::validate() const {
  const u128 x3 = static_cast<u128>(x) * x * x;
  if (x3 > (static_cast<u128>(1) << 40)) {
    throw ConfigError("config: x = " + std::to_string(x) + " is beyond desk scale");
  }
  if (y > x3) throw ConfigError("config: y must not exceed x^3");
  if (effective_sieve_limit() < x * x * x + y) {
    throw ConfigError("config: sieve_limit must be >= x^3 + y");
  }
  if (p_max < 2) throw ConfigError("config: p_max must be >= 2");
  if (workers == 0) throw ConfigError("config: workers must be >= 1");
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

u64 parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    if (!v.empty() && v.front() == '-') throw std::invalid_argument(v);
    const u64 out = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::logic_error&) {
    throw UsageError("config: bad value for " + key + ": '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError("config: bad boolean for " + key + ": '" + v + "'");
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) +
                       ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "x") {
      cfg.x = parse_u64(key, value);
    } else if (key == "y") {
      cfg.y = parse_u64(key, value);
    } else if (key == "p_max") {
      cfg.p_max = parse_u64(key, value);
    } else if (key == "sieve_limit") {
      cfg.sieve_limit = parse_u64(key, value);
    } else if (key == "squarefree_only") {
      cfg.squarefree_only = parse_bool(key, value);
    } else if (key == "workers") {
      cfg.workers = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "output") {
      cfg.output = value;
    } else {
      throw UsageError("config line " + std::to_string(lineno) +
                       ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  return parse_config(in);
}

std::vector<CubicTerm> lambda_terms_cubic(i64 k, u64 x, const SieveTables& sieve) {
  std::vector<CubicTerm> out;
  if (x == 0) return out;
  if (k < 0) {
    throw DomainError("lambda_sum_cubic: n^3 + k must be positive for all n <= x");
  }
  out.reserve(x);
  for (u64 n = 1; n <= x; ++n) {
    const u64 v = n * n * n + static_cast<u64>(k);
    out.push_back({n, sieve.von_mangoldt(v)});
  }
  return out;
}

double lambda_sum_cubic(i64 k, u64 x, const SieveTables& sieve) {
  double sum = 0.0;
  for (const auto& t : lambda_terms_cubic(k, x, sieve)) sum += t.lambda.value;
  return sum;
}

BhResidual bh_residual(i64 k, u64 x, u64 p_max, const SieveTables& sieve) {
  if (k == 0) throw DomainError("bh_residual: k = 0 is excluded");
  BhResidual r;
  r.lambda_sum = lambda_sum_cubic(k, x, sieve);
  r.singular = singular_series(k, p_max).value;
  r.residual = r.lambda_sum - r.singular * static_cast<double>(x);
  return r;
}

MomentReport second_moment(const ExperimentConfig& config,
                           const MomentOptions& options) {
  config.validate();
  MomentReport report;
  report.x = config.x;
  report.y = config.y;
  report.p_max = config.p_max;
  if (config.y == 0) return report;

  const SieveTables sieve(config.effective_sieve_limit());
  std::vector<i64> ks;
  for (u64 k = 1; k <= config.y; ++k) {
    if (!config.squarefree_only || sieve.mobius(k) != 0) ks.push_back(static_cast<i64>(k));
  }
  const auto singular = singular_series_values(ks, config.p_max, config.workers);

  report.rows.resize(ks.size());
  constexpr std::size_t kBlock = 4096;
  const double xd = static_cast<double>(config.x);
  parallel_blocks((ks.size() + kBlock - 1) / kBlock, config.workers,
                  [&](std::size_t b) {
                    const std::size_t hi = std::min(ks.size(), (b + 1) * kBlock);
                    for (std::size_t i = b * kBlock; i < hi; ++i) {
                      MomentRow& row = report.rows[i];
                      row.k = ks[i];
                      row.lambda_sum = lambda_sum_cubic(ks[i], config.x, sieve);
                      row.singular = singular[i];
                      row.residual = row.lambda_sum - row.singular * xd;
                    }
                  });

  double sum_sq = 0.0;
  for (const auto& row : report.rows) sum_sq += row.residual * row.residual;
  report.normalized_moment = sum_sq / (static_cast<double>(config.y) * xd * xd);

  if (options.truncation_stride > 0 && !report.rows.empty()) {
    std::vector<i64> sample;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < report.rows.size(); i += options.truncation_stride) {
      sample.push_back(report.rows[i].k);
      index.push_back(i);
    }
    const auto fine = singular_series_values(sample, options.truncation_p_max,
                                             config.workers);
    TruncationCheck tc;
    tc.p_max = options.truncation_p_max;
    tc.rows = sample.size();
    double shift = 0.0;
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const MomentRow& row = report.rows[index[j]];
      tc.max_singular_delta = std::max(tc.max_singular_delta, std::abs(fine[j] - row.singular));
      const double r_fine = row.lambda_sum - fine[j] * xd;
      shift += r_fine * r_fine - row.residual * row.residual;
    }
    tc.normalized_shift = shift / (static_cast<double>(tc.rows) * xd * xd);
    report.truncation = tc;
  }
  return report;
}

void write_csv(const MomentReport& report, std::ostream& out) {
  out << "k,lambda_sum,singular_series,residual\n";
  char buf[128];
  for (const auto& row : report.rows) {
    std::snprintf(buf, sizeof buf, "%lld,%.12g,%.12g,%.12g\n",
                  static_cast<long long>(row.k), row.lambda_sum, row.singular,
                  row.residual);
    out << buf;
  }
}

std::size_t SuiteSummary::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 1 : 0;
  return n;
}

std::size_t SuiteSummary::failed() const { return checks.size() - passed(); }

}  // namespace cubicbh
