#pragma once

// Monte Carlo harness over the Linial-Meshulam model.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rcx/collapse.hpp"
#include "rcx/core.hpp"
#include "rcx/patterns.hpp"

namespace rcx {

struct BoundConstants {
  std::optional<double> lambda;  // c < 3
  std::optional<double> mu;      // c > 3
};

/// lambda = exp(-(1 - c/3)^2 / 8) below 3, mu = exp(-(c/3 - 1) / 8) above.
/// Throws CriticalCase at c = 3 and InvalidParameter for c <= 0.
BoundConstants theoretical_bounds(double c);

enum class ExperimentKind { EulerRegime, CollapseRate, ContainmentCurve, MomentCheck };
enum class GridKind { C, P, Alpha };  // p = c/n, p, p = n^-alpha

const char* experiment_kind_name(ExperimentKind kind) noexcept;

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::EulerRegime;
  std::uint32_t n = 100;
  GridKind grid_kind = GridKind::C;
  std::vector<double> grid;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> patterns;  // catalog specs such as "lxy 4 4"
  MapKind mode = MapKind::Embedding;
  std::string out;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Applies one `key = value` setting. Keys: name, n, c, p, alpha, trials,
/// seed, pattern, mode, out, threads. Grid and pattern values are comma
/// separated lists. Throws InvalidConfig.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Flat `key = value` text, `#` comments; later keys win.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig read_config_file(const std::string& path);

/// Throws InvalidConfig when the config cannot be run.
void validate(const ExperimentConfig& cfg);

/// Edge probability at a grid point.
double grid_probability(const ExperimentConfig& cfg, std::size_t point);

struct TrialRecord {
  std::size_t point = 0;
  double grid_value = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint32_t n = 0;
  double p = 0;
  std::string pattern;
  std::uint64_t f2 = 0;
  std::int64_t chi = 0;
  std::optional<CollapseKind> collapse_kind;
  std::optional<std::uint64_t> collapse_steps;
  std::optional<bool> chi_preserved;
  std::optional<bool> contained;
  std::optional<std::uint64_t> embedding_count;
};

struct SummaryRow {
  std::size_t point = 0;
  double grid_value = 0;
  double p = 0;
  std::string pattern;
  std::uint64_t trials = 0;
  double freq_chi_negative = 0;
  double freq_chi_above_one = 0;
  std::optional<double> freq_graph;
  std::optional<double> freq_contained;
  std::optional<double> mean_count;
  std::optional<double> se_count;
  std::optional<double> expected_count;
  std::optional<double> immersion_bound;
  std::optional<double> bound_lambda;
  std::optional<double> bound_mu;
  std::optional<double> theory_curve;
};

struct ExperimentResult {
  ExperimentKind kind = ExperimentKind::EulerRegime;
  std::vector<TrialRecord> records;  // ordered by (point, trial, pattern)
  std::vector<SummaryRow> summary;   // ordered by (point, pattern)
};

/// Deterministic given the config; independent of the thread count. Writes
/// `out` and `out.summary.csv` when `out` is set.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

extern const char* const kTrialCsvHeader;
extern const char* const kSummaryCsvHeader;

void write_trials_csv(std::ostream& out, const ExperimentResult& result);
void write_summary_csv(std::ostream& out, const ExperimentResult& result);

}  // namespace rcx
