#include "rcx/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "rcx/catalog.hpp"
#include "rcx/density.hpp"
#include "rcx/error.hpp"
#include "rcx/sampler.hpp"

namespace rcx {

namespace {

[[noreturn]] void bad_config(const std::string& msg) {
  throw Error(ErrorCode::InvalidConfig, msg);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T x{};
  in >> x;
  if (!in || !(in >> std::ws).eof()) bad_config("bad value for " + key + ": '" + value + "'");
  return x;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    bad_config("bad value for " + key + ": '" + value + "'");
  return parse_number<std::uint64_t>(key, value);
}

struct PatternSpec {
  std::string label;
  Complex2 complex;
};

PatternSpec load_pattern(const std::string& spec) {
  std::istringstream in(spec);
  std::string name;
  in >> name;
  std::vector<std::int64_t> params;
  std::string tok;
  while (in >> tok) params.push_back(parse_number<std::int64_t>("pattern", tok));
  try {
    return {spec, catalog::by_name(name, params)};
  } catch (const Error& e) {
    bad_config("invalid pattern '" + spec + "': " + e.what());
  }
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

template <typename T>
std::string opt(const std::optional<T>& x) {
  if (!x) return {};
  if constexpr (std::is_same_v<T, double>) return fmt_double(*x);
  else if constexpr (std::is_same_v<T, bool>) return *x ? "1" : "0";
  else return std::to_string(*x);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

BoundConstants theoretical_bounds(double c) {
  if (!(c > 0) || !std::isfinite(c)) throw Error(ErrorCode::InvalidParameter, "c must be positive");
  if (c == 3.0) throw Error(ErrorCode::CriticalCase, "no exponential bound at c = 3");
  BoundConstants b;
  if (c < 3.0) {
    const double t = 1.0 - c / 3.0;
    b.lambda = std::exp(-t * t / 8.0);
  } else {
    b.mu = std::exp(-(c / 3.0 - 1.0) / 8.0);
  }
  return b;
}

const char* experiment_kind_name(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::EulerRegime: return "euler_regime";
    case ExperimentKind::CollapseRate: return "collapse_rate";
    case ExperimentKind::ContainmentCurve: return "containment_curve";
    case ExperimentKind::MomentCheck: return "moment_check";
  }
  return "unknown";
}

void apply_setting(ExperimentConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "name" || key == "experiment") {
    if (value == "euler_regime") cfg.kind = ExperimentKind::EulerRegime;
    else if (value == "collapse_rate") cfg.kind = ExperimentKind::CollapseRate;
    else if (value == "containment_curve") cfg.kind = ExperimentKind::ContainmentCurve;
    else if (value == "moment_check") cfg.kind = ExperimentKind::MomentCheck;
    else bad_config("unknown experiment '" + value + "'");
  } else if (key == "n") {
    const auto n = parse_unsigned(key, value);
    if (n > 100000) bad_config("n too large");
    cfg.n = static_cast<std::uint32_t>(n);
  } else if (key == "c" || key == "p" || key == "alpha") {
    cfg.grid_kind = key == "c" ? GridKind::C : key == "p" ? GridKind::P : GridKind::Alpha;
    cfg.grid.clear();
    for (const auto& item : split_list(value)) cfg.grid.push_back(parse_number<double>(key, item));
  } else if (key == "trials") {
    cfg.trials = parse_unsigned(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_unsigned(key, value);
  } else if (key == "pattern" || key == "patterns") {
    cfg.patterns = split_list(value);
  } else if (key == "mode") {
    if (value == "embedding") cfg.mode = MapKind::Embedding;
    else if (value == "immersion") cfg.mode = MapKind::Immersion;
    else bad_config("mode must be embedding or immersion");
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "threads") {
    cfg.threads = static_cast<unsigned>(parse_unsigned(key, value));
  } else {
    bad_config("unknown key '" + key + "'");
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    if (trim(text).empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) bad_config("line " + std::to_string(line) + ": expected key = value");
    try {
      apply_setting(cfg, text.substr(0, eq), text.substr(eq + 1));
    } catch (const Error& e) {
      bad_config("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse_config(in);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n < 3) bad_config("n must be at least 3");
  if (cfg.trials < 1) bad_config("trials must be at least 1");
  if (cfg.grid.empty()) bad_config("grid (c, p or alpha) is empty");
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    const double p = grid_probability(cfg, i);
    if (!(p >= 0.0 && p <= 1.0)) bad_config("grid point " + fmt_double(cfg.grid[i]) + " gives p outside [0, 1]");
  }
  const bool needs_pattern =
      cfg.kind == ExperimentKind::ContainmentCurve || cfg.kind == ExperimentKind::MomentCheck;
  if (needs_pattern && cfg.patterns.empty()) bad_config("this experiment needs a pattern");
  for (const auto& spec : cfg.patterns) {
    const auto pattern = load_pattern(spec);
    if (pattern.complex.num_faces() == 0) bad_config("pattern '" + spec + "' has no faces");
  }
}

double grid_probability(const ExperimentConfig& cfg, std::size_t point) {
  const double x = cfg.grid.at(point);
  const double n = cfg.n;
  switch (cfg.grid_kind) {
    case GridKind::C: return x / n;
    case GridKind::P: return x;
    case GridKind::Alpha: return std::pow(n, -x);
  }
  return x;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<PatternSpec> patterns;
  for (const auto& spec : cfg.patterns) patterns.push_back(load_pattern(spec));
  const bool uses_patterns =
      cfg.kind == ExperimentKind::ContainmentCurve || cfg.kind == ExperimentKind::MomentCheck;
  const std::size_t per_trial = uses_patterns ? patterns.size() : 1;

  const std::size_t points = cfg.grid.size();
  const std::uint64_t jobs = points * cfg.trials;
  std::vector<TrialRecord> records(jobs * per_trial);

  auto run_job = [&](std::uint64_t job) {
    const std::size_t point = job / cfg.trials;
    const std::uint64_t trial = job % cfg.trials;
    TrialRecord base;
    base.point = point;
    base.grid_value = cfg.grid[point];
    base.trial = trial;
    base.seed = trial_seed(trial_seed(cfg.seed, point), trial);
    base.n = cfg.n;
    base.p = grid_probability(cfg, point);
    const Complex2 host = sample_complex(SampleSpec{cfg.n, base.p, base.seed});
    base.f2 = host.num_faces();
    base.chi = euler_characteristic(host);

    if (cfg.kind == ExperimentKind::CollapseRate) {
      const auto outcome = collapse_to_core(host);
      base.collapse_kind = outcome.kind;
      base.collapse_steps = outcome.steps;
      base.chi_preserved = std::all_of(outcome.euler_per_step.begin(), outcome.euler_per_step.end(),
                                       [&](std::int64_t x) { return x == base.chi; });
    }
    if (!uses_patterns) {
      records[job] = std::move(base);
      return;
    }
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      TrialRecord rec = base;
      rec.pattern = patterns[k].label;
      if (cfg.kind == ExperimentKind::MomentCheck) {
        rec.embedding_count = count_embeddings(patterns[k].complex, host);
        rec.contained = *rec.embedding_count > 0;
      } else if (cfg.mode == MapKind::Embedding) {
        rec.contained = find_embedding(patterns[k].complex, host).has_value();
      } else {
        rec.contained = find_immersion(patterns[k].complex, host).has_value();
      }
      records[job * per_trial + k] = std::move(rec);
    }
  };

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, jobs));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::uint64_t job; !failed && (job = next++) < jobs;) {
      try {
        run_job(job);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  result.kind = cfg.kind;
  for (std::size_t point = 0; point < points; ++point) {
    for (std::size_t k = 0; k < per_trial; ++k) {
      SummaryRow row;
      row.point = point;
      row.grid_value = cfg.grid[point];
      row.p = grid_probability(cfg, point);
      row.trials = cfg.trials;
      std::uint64_t chi_neg = 0, chi_big = 0, graph = 0, contained = 0;
      double sum = 0, sum_sq = 0;
      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        const TrialRecord& r = records[(point * cfg.trials + t) * per_trial + k];
        chi_neg += r.chi < 0;
        chi_big += r.chi > 1;
        if (r.collapse_kind) graph += *r.collapse_kind == CollapseKind::Graph;
        if (r.contained) contained += *r.contained;
        if (r.embedding_count) {
          const double x = static_cast<double>(*r.embedding_count);
          sum += x;
          sum_sq += x * x;
        }
      }
      const double trials = static_cast<double>(cfg.trials);
      row.freq_chi_negative = chi_neg / trials;
      row.freq_chi_above_one = chi_big / trials;
      if (cfg.kind == ExperimentKind::CollapseRate) row.freq_graph = graph / trials;
      if (uses_patterns) {
        const Complex2& pattern = patterns[k].complex;
        row.pattern = patterns[k].label;
        row.freq_contained = contained / trials;
        const auto moment = expected_embedding_count(pattern, cfg.n, row.p);
        row.expected_count = moment.embeddings;
        row.immersion_bound = moment.immersion_bound;
        if (pattern.num_faces() <= kOracleMaxFaces && row.p > 0)
          row.theory_curve = non_embedding_curve(pattern, cfg.n, row.p);
      }
      if (cfg.kind == ExperimentKind::MomentCheck) {
        const double mean = sum / trials;
        row.mean_count = mean;
        const double var = cfg.trials > 1 ? (sum_sq - trials * mean * mean) / (trials - 1) : 0.0;
        row.se_count = std::sqrt(std::max(0.0, var) / trials);
      }
      const double c = row.p * cfg.n;
      const double c_exact = cfg.grid_kind == GridKind::C ? row.grid_value : c;
      if (c_exact > 0 && c_exact != 3.0) {
        const auto b = theoretical_bounds(c_exact);
        row.bound_lambda = b.lambda;
        row.bound_mu = b.mu;
      }
      result.summary.push_back(std::move(row));
    }
  }
  result.records = std::move(records);

  if (!cfg.out.empty()) {
    std::ofstream trials_out(cfg.out);
    if (!trials_out) throw Error(ErrorCode::IoError, "cannot write " + cfg.out);
    write_trials_csv(trials_out, result);
    std::ofstream summary_out(cfg.out + ".summary.csv");
    if (!summary_out) throw Error(ErrorCode::IoError, "cannot write " + cfg.out + ".summary.csv");
    write_summary_csv(summary_out, result);
    if (!trials_out || !summary_out) throw Error(ErrorCode::IoError, "write failure on " + cfg.out);
  }
  return result;
}

const char* const kTrialCsvHeader =
    "experiment,point,grid_value,trial,seed,n,p,pattern,f2,chi,collapse_kind,collapse_steps,"
    "chi_preserved,contained,embedding_count";

const char* const kSummaryCsvHeader =
    "experiment,point,grid_value,p,pattern,trials,freq_chi_negative,freq_chi_above_one,"
    "freq_graph,freq_contained,mean_count,se_count,expected_count,immersion_bound,"
    "bound_lambda,bound_mu,theory_curve";

void write_trials_csv(std::ostream& out, const ExperimentResult& result) {
  out << kTrialCsvHeader << '\n';
  const char* name = experiment_kind_name(result.kind);
  for (const auto& r : result.records) {
    out << name << ',' << r.point << ',' << fmt_double(r.grid_value) << ',' << r.trial << ','
        << r.seed << ',' << r.n << ',' << fmt_double(r.p) << ',' << csv_field(r.pattern) << ','
        << r.f2 << ',' << r.chi << ',' << (r.collapse_kind ? collapse_kind_name(*r.collapse_kind) : "")
        << ',' << opt(r.collapse_steps) << ',' << opt(r.chi_preserved) << ',' << opt(r.contained)
        << ',' << opt(r.embedding_count) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const ExperimentResult& result) {
  out << kSummaryCsvHeader << '\n';
  const char* name = experiment_kind_name(result.kind);
  for (const auto& r : result.summary) {
    out << name << ',' << r.point << ',' << fmt_double(r.grid_value) << ',' << fmt_double(r.p)
        << ',' << csv_field(r.pattern) << ',' << r.trials << ',' << fmt_double(r.freq_chi_negative)
        << ',' << fmt_double(r.freq_chi_above_one) << ',' << opt(r.freq_graph) << ','
        << opt(r.freq_contained) << ',' << opt(r.mean_count) << ',' << opt(r.se_count) << ','
        << opt(r.expected_count) << ',' << opt(r.immersion_bound) << ',' << opt(r.bound_lambda)
        << ',' << opt(r.bound_mu) << ',' << opt(r.theory_curve) << '\n';
  }
}

}  // namespace rcx
