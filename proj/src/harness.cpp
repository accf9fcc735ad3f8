#include "lapcon/harness.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "lapcon/clustering.hpp"
#include "lapcon/errors.hpp"
#include "lapcon/rng.hpp"

namespace lapcon {

namespace {

constexpr const char* kDeviationHeader =
    "seed,n,tau,p,dev_L,dev_B1,dev_B2,dev_A,deg_sq,deg_max,deg_l2,sum_reg_sq,"
    "norm_gap,v0_align,top_overlap";

constexpr const char* kSbmHeader =
    "seed,n,a,b,tau,misclassification,alignment,delta,dk_bound,threshold_ratio";

constexpr const char* kBoundsHeader =
    "C,r,n,d,alpha,beta,tau,p,np,bound_new,bound_old,ratio_old_new,bound_tau_indep";

struct MetricColumn {
  const char* name;
  double DeviationRecord::* field;
};

constexpr MetricColumn kMetricColumns[] = {
    {"dev_L", &DeviationRecord::dev_L},
    {"dev_B1", &DeviationRecord::dev_B1},
    {"dev_B2", &DeviationRecord::dev_B2},
    {"dev_A", &DeviationRecord::dev_A},
    {"deg_sq", &DeviationRecord::deg_sq},
    {"deg_max", &DeviationRecord::deg_max},
    {"deg_l2", &DeviationRecord::deg_l2},
    {"sum_reg_sq", &DeviationRecord::sum_reg_sq},
    {"norm_gap", &DeviationRecord::norm_gap},
    {"v0_align", &DeviationRecord::v0_align},
    {"top_overlap", &DeviationRecord::top_overlap},
};

bool column_enabled(const MetricSelect& m, const MetricColumn& col) {
  const std::string_view name = col.name;
  if (name == "dev_L") return m.dev_l;
  if (name == "dev_B1" || name == "dev_B2") return m.b_split;
  if (name == "dev_A") return m.adjacency;
  if (name == "norm_gap" || name == "v0_align" || name == "top_overlap") return m.plain;
  return m.degree_stats;
}

// Shortest round-trip decimal; used for tau in file names.
std::string format_short(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string deviation_row(std::uint64_t seed, int n, double tau, double p,
                          const DeviationRecord& r) {
  std::string s = std::to_string(seed);
  s += ',';
  s += std::to_string(n);
  s += ',';
  s += format_double(tau);
  s += ',';
  s += format_double(p);
  for (const MetricColumn& col : kMetricColumns) {
    s += ',';
    s += format_double(r.*col.field);
  }
  s += '\n';
  return s;
}

std::string summary_header() {
  return "tau,p,metric,count,mean,median,q,quantile,se,min,max\n";
}

std::string summary_row(const SummaryCell& c) {
  std::string s = format_double(c.tau);
  s += ',';
  s += format_double(c.p);
  s += ',';
  s += c.metric;
  s += ',';
  s += std::to_string(c.count);
  for (double v : {c.mean, c.median, c.q, c.quantile, c.se, c.min, c.max}) {
    s += ',';
    s += format_double(v);
  }
  s += '\n';
  return s;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw io_error("write failed: " + path);
}

std::string output_stem(const std::string& out) {
  if (out.size() > 4 && out.ends_with(".csv")) return out.substr(0, out.size() - 4);
  return out;
}

void validate_common(const ExperimentConfig& config) {
  if (config.trials < 1) throw invalid_parameter_error("config: trials must be >= 1");
  if (config.threads < 1) throw invalid_parameter_error("config: threads must be >= 1");
  if (config.n < 2) throw invalid_dimension_error("config: n must be >= 2");
  if (!(config.quantile > 0.0 && config.quantile <= 1.0))
    throw invalid_parameter_error("config: quantile must lie in (0,1]");
}

struct KindResult {
  std::vector<std::string> rows;
  std::vector<SummaryCell> cells;
  const char* header = kDeviationHeader;
  std::vector<std::pair<std::string, std::string>> extra_files;  // path suffix, contents
};

KindResult run_deviation(const ExperimentConfig& config) {
  const ProbMatrix P = make_model(config);
  if (config.tau_grid.empty())
    throw invalid_parameter_error("deviation: tau grid must be nonempty");
  const int trials = config.trials;
  const double p_col = config.p ? *config.p : std::numeric_limits<double>::quiet_NaN();

  const int tasks = static_cast<int>(config.tau_grid.size()) * trials;
  std::vector<DeviationRecord> records(tasks);
  std::vector<std::string> rows(tasks);
  parallel_for(tasks, config.threads, [&](int t) {
    const int tau_idx = t / trials;
    const int trial = t % trials;
    const double tau = config.tau_grid[tau_idx];
    const std::uint64_t seed = derive_seed(config.seed, trial);
    const Adjacency A = threshold(sample_uniforms(config.n, seed), P);
    records[t] = deviation_laplacian(A, P, tau, config.metrics);
    rows[t] = deviation_row(seed, config.n, tau, p_col, records[t]);
  });

  KindResult result;
  result.rows = std::move(rows);
  for (std::size_t k = 0; k < config.tau_grid.size(); ++k) {
    for (const MetricColumn& col : kMetricColumns) {
      if (!column_enabled(config.metrics, col)) continue;
      std::vector<double> vals(trials);
      for (int t = 0; t < trials; ++t)
        vals[t] = records[k * trials + t].*col.field;
      result.cells.push_back(summarize(config.tau_grid[k], p_col, col.name,
                                       vals, config.quantile));
    }
  }
  return result;
}

KindResult run_sweep(const ExperimentConfig& config) {
  const bool gap_only = config.kind == ExperimentKind::normgap;
  std::vector<double> p_grid = config.p_grid;
  if (p_grid.empty())
    p_grid = log_grid(2.0 * std::log(double(config.n)) / config.n, 1.0, 32);
  double tau = 0.0;
  MetricSelect metrics = config.metrics;
  if (gap_only) {
    metrics = MetricSelect::plain_only();
  } else {
    if (config.tau_grid.size() != 1)
      throw invalid_parameter_error("sweep: exactly one tau value required");
    tau = config.tau_grid[0];
  }

  const int trials = config.trials;
  const SweepFamily family = homogeneous_family(config.n);
  std::vector<SweepResult> results(trials);
  std::vector<std::string> rows(trials);
  parallel_for(trials, config.threads, [&](int trial) {
    const std::uint64_t seed = derive_seed(config.seed, trial);
    const CoupledSample U = sample_uniforms(config.n, seed);
    results[trial] = sweep(U, family, p_grid, tau, metrics);
    std::string block;
    for (std::size_t k = 0; k < p_grid.size(); ++k)
      block += deviation_row(seed, config.n, tau, p_grid[k],
                             results[trial].records[k]);
    block += deviation_row(seed, config.n, tau, -1.0, results[trial].sup);
    rows[trial] = std::move(block);
  });

  KindResult result;
  result.rows = std::move(rows);
  auto add_cells = [&](double p, auto get) {
    for (const MetricColumn& col : kMetricColumns) {
      if (!column_enabled(metrics, col)) continue;
      std::vector<double> vals(trials);
      for (int t = 0; t < trials; ++t) vals[t] = get(results[t]).*col.field;
      result.cells.push_back(summarize(tau, p, col.name, vals, config.quantile));
    }
  };
  for (std::size_t k = 0; k < p_grid.size(); ++k)
    add_cells(p_grid[k],
              [k](const SweepResult& r) -> const DeviationRecord& { return r.records[k]; });
  add_cells(-1.0, [](const SweepResult& r) -> const DeviationRecord& { return r.sup; });
  return result;
}

KindResult run_sbm(const ExperimentConfig& config) {
  if (!config.a || !config.b)
    throw invalid_parameter_error("sbm: both a and b are required");
  if (config.tau_grid.size() > 1)
    throw invalid_parameter_error("sbm: at most one tau value");
  const ProbMatrix P = ProbMatrix::sbm(config.n, *config.a, *config.b);
  std::optional<double> tau_fixed;
  if (!config.tau_grid.empty()) tau_fixed = config.tau_grid[0];

  const int trials = config.trials;
  std::vector<RecoveryReport> reports(trials);
  std::vector<std::string> rows(trials);
  parallel_for(trials, config.threads, [&](int trial) {
    const std::uint64_t seed = derive_seed(config.seed, trial);
    const Adjacency A = threshold(sample_uniforms(config.n, seed), P);
    reports[trial] = recover(A, P, tau_fixed, config.c_eps);
    const RecoveryReport& rep = reports[trial];
    std::string s = std::to_string(seed);
    s += ',';
    s += std::to_string(config.n);
    for (double v : {rep.a, rep.b, rep.tau, rep.misclassification, rep.alignment,
                     rep.delta, rep.dk_bound, rep.threshold_ratio}) {
      s += ',';
      s += format_double(v);
    }
    s += '\n';
    rows[trial] = std::move(s);
  });

  KindResult result;
  result.header = kSbmHeader;
  result.rows = std::move(rows);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double tau_cell = tau_fixed ? *tau_fixed : nan;
  const std::pair<const char*, double RecoveryReport::*> metrics[] = {
      {"misclassification", &RecoveryReport::misclassification},
      {"alignment", &RecoveryReport::alignment},
      {"delta", &RecoveryReport::delta},
      {"dk_bound", &RecoveryReport::dk_bound},
      {"threshold_ratio", &RecoveryReport::threshold_ratio},
      {"tau", &RecoveryReport::tau},
  };
  for (const auto& [name, field] : metrics) {
    std::vector<double> vals(trials);
    for (int t = 0; t < trials; ++t) vals[t] = reports[t].*field;
    result.cells.push_back(summarize(tau_cell, nan, name, vals, config.quantile));
  }
  return result;
}

KindResult run_bounds(const ExperimentConfig& config) {
  const ProbMatrix P = make_model(config);
  if (config.tau_grid.empty() || config.p_grid.empty())
    throw invalid_parameter_error("bounds: tau and p grids must be nonempty");
  const double d = config.n * P.max_p();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  KindResult result;
  result.header = kBoundsHeader;
  for (double tau : config.tau_grid) {
    BoundParams bp{config.C, config.r, tau, d, config.n, config.alpha, config.beta};
    const double bn = tau > 0.0 ? bound_new(bp) : nan;
    const double bo = tau > 0.0 ? bound_old(bp) : nan;
    for (double p : config.p_grid) {
      const double bti = bound_tau_independent(bp, p);
      std::string s;
      for (double v : {config.C, config.r}) {
        s += format_double(v);
        s += ',';
      }
      s += std::to_string(config.n);
      for (double v : {d, config.alpha, config.beta, tau, p, config.n * p, bn, bo,
                       bo / bn, bti}) {
        s += ',';
        s += format_double(v);
      }
      s += '\n';
      result.rows.push_back(std::move(s));
      result.cells.push_back(summarize(tau, p, "bound_new", std::vector<double>{bn},
                                       config.quantile));
      result.cells.push_back(summarize(tau, p, "bound_old", std::vector<double>{bo},
                                       config.quantile));
      result.cells.push_back(summarize(tau, p, "bound_tau_indep",
                                       std::vector<double>{bti}, config.quantile));
    }
  }
  return result;
}

KindResult run_fig1(const ExperimentConfig& config) {
  const ProbMatrix P = make_model(config);
  std::vector<double> taus = config.tau_grid;
  if (taus.empty()) taus = {0.1, 7.0, 35.0, 245.0};
  if (config.bins < 1) throw invalid_parameter_error("fig1: bins must be >= 1");
  if (!(config.hist_lo < config.hist_hi))
    throw invalid_parameter_error("fig1: histogram range must satisfy lo < hi");

  // One shared graph across the tau grid isolates the effect of the
  // regularization on the spectrum.
  const std::uint64_t seed = derive_seed(config.seed, 0);
  const Adjacency A = threshold(sample_uniforms(config.n, seed), P);
  const Vec deg = degrees(A);

  const int tasks = static_cast<int>(taus.size());
  std::vector<double> stds(tasks);
  std::vector<std::string> hists(tasks);
  parallel_for(tasks, config.threads, [&](int k) {
    const double tau = taus[k];
    const Vec dt = deg.array() + tau;
    const Spectrum s = eig_sym(laplacian(regularize(A, tau), dt));
    const Vec& ev = s.eigenvalues;
    const double mean = ev.mean();
    stds[k] = std::sqrt((ev.array() - mean).square().sum() / (ev.size() - 1));
    std::string h = "bin_left,bin_right,count\n";
    for (const HistogramRow& row :
         spectrum_histogram(ev, config.bins, config.hist_lo, config.hist_hi)) {
      h += format_double(row.left);
      h += ',';
      h += format_double(row.right);
      h += ',';
      h += std::to_string(row.count);
      h += '\n';
    }
    hists[k] = std::move(h);
  });

  KindResult result;
  result.header = "tau,eig_std";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0; k < tasks; ++k) {
    result.rows.push_back(format_double(taus[k]) + "," + format_double(stds[k]) + "\n");
    result.cells.push_back(summarize(taus[k], nan, "eig_std",
                                     std::vector<double>{stds[k]}, config.quantile));
    result.extra_files.emplace_back("_tau" + format_short(taus[k]) + ".csv", hists[k]);
  }
  return result;
}

}  // namespace

ProbMatrix make_model(const ExperimentConfig& config) {
  const bool has_p = config.p.has_value();
  const bool has_ab = config.a.has_value() || config.b.has_value();
  if (has_ab && (!config.a || !config.b))
    throw invalid_parameter_error("config: a and b must be given together");
  const int picked = int(has_p) + int(has_ab) + int(config.fig1_model);
  if (picked != 1)
    throw invalid_parameter_error("config: choose exactly one of p, (a,b), or the two-tier profile");
  if (has_p) return ProbMatrix::homogeneous(config.n, *config.p);
  if (has_ab) return ProbMatrix::sbm(config.n, *config.a, *config.b);
  return figure1_profile(config.n, config.low_deg, config.high_deg, config.high_frac);
}

std::vector<HistogramRow> spectrum_histogram(const Vec& eigenvalues, int bins,
                                             double lo, double hi) {
  if (bins < 1) throw invalid_parameter_error("spectrum_histogram: bins must be >= 1");
  if (!(lo < hi)) throw invalid_parameter_error("spectrum_histogram: need lo < hi");
  const double width = (hi - lo) / bins;
  std::vector<HistogramRow> rows(static_cast<std::size_t>(bins));
  for (int k = 0; k < bins; ++k)
    rows[k] = {lo + k * width, lo + (k + 1) * width, 0};
  rows[bins - 1].right = hi;
  for (int i = 0; i < eigenvalues.size(); ++i) {
    const double x = eigenvalues(i);
    if (!std::isfinite(x)) throw numeric_error("spectrum_histogram: non-finite eigenvalue");
    int k = static_cast<int>(std::floor((x - lo) / width));
    k = std::clamp(k, 0, bins - 1);  // out-of-range values clip into end bins
    ++rows[k].count;
  }
  return rows;
}

void parallel_for(int tasks, int threads, const std::function<void(int)>& fn) {
  if (tasks <= 0) return;
  threads = std::min(threads, tasks);
  if (threads <= 1) {
    for (int t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        const int t = next.fetch_add(1);
        if (t >= tasks) return;
        try {
          fn(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

RunResult run(const ExperimentConfig& config) {
  validate_common(config);

  KindResult kr;
  switch (config.kind) {
    case ExperimentKind::deviation:
      kr = run_deviation(config);
      break;
    case ExperimentKind::sweep:
    case ExperimentKind::normgap:
      kr = run_sweep(config);
      break;
    case ExperimentKind::sbm:
      kr = run_sbm(config);
      break;
    case ExperimentKind::bounds:
      kr = run_bounds(config);
      break;
    case ExperimentKind::fig1:
      kr = run_fig1(config);
      break;
  }

  RunResult result;
  result.raw_csv = std::string(kr.header) + "\n";
  for (const std::string& row : kr.rows) result.raw_csv += row;
  result.summary = std::move(kr.cells);
  result.summary_csv = summary_header();
  for (const SummaryCell& cell : result.summary)
    result.summary_csv += summary_row(cell);

  if (!config.out.empty()) {
    const std::string stem = output_stem(config.out);
    write_file(config.out, result.raw_csv);
    result.written_files.push_back(config.out);
    const std::string summary_path = stem + "_summary.csv";
    write_file(summary_path, result.summary_csv);
    result.written_files.push_back(summary_path);
    for (const auto& [suffix, contents] : kr.extra_files) {
      const std::string path = stem + suffix;
      write_file(path, contents);
      result.written_files.push_back(path);
    }
  }
  return result;
}

}  // namespace lapcon
