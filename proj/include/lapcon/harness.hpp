#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lapcon/concentration.hpp"
#include "lapcon/stats.hpp"

namespace lapcon {

enum class ExperimentKind { deviation, sweep, sbm, bounds, fig1, normgap };

/// One experiment run. Every field that matters to the output has a
/// definite value here; in particular the seed has no wall-clock default,
/// so the same config always reproduces the same bytes.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::deviation;
  int n = 0;

  // Model: exactly one of p | (a, b) | fig1 profile, where the kind
  // requires one.
  std::optional<double> p;
  std::optional<double> a;
  std::optional<double> b;
  bool fig1_model = false;
  double low_deg = 7.0;
  double high_deg = 35.0;
  double high_frac = 0.1;

  std::vector<double> tau_grid;
  std::vector<double> p_grid;
  int trials = 1;
  double r = 1.0;
  double alpha = 0.25;
  double beta = 0.125;
  double C = 1.0;
  double quantile = 0.99;
  std::uint64_t seed = 1;
  std::string out;  // raw CSV path; empty keeps the run in memory
  int threads = 1;
  int bins = 60;  // fig1 histograms
  double hist_lo = 0.0;
  double hist_hi = 2.0;
  MetricSelect metrics = MetricSelect::all();
  std::optional<double> c_eps;
};

struct RunResult {
  std::string raw_csv;
  std::string summary_csv;
  std::vector<SummaryCell> summary;
  std::vector<std::string> written_files;  // raw, summary, histograms
};

// Executes the experiment. Trial t draws its stream from
// derive_seed(config.seed, t); workers only fill preassigned slots, so
// the output is byte-identical for every thread count.
RunResult run(const ExperimentConfig& config);

// Resolves the configured model into a ProbMatrix.
ProbMatrix make_model(const ExperimentConfig& config);

struct HistogramRow {
  double left;
  double right;
  long count;
};

// Equal-width bins over [lo, hi]; all bins are left-closed except the
// last, which also contains hi; out-of-range values clip into the end
// bins.
std::vector<HistogramRow> spectrum_histogram(const Vec& eigenvalues, int bins,
                                             double lo, double hi);

// Runs fn(0..tasks-1) on up to `threads` workers. fn must only touch its
// own slot; results are then independent of the schedule.
void parallel_for(int tasks, int threads, const std::function<void(int)>& fn);

}  // namespace lapcon
