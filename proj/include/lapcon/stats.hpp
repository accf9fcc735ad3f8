#pragma once

#include <span>
#include <string>
#include <vector>

namespace lapcon {

// x_(ceil(q*m)) of the ascending order statistics, no interpolation.
// q in (0, 1]; the index clamps to at least 1.
double quantile_exact(std::span<const double> samples, double q);

// Median: mean of the two middle order statistics for even counts.
double median(std::span<const double> samples);

/// Summary of one (tau, p, metric) cell of raw trial values. NaN inputs
/// propagate: a cell with undefined samples is summarized as undefined
/// rather than silently dropped, and count always equals the trial count.
struct SummaryCell {
  double tau = 0.0;  // NaN when not applicable
  double p = 0.0;    // NaN when not applicable; -1 marks sweep suprema
  std::string metric;
  int count = 0;
  double mean = 0.0;
  double median = 0.0;
  double q = 0.0;         // which quantile was taken
  double quantile = 0.0;  // its value
  double se = 0.0;        // sd / sqrt(count); NaN for count == 1
  double min = 0.0;
  double max = 0.0;
};

SummaryCell summarize(double tau, double p, std::string metric,
                      std::span<const double> values, double q);

// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> xs, std::span<const double> ys);

// Shortest-width decimal with 17 significant digits, locale independent.
std::string format_double(double x);

}  // namespace lapcon
