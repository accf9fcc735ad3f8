#include "lapcon/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

#include "lapcon/errors.hpp"

namespace lapcon {

double quantile_exact(std::span<const double> samples, double q) {
  if (samples.empty()) throw invalid_parameter_error("quantile_exact: no samples");
  if (!(q > 0.0 && q <= 1.0))
    throw invalid_parameter_error("quantile_exact: q must lie in (0,1]");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto m = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * m));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

double median(std::span<const double> samples) {
  if (samples.empty()) throw invalid_parameter_error("median: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  if (m % 2 == 1) return sorted[m / 2];
  return 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
}

SummaryCell summarize(double tau, double p, std::string metric,
                      std::span<const double> values, double q) {
  if (values.empty()) throw invalid_parameter_error("summarize: no values");
  SummaryCell cell;
  cell.tau = tau;
  cell.p = p;
  cell.metric = std::move(metric);
  cell.count = static_cast<int>(values.size());
  cell.q = q;

  // A cell with undefined samples stays undefined instead of quietly
  // summarizing the defined subset.
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double v : values) {
    if (std::isnan(v)) {
      cell.mean = cell.median = cell.quantile = cell.se = cell.min = cell.max = nan;
      return cell;
    }
  }
  double sum = 0.0;
  double mn = values[0], mx = values[0];
  for (double v : values) {
    sum += v;
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  cell.mean = sum / cell.count;
  cell.min = mn;
  cell.max = mx;
  cell.median = lapcon::median(values);
  cell.quantile = quantile_exact(values, q);
  if (cell.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - cell.mean) * (v - cell.mean);
    cell.se = std::sqrt(ss / (cell.count - 1)) / std::sqrt(double(cell.count));
  } else {
    cell.se = nan;
  }
  return cell;
}

double loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw invalid_dimension_error("loglog_slope: size mismatch");
  if (xs.size() < 2) throw invalid_parameter_error("loglog_slope: need at least 2 points");
  const std::size_t m = xs.size();
  double mx = 0.0, my = 0.0;
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(xs[i] > 0.0 && ys[i] > 0.0))
      throw invalid_parameter_error("loglog_slope: values must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) throw invalid_parameter_error("loglog_slope: degenerate x values");
  return sxy / sxx;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace lapcon
