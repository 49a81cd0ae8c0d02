#pragma once

#include <complex>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace hankel {

std::vector<double> geometric_grid(double lo, double hi, int n);

/// Least-squares line through (log x, log y).
struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  /// Half-width of the 95% confidence interval for the slope (0 when n <= 2).
  double half_width = 0;
  int points = 0;
};

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct SweepMethod {
  std::string id;
  std::function<std::complex<double>(double omega)> eval;
  /// Errors are reported scaled by omega^expected_rate.
  double expected_rate = 0;
};

struct Reference {
  std::complex<double> value;
  /// Errors below this are clamped to it in fits.
  double floor = 0;
};

struct SweepRow {
  double omega = 0;
  std::complex<double> value;
  double abs_error = 0;
  double scaled_error = 0;
  bool clamped = false;
};

struct MethodSummary {
  std::string id;
  double expected_rate = 0;
  SlopeFit fit;
  /// max/min of the scaled error over the upper half of the grid.
  double scaled_spread = 0;
  int clamped = 0;
};

struct SweepReport {
  std::vector<double> omegas;
  std::vector<std::string> method_ids;
  /// rows[i][j]: method i at omegas[j].
  std::vector<std::vector<SweepRow>> rows;
  std::vector<MethodSummary> summaries;
};

struct SweepOptions {
  /// 0 = hardware concurrency. Results do not depend on the thread count.
  unsigned threads = 0;
  /// Fit slopes over the upper half of the grid (the asymptotic regime)
  /// rather than the whole grid.
  bool fit_upper_half = true;
};

/// Evaluates every method and the reference at each omega concurrently.
SweepReport run_sweep(const std::vector<double>& omegas, const std::function<Reference(double)>& reference,
                      const std::vector<SweepMethod>& methods, const SweepOptions& options = {});

/// omega,method_id,value,abs_error,scaled_error with 17 significant digits.
void write_csv(std::ostream& out, const SweepReport& report);

std::string format_number(double v);

}  // namespace hankel
