#include "hankel/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

// Two-sided 97.5% quantile of Student's t with dof degrees of freedom.
double t_quantile(int dof) {
  static const double table[] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
                                 2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
                                 2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042};
  if (dof < 1) return 0;
  if (dof <= 30) return table[dof - 1];
  const double z = 1.959964;
  return z + (z * z * z + z) / (4.0 * dof);
}

}  // namespace

std::vector<double> geometric_grid(double lo, double hi, int n) {
  if (n < 1) throw UsageError("grid: need at least one point");
  if (!(lo > 0) || !(hi >= lo)) throw UsageError("grid: need 0 < omega_min <= omega_max");
  if (n == 1) return {lo};
  std::vector<double> grid;
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < n; ++i) grid.push_back(i == n - 1 ? hi : lo * std::exp(ratio * i / (n - 1)));
  return grid;
}

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  SlopeFit fit;
  const std::size_t n = std::min(x.size(), y.size());
  fit.points = static_cast<int>(n);
  if (n < 2) return fit;
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double sse = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = std::log(y[i]) - (fit.intercept + fit.slope * std::log(x[i]));
      sse += r * r;
    }
    const double se = std::sqrt(sse / (n - 2) / sxx);
    fit.half_width = t_quantile(static_cast<int>(n) - 2) * se;
  }
  return fit;
}

SweepReport run_sweep(const std::vector<double>& omegas, const std::function<Reference(double)>& reference,
                      const std::vector<SweepMethod>& methods, const SweepOptions& options) {
  for (std::size_t i = 1; i < omegas.size(); ++i) {
    if (!(omegas[i] > omegas[i - 1])) throw UsageError("sweep: grid must be strictly increasing");
  }
  SweepReport report;
  report.omegas = omegas;
  for (const auto& m : methods) report.method_ids.push_back(m.id);
  report.rows.assign(methods.size(), std::vector<SweepRow>(omegas.size()));

  std::vector<Reference> refs(omegas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t j = next++; j < omegas.size() && !failed; j = next++) {
      try {
        const double w = omegas[j];
        refs[j] = reference(w);
        for (std::size_t i = 0; i < methods.size(); ++i) {
          SweepRow& row = report.rows[i][j];
          row.omega = w;
          row.value = methods[i].eval(w);
        }
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(omegas.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  const std::size_t half = options.fit_upper_half ? omegas.size() / 2 : 0;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    MethodSummary s;
    s.id = methods[i].id;
    s.expected_rate = methods[i].expected_rate;
    std::vector<double> xs;
    std::vector<double> ys;
    double lo = INFINITY;
    double hi = 0;
    for (std::size_t j = 0; j < omegas.size(); ++j) {
      SweepRow& row = report.rows[i][j];
      row.abs_error = std::abs(row.value - refs[j].value);
      if (row.abs_error < refs[j].floor || row.abs_error == 0) {
        row.abs_error = std::max(refs[j].floor, 1e-300);
        row.clamped = true;
        ++s.clamped;
      }
      row.scaled_error = row.abs_error * std::pow(row.omega, s.expected_rate);
      if (j >= half) {
        xs.push_back(row.omega);
        ys.push_back(row.abs_error);
      }
      // spread is always taken over the upper half
      if (j >= omegas.size() / 2) {
        lo = std::min(lo, row.scaled_error);
        hi = std::max(hi, row.scaled_error);
      }
    }
    s.fit = fit_loglog(xs, ys);
    s.scaled_spread = hi / lo;
    report.summaries.push_back(s);
  }
  return report;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const SweepReport& report) {
  out << "omega,method_id,value,abs_error,scaled_error\n";
  for (std::size_t j = 0; j < report.omegas.size(); ++j) {
    for (std::size_t i = 0; i < report.method_ids.size(); ++i) {
      const SweepRow& row = report.rows[i][j];
      out << format_number(row.omega) << ',' << report.method_ids[i] << ',' << format_number(row.value.real()) << ','
          << format_number(row.abs_error) << ',' << format_number(row.scaled_error) << '\n';
    }
  }
}

}  // namespace hankel
