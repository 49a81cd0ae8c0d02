#include "hankel/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

template <typename Scalar>
constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

template <typename Scalar>
constexpr Scalar kEps = std::numeric_limits<Scalar>::epsilon();

template <typename Scalar>
bool is_integer(Scalar x) {
  return x == std::floor(x);
}

// B_{2k} / (2k (2k-1)), k = 1..12.
constexpr long double kStirling[] = {
    1.0L / 12.0L,           -1.0L / 360.0L,          1.0L / 1260.0L,
    -1.0L / 1680.0L,        1.0L / 1188.0L,          -691.0L / 360360.0L,
    1.0L / 156.0L,          -3617.0L / 122400.0L,    43867.0L / 244188.0L,
    -174611.0L / 125400.0L, 77683.0L / 5796.0L,      -236364091.0L / 1506960.0L,
};

// log Gamma(z) for z >= 20 from the Stirling series; the truncation error is
// below 1e-28 there.
template <typename Scalar>
Scalar log_gamma_stirling(Scalar z) {
  const Scalar inv_z2 = Scalar(1) / (z * z);
  Scalar power = Scalar(1) / z;
  Scalar tail = 0;
  for (long double c : kStirling) {
    tail += static_cast<Scalar>(c) * power;
    power *= inv_z2;
  }
  const Scalar half_log_2pi = std::log(2 * kPi<Scalar>) / 2;
  return (z - Scalar(0.5)) * std::log(z) - z + half_log_2pi + tail;
}

template <typename Scalar>
Scalar bessel_series(Scalar nu, Scalar x) {
  const Scalar half = x / 2;
  const Scalar q = -half * half;
  Scalar term = 1;
  Scalar sum = 1;
  for (int k = 1; k < 1000; ++k) {
    term *= q / (Scalar(k) * (nu + Scalar(k)));
    sum += term;
    if (std::abs(term) <= kEps<Scalar> * std::abs(sum) / 4) break;
  }
  return std::pow(half, nu) * rgamma(nu + 1) * sum;
}

// Hankel large-argument expansion; returns false when it cannot reach working
// precision without cancellation.
template <typename Scalar>
bool bessel_hankel(Scalar nu, Scalar x, Scalar& out) {
  if (x < 15) return false;
  const Scalar mu = 4 * nu * nu;
  Scalar p = 1;
  Scalar q = 0;
  Scalar term = 1;
  bool converged = false;
  for (int k = 1; k < 400; ++k) {
    const Scalar odd = Scalar(2 * k - 1);
    const Scalar ratio = (mu - odd * odd) / (Scalar(8 * k) * x);
    term *= ratio;
    if (std::abs(term) > 1) return false;
    const Scalar sign = ((k / 2) % 2 == 0) ? Scalar(1) : Scalar(-1);
    if (k % 2 == 0) {
      p += sign * term;
    } else {
      q += sign * term;
    }
    if (term == 0 || std::abs(term) < kEps<Scalar> / 8) {
      converged = true;
      break;
    }
    if (odd * odd > mu && std::abs(ratio) >= 1) return false;
  }
  if (!converged) return false;
  const Scalar phi = (nu / 2 + Scalar(0.25)) * kPi<Scalar>;
  const Scalar sx = std::sin(x);
  const Scalar cx = std::cos(x);
  const Scalar sp = std::sin(phi);
  const Scalar cp = std::cos(phi);
  const Scalar cos_chi = cx * cp + sx * sp;
  const Scalar sin_chi = sx * cp - cx * sp;
  out = std::sqrt(2 / (kPi<Scalar> * x)) * (p * cos_chi - q * sin_chi);
  return true;
}

// Steed's method for nu >= 0, x >= 2: CF1 gives J'_nu/J_nu, downward
// recurrence brings the order into [nu - nl] with |mu| <= x, CF2 gives
// (J'+iY')/(J+iY) at that order and the Wronskian fixes the normalization.
template <typename Scalar>
Scalar bessel_steed(Scalar nu, Scalar x) {
  const Scalar eps = kEps<Scalar>;
  const Scalar fpmin = std::numeric_limits<Scalar>::min() / eps;
  const int max_iter = 10'000'000;

  const int nl = std::max(0, static_cast<int>(nu - x + Scalar(1.5)));
  const Scalar xmu = nu - Scalar(nl);
  const Scalar xi = 1 / x;
  const Scalar xi2 = 2 * xi;
  const Scalar w = xi2 / kPi<Scalar>;

  int isign = 1;
  Scalar h = nu * xi;
  if (h < fpmin) h = fpmin;
  Scalar b = xi2 * nu;
  Scalar d = 0;
  Scalar c = h;
  int i = 1;
  for (; i <= max_iter; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b - 1 / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1 / d;
    const Scalar del = c * d;
    h = del * h;
    if (d < 0) isign = -isign;
    if (std::abs(del - 1) < eps) break;
  }
  if (i > max_iter) throw DomainError("bessel_j: continued fraction CF1 did not converge");

  Scalar rjl = Scalar(isign);
  Scalar rjpl = h * rjl;
  Scalar rjl1 = rjl;
  Scalar fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const Scalar rjtemp = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * rjtemp - rjl;
    rjl = rjtemp;
    if (std::abs(rjl) > Scalar(1e100)) {
      rjl *= Scalar(1e-100);
      rjpl *= Scalar(1e-100);
      rjl1 *= Scalar(1e-100);
    }
  }
  if (rjl == 0) rjl = eps;
  const Scalar f = rjpl / rjl;

  Scalar a = Scalar(0.25) - xmu * xmu;
  Scalar p = -Scalar(0.5) * xi;
  Scalar q = 1;
  const Scalar br = 2 * x;
  Scalar bi = 2;
  fact = a * xi / (p * p + q * q);
  Scalar cr = br + q * fact;
  Scalar ci = bi + p * fact;
  Scalar den = br * br + bi * bi;
  Scalar dr = br / den;
  Scalar di = -bi / den;
  Scalar dlr = cr * dr - ci * di;
  Scalar dli = cr * di + ci * dr;
  Scalar temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (i = 2; i <= max_iter; ++i) {
    a += Scalar(2 * (i - 1));
    bi += 2;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < fpmin) dr = fpmin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < fpmin) cr = fpmin;
    den = dr * dr + di * di;
    dr /= den;
    di = -di / den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1) + std::abs(dli) < eps) break;
  }
  if (i > max_iter) throw DomainError("bessel_j: continued fraction CF2 did not converge");

  const Scalar gam = (p - f) / q;
  Scalar rjmu = std::sqrt(w / ((p - f) * gam + q));
  rjmu = std::copysign(rjmu, rjl);
  return rjl1 * (rjmu / rjl);
}

}  // namespace

template <typename Scalar>
Scalar gamma(Scalar x) {
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (x <= 0 && is_integer(x)) throw DomainError("gamma: pole at non-positive integer");
  const Scalar threshold = 20;
  Scalar z = x;
  Scalar product = 1;
  while (z < threshold) {
    product *= z;
    z += 1;
  }
  return std::exp(log_gamma_stirling(z)) / product;
}

template <typename Scalar>
Scalar rgamma(Scalar x) {
  if (x <= 0 && is_integer(x)) return 0;
  const Scalar threshold = 20;
  Scalar z = x;
  Scalar product = 1;
  while (z < threshold) {
    product *= z;
    z += 1;
  }
  return product * std::exp(-log_gamma_stirling(z));
}

template <typename Scalar>
Scalar bessel_j(Scalar nu, Scalar x) {
  if (!std::isfinite(nu) || !std::isfinite(x)) throw DomainError("bessel_j: non-finite input");
  if (x < 0) throw DomainError("bessel_j: negative argument");
  if (nu < 0) {
    if (is_integer(nu)) {
      const Scalar value = bessel_j(-nu, x);
      return std::fmod(-nu, Scalar(2)) == 1 ? -value : value;
    }
    if (x == 0) return std::copysign(std::numeric_limits<Scalar>::infinity(), rgamma(nu + 1));
    if (x <= 2) return bessel_series(nu, x);
    const Scalar shift = std::ceil(-nu);
    Scalar order = nu + shift;
    Scalar upper = bessel_j(order + 1, x);
    Scalar current = bessel_j(order, x);
    while (order > nu + Scalar(0.5)) {
      const Scalar lower = 2 * order / x * current - upper;
      upper = current;
      current = lower;
      order -= 1;
    }
    return current;
  }
  if (x == 0) return nu == 0 ? Scalar(1) : Scalar(0);
  if (x <= 2 || x * x <= nu + 1) return bessel_series(nu, x);
  Scalar value;
  if (bessel_hankel(nu, x, value)) return value;
  return bessel_steed(nu, x);
}

template <typename Scalar>
SpecFunResult<Scalar> lommel_s(Scalar mu, Scalar nu, Scalar z, double rel_tol) {
  if (!(z > 0) || !std::isfinite(z)) throw DomainError("lommel_s: requires z > 0");
  auto snap = [&](Scalar v) {
    const Scalar r = std::round(v);
    const Scalar scale = std::max({Scalar(1), std::abs(mu), std::abs(nu)});
    return (r <= 0 && std::abs(v - r) <= 64 * kEps<Scalar> * scale) ? r : v;
  };
  const Scalar alpha = snap((1 - mu + nu) / 2);
  const Scalar beta = snap((1 - mu - nu) / 2);
  const Scalar lead = std::pow(z, mu - 1);
  const Scalar q = 4 / (z * z);

  Scalar sum = 1;
  Scalar term = 1;
  Scalar omitted = 0;
  bool exact = false;
  for (int m = 0;; ++m) {
    const Scalar fa = alpha + Scalar(m);
    const Scalar fb = beta + Scalar(m);
    if (fa == 0 || fb == 0) {
      exact = true;
      break;
    }
    const Scalar next = -term * fa * fb * q;
    if (std::abs(next) >= std::abs(term) || m > 100000) {
      omitted = next;
      break;
    }
    sum += next;
    term = next;
    if (std::abs(next) <= kEps<Scalar> * std::abs(sum) / 16) {
      omitted = -term * (alpha + Scalar(m + 1)) * (beta + Scalar(m + 1)) * q;
      break;
    }
  }
  SpecFunResult<Scalar> result;
  result.value = lead * sum;
  result.est_abs_error = exact ? Scalar(0) : std::abs(lead * omitted);
  if (!exact && result.est_abs_error > Scalar(rel_tol) * std::abs(lead)) {
    throw AccuracyError("lommel_s: asymptotic expansion cannot reach the requested accuracy",
                        static_cast<double>(result.est_abs_error));
  }
  return result;
}

std::vector<double> bessel_zeros(double nu, int count) {
  if (!(nu > -1)) throw DomainError("bessel_zeros: requires nu > -1");
  if (count < 1) throw UsageError("bessel_zeros: count must be positive");
  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(count));
  const double step = 0.25;
  double x = nu > 0 ? nu : std::min(1e-3, (nu + 1) * 1e-3);
  double fx = bessel_j(nu, x);
  auto derivative = [nu](double t) { return (bessel_j(nu - 1, t) - bessel_j(nu + 1, t)) / 2; };
  while (static_cast<int>(zeros.size()) < count) {
    const double x_next = x + step;
    const double f_next = bessel_j(nu, x_next);
    if (fx == 0) {
      zeros.push_back(x);
    } else if (std::signbit(fx) != std::signbit(f_next) && f_next != 0) {
      // Safeguarded Newton inside the bracket.
      double lo = x;
      double hi = x_next;
      double f_lo = fx;
      double root = 0.5 * (lo + hi);
      for (int it = 0; it < 100; ++it) {
        const double f_root = bessel_j(nu, root);
        if (f_root == 0) break;
        if (std::signbit(f_root) == std::signbit(f_lo)) {
          lo = root;
          f_lo = f_root;
        } else {
          hi = root;
        }
        double candidate = root - f_root / derivative(root);
        if (!(candidate > lo && candidate < hi)) candidate = 0.5 * (lo + hi);
        const bool done = std::abs(candidate - root) <= 4e-16 * root;
        root = candidate;
        if (done || hi - lo <= 4e-16 * hi) break;
      }
      zeros.push_back(root);
    }
    x = x_next;
    fx = f_next;
  }
  return zeros;
}

double bessel_zero(double nu, int k) {
  if (k < 1) throw UsageError("bessel_zero: k must be >= 1");
  return bessel_zeros(nu, k).back();
}

template double gamma<double>(double);
template long double gamma<long double>(long double);
template double rgamma<double>(double);
template long double rgamma<long double>(long double);
template double bessel_j<double>(double, double);
template long double bessel_j<long double>(long double, long double);
template SpecFunResult<double> lommel_s<double>(double, double, double, double);
template SpecFunResult<long double> lommel_s<long double>(long double, long double, long double,
                                                          double);

}  // namespace hankel
