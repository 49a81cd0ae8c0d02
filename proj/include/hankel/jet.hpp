#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {

/// Truncated Taylor series at a point: coeffs[j] = f^(j)(center) / j!.
///
/// Arithmetic between jets of different lengths zero-pads the shorter one and
/// returns the longer length; callers that track validity truncate explicitly.
template <typename Scalar = double>
class Jet {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Jet() : center_(0), coeffs_(Vector::Zero(1)) {}

  Jet(Scalar center, Vector coeffs) : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 1) throw UsageError("jet: length must be at least 1");
    if (!coeffs_.allFinite()) throw DomainError("jet: non-finite coefficient");
  }

  Jet(Scalar center, std::initializer_list<Scalar> coeffs)
      : Jet(center, Eigen::Map<const Vector>(coeffs.begin(), static_cast<Eigen::Index>(coeffs.size()))) {}

  static Jet constant(Scalar center, Scalar value, int n) {
    Vector c = Vector::Zero(n);
    c[0] = value;
    return Jet(center, std::move(c));
  }

  /// The identity map x at `center`.
  static Jet variable(Scalar center, int n) {
    Vector c = Vector::Zero(n);
    c[0] = center;
    if (n > 1) c[1] = 1;
    return Jet(center, std::move(c));
  }

  Scalar center() const { return center_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  const Vector& coeffs() const { return coeffs_; }
  Scalar operator[](int j) const { return j < size() ? coeffs_[j] : Scalar(0); }
  Scalar value() const { return coeffs_[0]; }

  /// f^(j)(center).
  Scalar derivative_value(int j) const {
    Scalar v = (*this)[j];
    for (int i = 2; i <= j; ++i) v *= Scalar(i);
    return v;
  }

  Jet truncated(int n) const {
    if (n < 1) throw UsageError("jet: truncation length must be at least 1");
    Vector c = Vector::Zero(n);
    const int keep = std::min(n, size());
    c.head(keep) = coeffs_.head(keep);
    return Jet(center_, std::move(c));
  }

  /// Taylor polynomial evaluated at x.
  Scalar evaluate(Scalar x) const {
    const Scalar t = x - center_;
    Scalar v = 0;
    for (int j = size() - 1; j >= 0; --j) v = v * t + coeffs_[j];
    return v;
  }

  Scalar max_abs() const { return coeffs_.cwiseAbs().maxCoeff(); }

 private:
  Scalar center_;
  Vector coeffs_;
};

namespace detail {

template <typename Scalar>
void check_centers(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  if (a.center() != b.center()) throw UsageError("jet: mismatched centers");
}

template <typename Scalar>
typename Jet<Scalar>::Vector padded(const Jet<Scalar>& a, int n) {
  typename Jet<Scalar>::Vector c = Jet<Scalar>::Vector::Zero(n);
  const int keep = std::min(n, a.size());
  c.head(keep) = a.coeffs().head(keep);
  return c;
}

}  // namespace detail

template <typename Scalar>
Jet<Scalar> operator+(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  detail::check_centers(a, b);
  const int n = std::max(a.size(), b.size());
  return Jet<Scalar>(a.center(), detail::padded(a, n) + detail::padded(b, n));
}

template <typename Scalar>
Jet<Scalar> operator-(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  detail::check_centers(a, b);
  const int n = std::max(a.size(), b.size());
  return Jet<Scalar>(a.center(), detail::padded(a, n) - detail::padded(b, n));
}

template <typename Scalar>
Jet<Scalar> operator-(const Jet<Scalar>& a) {
  return Jet<Scalar>(a.center(), -a.coeffs());
}

template <typename Scalar>
Jet<Scalar> operator*(Scalar s, const Jet<Scalar>& a) {
  return Jet<Scalar>(a.center(), s * a.coeffs());
}

template <typename Scalar>
Jet<Scalar> operator*(const Jet<Scalar>& a, Scalar s) {
  return s * a;
}

template <typename Scalar>
Jet<Scalar> operator+(const Jet<Scalar>& a, Scalar s) {
  typename Jet<Scalar>::Vector c = a.coeffs();
  c[0] += s;
  return Jet<Scalar>(a.center(), std::move(c));
}

template <typename Scalar>
Jet<Scalar> operator-(const Jet<Scalar>& a, Scalar s) {
  return a + (-s);
}

/// Cauchy product truncated to the longer length.
template <typename Scalar>
Jet<Scalar> jet_mul(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  detail::check_centers(a, b);
  const int n = std::max(a.size(), b.size());
  typename Jet<Scalar>::Vector c = Jet<Scalar>::Vector::Zero(n);
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return Jet<Scalar>(a.center(), std::move(c));
}

template <typename Scalar>
Jet<Scalar> operator*(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  return jet_mul(a, b);
}

/// Forward substitution on the lower-triangular Toeplitz system den * q = num.
template <typename Scalar>
Jet<Scalar> jet_div(const Jet<Scalar>& num, const Jet<Scalar>& den) {
  detail::check_centers(num, den);
  if (den[0] == 0) throw SingularityError("jet_div: denominator vanishes at the center");
  const int n = std::max(num.size(), den.size());
  typename Jet<Scalar>::Vector q = Jet<Scalar>::Vector::Zero(n);
  for (int j = 0; j < n; ++j) {
    Scalar s = num[j];
    for (int i = 1; i <= j && i < den.size(); ++i) s -= den[i] * q[j - i];
    q[j] = s / den[0];
  }
  return Jet<Scalar>(num.center(), std::move(q));
}

template <typename Scalar>
Jet<Scalar> operator/(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  return jet_div(a, b);
}

/// Jet of a(x) / (x - center)^p. The first p coefficients must be numerically
/// zero relative to the largest coefficient.
template <typename Scalar>
Jet<Scalar> jet_shift_div_power(const Jet<Scalar>& a, int p, Scalar rel_tol = Scalar(1e-13)) {
  if (p < 0) throw UsageError("jet_shift_div_power: negative power");
  if (p == 0) return a;
  if (p >= a.size()) throw UsageError("jet_shift_div_power: shift exceeds jet length");
  const Scalar scale = a.max_abs();
  for (int j = 0; j < p; ++j) {
    if (std::abs(a[j]) > rel_tol * scale) {
      throw SingularityError("jet_shift_div_power: non-removable singularity (coefficient " +
                             std::to_string(j) + " does not vanish)");
    }
  }
  return Jet<Scalar>(a.center(), a.coeffs().tail(a.size() - p));
}

/// Multiplies by (x - center)^p; the result is longer by p.
template <typename Scalar>
Jet<Scalar> jet_mul_power(const Jet<Scalar>& a, int p) {
  typename Jet<Scalar>::Vector c = Jet<Scalar>::Vector::Zero(a.size() + p);
  c.tail(a.size()) = a.coeffs();
  return Jet<Scalar>(a.center(), std::move(c));
}

/// Formal derivative; the result is shorter by one (minimum length one).
template <typename Scalar>
Jet<Scalar> jet_derivative(const Jet<Scalar>& a) {
  const int n = a.size();
  if (n == 1) return Jet<Scalar>::constant(a.center(), 0, 1);
  typename Jet<Scalar>::Vector c(n - 1);
  for (int j = 1; j < n; ++j) c[j - 1] = Scalar(j) * a[j];
  return Jet<Scalar>(a.center(), std::move(c));
}

template <typename Scalar>
Jet<Scalar> exp(const Jet<Scalar>& a) {
  const int n = a.size();
  typename Jet<Scalar>::Vector e = Jet<Scalar>::Vector::Zero(n);
  e[0] = std::exp(a[0]);
  for (int k = 1; k < n; ++k) {
    Scalar s = 0;
    for (int j = 1; j <= k; ++j) s += Scalar(j) * a[j] * e[k - j];
    e[k] = s / Scalar(k);
  }
  return Jet<Scalar>(a.center(), std::move(e));
}

template <typename Scalar>
Jet<Scalar> log(const Jet<Scalar>& a) {
  if (!(a[0] > 0)) throw DomainError("log: non-positive argument");
  const int n = a.size();
  typename Jet<Scalar>::Vector l = Jet<Scalar>::Vector::Zero(n);
  l[0] = std::log(a[0]);
  for (int k = 1; k < n; ++k) {
    Scalar s = 0;
    for (int j = 1; j < k; ++j) s += Scalar(j) * l[j] * a[k - j];
    l[k] = (a[k] - s / Scalar(k)) / a[0];
  }
  return Jet<Scalar>(a.center(), std::move(l));
}

namespace detail {

template <typename Scalar>
void sin_cos(const Jet<Scalar>& a, typename Jet<Scalar>::Vector& s, typename Jet<Scalar>::Vector& c) {
  const int n = a.size();
  s = Jet<Scalar>::Vector::Zero(n);
  c = Jet<Scalar>::Vector::Zero(n);
  s[0] = std::sin(a[0]);
  c[0] = std::cos(a[0]);
  for (int k = 1; k < n; ++k) {
    Scalar ss = 0;
    Scalar cc = 0;
    for (int j = 1; j <= k; ++j) {
      ss += Scalar(j) * a[j] * c[k - j];
      cc += Scalar(j) * a[j] * s[k - j];
    }
    s[k] = ss / Scalar(k);
    c[k] = -cc / Scalar(k);
  }
}

}  // namespace detail

template <typename Scalar>
Jet<Scalar> sin(const Jet<Scalar>& a) {
  typename Jet<Scalar>::Vector s, c;
  detail::sin_cos(a, s, c);
  return Jet<Scalar>(a.center(), std::move(s));
}

template <typename Scalar>
Jet<Scalar> cos(const Jet<Scalar>& a) {
  typename Jet<Scalar>::Vector s, c;
  detail::sin_cos(a, s, c);
  return Jet<Scalar>(a.center(), std::move(c));
}

template <typename Scalar>
Jet<Scalar> pow(const Jet<Scalar>& a, int p) {
  if (p < 0) return jet_div(Jet<Scalar>::constant(a.center(), 1, a.size()), pow(a, -p));
  Jet<Scalar> result = Jet<Scalar>::constant(a.center(), 1, a.size());
  Jet<Scalar> base = a;
  while (p > 0) {
    if (p & 1) result = jet_mul(result, base);
    p >>= 1;
    if (p > 0) base = jet_mul(base, base);
  }
  return result;
}

/// Real power. Integer exponents go through repeated multiplication so that
/// a vanishing constant term is allowed; otherwise a[0] must be positive.
template <typename Scalar>
Jet<Scalar> pow(const Jet<Scalar>& a, Scalar p) {
  if (p == std::round(p) && std::abs(p) < 1024) return pow(a, static_cast<int>(p));
  if (!(a[0] > 0)) throw DomainError("pow: non-integer power of a non-positive base");
  const int n = a.size();
  typename Jet<Scalar>::Vector y = Jet<Scalar>::Vector::Zero(n);
  y[0] = std::pow(a[0], p);
  for (int k = 1; k < n; ++k) {
    Scalar s = 0;
    for (int j = 1; j <= k; ++j) s += (p * Scalar(j) - Scalar(k - j)) * a[j] * y[k - j];
    y[k] = s / (Scalar(k) * a[0]);
  }
  return Jet<Scalar>(a.center(), std::move(y));
}

template <typename Scalar>
Jet<Scalar> sqrt(const Jet<Scalar>& a) {
  return pow(a, Scalar(0.5));
}

/// F(a(x)) given the derivative values F^(i)(a[0]), i = 0..n-1.
template <typename Scalar>
Jet<Scalar> compose(const std::vector<Scalar>& outer_derivatives, const Jet<Scalar>& a) {
  const int n = a.size();
  Jet<Scalar> t = a - a[0];
  Jet<Scalar> result = Jet<Scalar>::constant(a.center(), 0, n);
  const int terms = std::min<int>(n, static_cast<int>(outer_derivatives.size()));
  for (int i = terms - 1; i >= 0; --i) {
    Scalar factorial = 1;
    for (int j = 2; j <= i; ++j) factorial *= Scalar(j);
    result = jet_mul(result, t) + outer_derivatives[static_cast<std::size_t>(i)] / factorial;
  }
  return result;
}

/// Re-expands a jet at a new center by Horner's rule on shifted polynomials.
/// Exact for the Taylor polynomial the jet represents.
template <typename Scalar>
Jet<Scalar> recenter(const Jet<Scalar>& a, Scalar new_center, int n) {
  const Jet<Scalar> t = Jet<Scalar>::variable(new_center, n) - a.center();
  Jet<Scalar> result = Jet<Scalar>::constant(new_center, 0, n);
  for (int j = a.size() - 1; j >= 0; --j) result = jet_mul(result, t) + a[j];
  return result;
}

}  // namespace hankel
