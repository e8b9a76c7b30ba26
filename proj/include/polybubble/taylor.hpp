#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace pb {

// Truncated Taylor series about a base point. Coefficients are stored in the
// normalized form c[i] = f^(i)(r0)/i!, so products are plain Cauchy products.
// The base point itself is not stored; callers track it.
//
// All elementary operations propagate derivatives exactly (up to rounding),
// which is what the radial-function machinery relies on: bubbles, cutoffs and
// their poly-Laplacians are assembled from these, never from numeric
// differentiation.
class Taylor {
public:
  static constexpr int kMaxLen = 14;

  Taylor() : len_(0) {}
  explicit Taylor(int len) : len_(len) {
    assert(len >= 1 && len <= kMaxLen);
    c_.fill(0.0);
  }
  // Constant series.
  static Taylor constant(double v, int len) {
    Taylor t(len);
    t.c_[0] = v;
    return t;
  }
  // The local variable r0 + t.
  static Taylor variable(double r0, int len) {
    Taylor t(len);
    t.c_[0] = r0;
    if (len > 1) t.c_[1] = 1.0;
    return t;
  }

  int size() const { return len_; }
  double operator[](int i) const { return i < len_ ? c_[i] : 0.0; }
  double& at(int i) {
    assert(i < len_);
    return c_[i];
  }
  double value() const { return c_[0]; }
  // i-th derivative at the base point.
  double deriv(int i) const {
    if (i >= len_) return 0.0;
    double f = 1.0;
    for (int j = 2; j <= i; ++j) f *= j;
    return c_[i] * f;
  }

  Taylor truncated(int len) const {
    len = std::max(1, std::min({len, len_, kMaxLen}));
    Taylor out(len);
    for (int i = 0; i < len; ++i) out.c_[i] = c_[i];
    return out;
  }

  friend Taylor operator+(const Taylor& a, const Taylor& b) {
    Taylor out(std::min(a.len_, b.len_));
    for (int i = 0; i < out.len_; ++i) out.c_[i] = a[i] + b[i];
    return out;
  }
  friend Taylor operator-(const Taylor& a, const Taylor& b) {
    Taylor out(std::min(a.len_, b.len_));
    for (int i = 0; i < out.len_; ++i) out.c_[i] = a[i] - b[i];
    return out;
  }
  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor out(std::min(a.len_, b.len_));
    for (int i = 0; i < out.len_; ++i) {
      double s = 0.0;
      for (int j = 0; j <= i; ++j) s += a[j] * b[i - j];
      out.c_[i] = s;
    }
    return out;
  }
  friend Taylor operator*(double s, const Taylor& a) {
    Taylor out(a.len_);
    for (int i = 0; i < a.len_; ++i) out.c_[i] = s * a.c_[i];
    return out;
  }
  friend Taylor operator*(const Taylor& a, double s) { return s * a; }
  friend Taylor operator+(const Taylor& a, double s) {
    Taylor out = a;
    out.c_[0] += s;
    return out;
  }
  friend Taylor operator+(double s, const Taylor& a) { return a + s; }
  friend Taylor operator-(const Taylor& a, double s) { return a + (-s); }
  friend Taylor operator-(const Taylor& a) { return -1.0 * a; }

  // 1/a, requires a[0] != 0.
  Taylor reciprocal() const {
    if (c_[0] == 0.0) throw std::domain_error("Taylor::reciprocal at zero");
    Taylor out(len_);
    out.c_[0] = 1.0 / c_[0];
    for (int m = 1; m < len_; ++m) {
      double s = 0.0;
      for (int j = 1; j <= m; ++j) s += c_[j] * out.c_[m - j];
      out.c_[m] = -s / c_[0];
    }
    return out;
  }
  friend Taylor operator/(const Taylor& a, const Taylor& b) { return a * b.reciprocal(); }

  // a^p for real p, requires a[0] > 0.
  Taylor pow(double p) const {
    if (c_[0] <= 0.0) throw std::domain_error("Taylor::pow needs positive leading value");
    Taylor out(len_);
    out.c_[0] = std::pow(c_[0], p);
    for (int m = 1; m < len_; ++m) {
      double s = 0.0;
      for (int j = 1; j <= m; ++j) s += (p * j - (m - j)) * c_[j] * out.c_[m - j];
      out.c_[m] = s / (m * c_[0]);
    }
    return out;
  }

  Taylor exp() const {
    Taylor out(len_);
    out.c_[0] = std::exp(c_[0]);
    for (int m = 1; m < len_; ++m) {
      double s = 0.0;
      for (int j = 1; j <= m; ++j) s += j * c_[j] * out.c_[m - j];
      out.c_[m] = s / m;
    }
    return out;
  }

  Taylor log() const {
    if (c_[0] <= 0.0) throw std::domain_error("Taylor::log needs positive leading value");
    Taylor out(len_);
    out.c_[0] = std::log(c_[0]);
    for (int m = 1; m < len_; ++m) {
      double s = m * c_[m];
      for (int j = 1; j < m; ++j) s -= j * out.c_[j] * c_[m - j];
      out.c_[m] = s / m / c_[0];
    }
    return out;
  }

  // d/dt, shortens by one.
  Taylor derivative() const {
    Taylor out(std::max(1, len_ - 1));
    for (int i = 0; i + 1 < len_; ++i) out.c_[i] = (i + 1) * c_[i + 1];
    if (len_ == 1) out.c_[0] = 0.0;
    return out;
  }

  // a/t for series with a[0] == 0 (up to rounding); shortens by one.
  Taylor divided_by_t() const {
    Taylor out(std::max(1, len_ - 1));
    for (int i = 0; i + 1 < len_; ++i) out.c_[i] = c_[i + 1];
    if (len_ == 1) out.c_[0] = 0.0;
    return out;
  }

  // Substitute t -> s*t (re-scale the local variable).
  Taylor scaled_variable(double s) const {
    Taylor out(len_);
    double f = 1.0;
    for (int i = 0; i < len_; ++i) {
      out.c_[i] = c_[i] * f;
      f *= s;
    }
    return out;
  }

  double eval(double t) const {
    double s = 0.0;
    for (int i = len_ - 1; i >= 0; --i) s = s * t + c_[i];
    return s;
  }

private:
  int len_;
  std::array<double, kMaxLen> c_;
};

inline Taylor sin_series(double r0, int len) {
  // sin(r0 + t) = sin r0 cos t + cos r0 sin t
  Taylor out(len);
  double s = std::sin(r0), c = std::cos(r0);
  double f = 1.0;
  for (int i = 0; i < len; ++i) {
    if (i > 0) f /= i;
    switch (i % 4) {
      case 0: out.at(i) = s * f; break;
      case 1: out.at(i) = c * f; break;
      case 2: out.at(i) = -s * f; break;
      case 3: out.at(i) = -c * f; break;
    }
  }
  return out;
}

inline Taylor cos_series(double r0, int len) {
  Taylor out(len);
  double s = std::sin(r0), c = std::cos(r0);
  double f = 1.0;
  for (int i = 0; i < len; ++i) {
    if (i > 0) f /= i;
    switch (i % 4) {
      case 0: out.at(i) = c * f; break;
      case 1: out.at(i) = -s * f; break;
      case 2: out.at(i) = -c * f; break;
      case 3: out.at(i) = s * f; break;
    }
  }
  return out;
}

} // namespace pb
