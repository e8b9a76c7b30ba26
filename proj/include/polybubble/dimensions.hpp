#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace pb {

// The dimension pair (n, k) with n > 2k, and the constants derived from it.
// Pairs outside the supported window (n <= 9, k <= 3) are rejected up front:
// everything downstream assumes jets of order 2k+1 fit in a Taylor buffer.
struct Dimensions {
  int n = 3;
  int k = 1;

  Dimensions() = default;
  Dimensions(int n_, int k_) : n(n_), k(k_) {
    if (k < 1 || k > 3 || n <= 2 * k || n > 9)
      throw std::invalid_argument("Dimensions: need 1 <= k <= 3 and 2k < n <= 9, got n=" +
                                  std::to_string(n_) + " k=" + std::to_string(k_));
  }

  // Critical exponent 2# = 2n/(n-2k).
  double two_sharp() const { return 2.0 * n / (n - 2 * k); }
  // 2#_l = 2n/(n-2l), so two_sharp_l(k) == two_sharp() and two_sharp_l(0) == 2.
  double two_sharp_l(int l) const {
    if (2 * l >= n) throw std::invalid_argument("two_sharp_l: need 2l < n");
    return 2.0 * n / (n - 2 * l);
  }
  // Bubble decay exponent (n-2k)/2.
  double s_exp() const { return 0.5 * (n - 2 * k); }

  // rho = (prod_{l=-k}^{k-1} (n+2l))^{-1/k}, the curvature of the bubble.
  double rho() const {
    double p = 1.0;
    for (int l = -k; l <= k - 1; ++l) p *= (n + 2 * l);
    return std::pow(p, -1.0 / k);
  }

  bool operator==(const Dimensions& o) const { return n == o.n && k == o.k; }
};

inline double rho_nk(const Dimensions& d) { return d.rho(); }

} // namespace pb
