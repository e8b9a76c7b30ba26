#pragma once

#include <array>

#include "polybubble/taylor.hpp"

namespace pb {

// Polynomial smoothstep of class C^8: rises 0 -> 1 across [a, b] with the
// first eight derivatives vanishing at both ends,
//   S(u) = int_0^u s^8 (1-s)^8 ds / B(9, 9),
// evaluated exactly (it is a degree-17 polynomial). C^8 covers every
// smoothness the profiles need (jets to order 2k+1 <= 7); unlike exp(-1/t)
// bumps it has no boundary layers, so graded grids resolve it at high order.
class SmoothStep {
public:
  SmoothStep(double a, double b) : a_(a), b_(b) {}

  double operator()(double t) const { return jet(t, 1).value(); }

  Taylor jet(double t, int len) const {
    if (t <= a_) return Taylor::constant(0.0, len);
    if (t >= b_) return Taylor::constant(1.0, len);
    double w = b_ - a_;
    Taylor u = Taylor::variable((t - a_) / w, len);
    Taylor s = poly_eval(u);
    return s.scaled_variable(1.0 / w);
  }

  double a() const { return a_; }
  double b() const { return b_; }

private:
  static const std::array<double, 18>& coeffs();
  static Taylor poly_eval(const Taylor& u) {
    const auto& c = coeffs();
    Taylor res = Taylor::constant(0.0, u.size());
    for (int j = 17; j >= 0; --j) res = res * u + c[size_t(j)];
    return res;
  }

  double a_, b_;
};

inline const std::array<double, 18>& SmoothStep::coeffs() {
  // int_0^u s^8(1-s)^8 ds / B(9,9) = sum_i binom(8,i)(-1)^i u^{9+i}/(9+i) / B
  static const std::array<double, 18> c = [] {
    std::array<double, 18> out{};
    double binom = 1.0;
    std::array<double, 9> terms{};
    double B = 0.0;
    for (int i = 0; i <= 8; ++i) {
      terms[size_t(i)] = binom * (i % 2 ? -1.0 : 1.0) / (9.0 + i);
      B += terms[size_t(i)];
      binom *= double(8 - i) / (i + 1);
    }
    for (int i = 0; i <= 8; ++i) out[size_t(9 + i)] = terms[size_t(i)] / B;
    return out;
  }();
  return c;
}

// Cutoff chi_rho: identically 1 on [0, inner], 0 beyond outer, C^8 between.
class SmoothCutoff {
public:
  SmoothCutoff(double inner, double outer) : step_(inner, outer) {}

  double operator()(double r) const { return 1.0 - step_(r); }
  Taylor jet(double r, int len) const {
    return Taylor::constant(1.0, len) - step_.jet(r, len);
  }
  double inner() const { return step_.a(); }
  double outer() const { return step_.b(); }

private:
  SmoothStep step_;
};

} // namespace pb
