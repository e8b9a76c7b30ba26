#include <doctest.h>

#include <cmath>
#include <random>

#include "polybubble/radial_ops.hpp"
#include "polybubble/taylor.hpp"

using namespace pb;

TEST_SUITE_BEGIN("taylor");

TEST_CASE("arithmetic reproduces closed forms") {
  double r0 = 0.7;
  Taylor r = Taylor::variable(r0, 8);
  Taylor f = (Taylor::constant(1.0, 8) + r * r).pow(-0.5);
  // f = (1+r^2)^{-1/2}: f' = -r (1+r^2)^{-3/2}
  double v = std::pow(1 + r0 * r0, -0.5);
  double d1 = -r0 * std::pow(1 + r0 * r0, -1.5);
  double d2 = (2 * r0 * r0 - 1) * std::pow(1 + r0 * r0, -2.5);
  CHECK(f.value() == doctest::Approx(v).epsilon(1e-14));
  CHECK(f.deriv(1) == doctest::Approx(d1).epsilon(1e-14));
  CHECK(f.deriv(2) == doctest::Approx(d2).epsilon(1e-13));

  Taylor e = (0.5 * r).exp();
  CHECK(e.deriv(3) == doctest::Approx(0.125 * std::exp(0.5 * r0)).epsilon(1e-13));

  Taylor lg = (Taylor::constant(2.0, 8) + r).log();
  CHECK(lg.deriv(1) == doctest::Approx(1.0 / (2.0 + r0)).epsilon(1e-13));
  CHECK(lg.deriv(2) == doctest::Approx(-1.0 / std::pow(2.0 + r0, 2)).epsilon(1e-13));
}

TEST_CASE("sin and cos series") {
  double r0 = 1.2;
  Taylor s = sin_series(r0, 8);
  Taylor c = cos_series(r0, 8);
  CHECK(s.deriv(2) == doctest::Approx(-std::sin(r0)).epsilon(1e-14));
  CHECK(c.deriv(3) == doctest::Approx(std::sin(r0)).epsilon(1e-14));
  Taylor one = s * s + c * c;
  CHECK(one.value() == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 1; i < 8; ++i) CHECK(std::fabs(one[i]) < 1e-13);
}

TEST_CASE("jet entries match centered differences at random radii") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> U(0.05, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    double r0 = U(rng);
    Taylor r = Taylor::variable(r0, 8);
    Taylor f = (Taylor::constant(1.0, 8) + 0.37 * (r * r)).pow(-1.5);
    double h = 1e-5 * std::max(1.0, r0);
    auto fn = [&](double x) { return std::pow(1.0 + 0.37 * x * x, -1.5); };
    for (int ord = 1; ord <= 2; ++ord) {
      double fd = ord == 1 ? (fn(r0 + h) - fn(r0 - h)) / (2 * h)
                           : (fn(r0 + h) - 2 * fn(r0) + fn(r0 - h)) / (h * h);
      CHECK(f.deriv(ord) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("euclid radial laplacian basics") {
  // constant -> 0
  Taylor c = Taylor::constant(3.0, 8);
  Taylor lc = radial_laplacian_euclid(c, 5, 0.8, 0);
  CHECK(std::fabs(lc.value()) < 1e-14);

  // f = r^2 -> -2n, any n, including at the origin
  for (int n : {3, 5, 7}) {
    Taylor r = Taylor::variable(0.9, 8);
    Taylor f = r * r;
    CHECK(radial_laplacian_euclid(f, n, 0.9, 0).value() == doctest::Approx(-2.0 * n).epsilon(1e-13));
    Taylor r0 = Taylor::variable(0.0, 8);
    CHECK(radial_laplacian_euclid(r0 * r0, n, 0.0, 0).value() ==
          doctest::Approx(-2.0 * n).epsilon(1e-13));
  }
}

TEST_CASE("sphere radial laplacian eigenfunctions") {
  // cos r is the first zonal harmonic on S^n: Delta cos r = n cos r.
  for (int n : {2, 3, 5}) {
    for (double r0 : {0.0, 0.4, 1.3, 2.6}) {
      Taylor f = cos_series(r0, 10);
      Taylor lf = radial_laplacian_sphere(f, n, r0, 0);
      CHECK(lf.value() == doctest::Approx(n * std::cos(r0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("sector-1 euclid laplacian matches Cartesian finite differences") {
  // g(y) = p(|y|) y_1/|y| with p(r) = r exp(-r^2). Compare the sector-1
  // radial operator against a 3-D second-order FD Laplacian (geometer sign).
  auto p = [](double r) { return r * std::exp(-r * r); };
  auto g = [&](double x, double y, double z) {
    double r = std::sqrt(x * x + y * y + z * z);
    if (r == 0.0) return 0.0;
    return p(r) * x / r;
  };
  int n = 3;
  double x = 0.5, y = 0.3, z = -0.2;
  double r = std::sqrt(x * x + y * y + z * z);
  double h = 1e-3;
  double lap_fd = -(g(x + h, y, z) + g(x - h, y, z) + g(x, y + h, z) + g(x, y - h, z) +
                    g(x, y, z + h) + g(x, y, z - h) - 6.0 * g(x, y, z)) /
                  (h * h);
  Taylor rr = Taylor::variable(r, 10);
  Taylor prof = rr * (-1.0 * (rr * rr)).exp();
  double lap_sector = radial_laplacian_euclid(prof, n, r, 1).value() * (x / r);
  CHECK(lap_sector == doctest::Approx(lap_fd).epsilon(1e-4));
}

TEST_SUITE_END();
