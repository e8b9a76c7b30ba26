#include <doctest.h>

#include <cmath>
#include <random>

#include "polybubble/euclid.hpp"
#include "polybubble/quadrature.hpp"
#include "polybubble/radial_ops.hpp"

using namespace pb;

TEST_SUITE_BEGIN("euclid");

static std::vector<double> log_grid(double a, double b, int m) {
  std::vector<double> g(m);
  for (int i = 0; i < m; ++i) g[i] = a * std::pow(b / a, double(i) / (m - 1));
  return g;
}

TEST_CASE("rho_nk values") {
  CHECK(rho_nk(Dimensions(3, 1)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(rho_nk(Dimensions(4, 1)) == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
  CHECK(rho_nk(Dimensions(5, 2)) == doctest::Approx(std::pow(105.0, -0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(Dimensions(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Dimensions(4, 2), std::invalid_argument);
}

TEST_CASE("bubble jet normalization and symmetry") {
  Dimensions d(3, 1);
  Taylor j0 = bubble_jet(d, 0.0);
  CHECK(j0.value() == doctest::Approx(1.0));
  CHECK(std::fabs(j0.deriv(1)) < 1e-15);
  CHECK(bubble_jet(d, std::sqrt(3.0)).value() == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
}

TEST_CASE("polyharmonic apply on closed forms") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}, {7, 3}}) {
    Dimensions d(n, k);
    RadialJet B = bubble_profile(d);
    RadialJet f = polyharmonic_radial_apply(d, B, k);
    // Delta^k B = B^{2#-1}; at the origin both sides are 1.
    CHECK(f(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("kernel_eval special points") {
  Dimensions d(3, 1);
  KernelBasis kb(d);
  CHECK(kb.eval(0, {0.0, 0.0, 0.0}) == doctest::Approx(0.5 * (d.n - 2 * d.k)).epsilon(1e-14));
  CHECK(kb.eval(1, {0.0, 0.0, 0.0}) == 0.0);
  CHECK(std::fabs(kb.eval(0, {std::sqrt(3.0), 0.0, 0.0})) < 1e-14);
  CHECK(kb.z0_root() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(kb.eval(4, {0.0, 0.0, 0.0}), std::out_of_range);
}

TEST_CASE("pde residuals vanish on log grid") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 3}}) {
    Dimensions d(n, k);
    auto grid = log_grid(1e-3, 1e3, 160);
    grid.push_back(0.0);
    PdeResiduals res = pde_residuals(d, grid);
    CHECK(res.max_residual_B <= 1e-8);
    for (int j = 0; j <= n; ++j) CHECK(res.max_residual_Z[j] <= 1e-8);
  }
}

TEST_CASE("K0 identities agree and quadrature is converged") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 3}, {9, 3}}) {
    Dimensions d(n, k);
    EuclidNorms nm = euclid_norms(d);
    CHECK(std::fabs(nm.K0_from_hk - nm.K0_from_quotient) / nm.K0_from_hk <= 1e-6);
    // Oracle at doubled resolution.
    EuclidNorms nm2 = euclid_norms(d, 400);
    CHECK(std::fabs(nm2.K0_from_quotient - nm.K0_from_quotient) / nm.K0_from_quotient <= 1e-8);
  }
}

TEST_CASE("norms are scale invariant") {
  Dimensions d(3, 1);
  double p = d.two_sharp();
  RadialJet B = bubble_profile(d);
  for (double mu : {0.5, 2.0}) {
    double s = d.s_exp();
    RadialJet Bmu;
    Bmu.jet = [B, mu, s](double r, int len) {
      return std::pow(mu, -s) * B.jet(r / mu, len).scaled_variable(1.0 / mu);
    };
    double n1 = euclid_hk_norm_sq(d, B, 0, 300);
    double n2 = euclid_hk_norm_sq(d, Bmu, 0, 300);
    CHECK(n2 == doctest::Approx(n1).epsilon(1e-8));
    auto lp = [&](const RadialJet& f) {
      return improper_radial_integral(
          [&](double r) { return std::pow(f(r), p) * std::pow(r, d.n - 1); }, 1.0, 300);
    };
    CHECK(lp(Bmu) == doctest::Approx(lp(B)).epsilon(1e-8));
  }
}

TEST_CASE("kernel gram is diagonal with positive entries") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}}) {
    Dimensions d(n, k);
    auto G = kernel_gram(d);
    double mind = G[0][0];
    for (int j = 1; j <= n; ++j) mind = std::min(mind, G[j][j]);
    CHECK(mind > 0.0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (i != j) CHECK(std::fabs(G[i][j]) <= 1e-6 * mind);
    for (int j = 2; j <= n; ++j) CHECK(G[j][j] == doctest::Approx(G[1][1]).epsilon(1e-12));
    auto ang = bubble_kernel_angles(d);
    for (int j = 0; j <= n; ++j) CHECK(std::fabs(ang[j]) <= 1e-6);
  }
}

TEST_CASE("bubble tail behavior") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}}) {
    Dimensions d(n, k);
    RadialJet B = bubble_profile(d);
    double r = 1e3;
    double lim = std::pow(d.rho(), -d.s_exp());
    CHECK(std::pow(r, d.n - 2 * d.k) * B(r) == doctest::Approx(lim).epsilon(0.01));
  }
}

TEST_CASE("jet derivative entries agree with finite differences of the entry below") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0.02, 8.0);
  Dimensions d(5, 2);
  RadialJet B = bubble_profile(d);
  KernelBasis kb(d);
  for (int t = 0; t < 20; ++t) {
    double r = U(rng);
    double h = 1e-4;
    for (const RadialJet* f : {&B, &kb.z0}) {
      for (int ord = 1; ord <= 2 * d.k + 1; ++ord) {
        double fd = (f->deriv(r + h, ord - 1) - f->deriv(r - h, ord - 1)) / (2 * h);
        double ex = f->deriv(r, ord);
        CHECK(ex == doctest::Approx(fd).epsilon(5e-6 + 1e-9 / (h * h * std::fabs(ex) + 1e-30)));
      }
    }
  }
}

TEST_CASE("green constant euclid") {
  // k=1, n=3 gives the classical 1/(4 pi).
  CHECK(green_constant_euclid(Dimensions(3, 1)) == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-14));
}

TEST_CASE("quadrature rules") {
  // Gauss-Legendre integrates polynomials exactly.
  QuadRule gl = gauss_legendre(8, -1.0, 2.0);
  double s = gl.integrate([](double x) { return x * x * x * x * x; });
  CHECK(s == doctest::Approx((std::pow(2.0, 6) - 1.0) / 6.0).epsilon(1e-13));
  // Gauss-Jacobi with lam = 1/2 integrates (1-t^2)^{1/2} weighted polys.
  QuadRule gj = gauss_jacobi_symmetric(10, 0.5);
  double m0 = gj.integrate([](double) { return 1.0; });
  CHECK(m0 == doctest::Approx(0.5 * M_PI).epsilon(1e-13)); // area of half disc
  double m2 = gj.integrate([](double t) { return t * t; });
  CHECK(m2 == doctest::Approx(M_PI / 8.0).epsilon(1e-13));
}

TEST_SUITE_END();
