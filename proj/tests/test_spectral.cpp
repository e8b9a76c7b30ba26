#include <doctest.h>

#include <cmath>
#include <random>

#include "polybubble/euclid.hpp"
#include "polybubble/manifold.hpp"
#include "polybubble/sphere_spectral.hpp"

using namespace pb;

TEST_SUITE_BEGIN("spectral");

TEST_CASE("harmonic dimensions and eigenvalues") {
  CHECK(harmonic_space_dim(3, 0) == 1.0);
  CHECK(harmonic_space_dim(3, 1) == doctest::Approx(4.0));
  CHECK(harmonic_space_dim(3, 2) == doctest::Approx(9.0));
  CHECK(harmonic_space_dim(2, 5) == doctest::Approx(11.0));
  CHECK(sphere_eigenvalue(3, 1) == doctest::Approx(3.0));
  CHECK(sphere_eigenvalue(5, 2) == doctest::Approx(12.0));
}

TEST_CASE("transform round trip and orthonormality") {
  int n = 3;
  ZonalTransform zt(n, 24, 0.05);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> coef(25, 0.0);
  for (int l = 0; l <= 24; ++l) coef[l] = U(rng) / (1.0 + l);
  auto c2 = zt.coefficients([&](double r) { return zt.synth(coef, r); });
  for (int l = 0; l <= 24; ++l) CHECK(c2[l] == doctest::Approx(coef[l]).epsilon(1e-9));
}

TEST_CASE("parseval against direct quadrature") {
  int n = 3;
  ModelManifold m = ModelManifold::sphere(n);
  ZonalTransform zt(n, 48, 0.05);
  auto f = [](double r) { return std::exp(-3.0 * (1.0 - std::cos(r))); };
  auto c = zt.coefficients(f);
  double l2_spec = 0.0;
  for (double v : c) l2_spec += v * v;
  double l2_quad = integrate_radial(m, [&](double r) { return f(r) * f(r); }, 0.3, M_PI);
  CHECK(l2_spec == doctest::Approx(l2_quad).epsilon(1e-8));
}

TEST_CASE("coercivity of (Delta+alpha)^k vs paper H^k norm on random fields") {
  // ||u||_{H^k}^2 = sum_l lambda^l |c|^2 <= sum (lambda+alpha)^k |c|^2, alpha >= 1.
  int n = 5, k = 2;
  ZonalTransform zt(n, 20, 0.1);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> c(21);
    for (auto& v : c) v = U(rng);
    double alpha = 1.0;
    double hk = 0.0, coer = 0.0;
    for (int l = 0; l <= 20; ++l) {
      double lam = sphere_eigenvalue(n, l);
      double ml = 1.0 + lam + lam * lam; // sum_{j<=2} lam^j
      hk += ml * c[l] * c[l];
      coer += std::pow(lam + alpha, k) * c[l] * c[l];
    }
    CHECK(hk <= coer * (1.0 + 1e-12));
  }
}

TEST_CASE("hk_norm agrees with spectral proxy up to uniform constants") {
  int n = 3, k = 1;
  ModelManifold m = ModelManifold::sphere(n);
  ZonalTransform zt(n, 16, 0.1);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> coef(17, 0.0);
    for (auto& v : coef) v = U(rng);
    RadialField f;
    f.m = m;
    f.center = north_pole(m);
    f.profile.jet = [coef, n](double r, int len) {
      Taylor s = Taylor::constant(0.0, len);
      for (int l = 0; l < int(coef.size()); ++l) {
        double nl = std::sqrt(harmonic_space_dim(n, l) / sphere_area(n));
        s = s + coef[l] * nl * zonal_harmonic_profile(n, l).jet(r, len);
      }
      return s;
    };
    double quad = hk_norm_sq(f, k);
    double proxy = zt.hk_proxy_sq(coef, k);
    // paper norm sum_l lam^l vs proxy (1+lam)^k: equivalent within binomials
    CHECK(quad <= proxy * (1.0 + 1e-9));
    CHECK(proxy <= 2.0 * quad * (1.0 + 1e-9)); // (1+lam) <= 2 max(1, lam) etc.
  }
}

TEST_CASE("cross-center inner product via addition theorem") {
  int n = 3, k = 1;
  ModelManifold m = ModelManifold::sphere(n);
  ZonalTransform zt(n, 12, 0.1);
  // two zonal fields about poles at distance delta
  std::vector<double> cf(13, 0.0), cg(13, 0.0);
  cf[2] = 1.3;
  cg[2] = 0.7;
  cf[5] = -0.4;
  cg[5] = 0.9;
  double delta = 0.6;
  double got = cross_center_hk_inner(n, k, cf, cg, std::cos(delta));
  // brute force on a 2-D grid: f about pole, g about z at distance delta
  auto synth = [&](const std::vector<double>& c, double r) { return zt.synth(c, r); };
  // laplacian multiplier route: int f (1 + Delta) g with g expanded about its center
  // brute-force via 2-D quadrature in (r, phi) about the pole of f
  QuadRule rr = gauss_legendre(200, 0.0, M_PI);
  QuadRule pp = gauss_legendre(64, 0.0, M_PI);
  double area_n2 = sphere_area(n - 2);
  double acc = 0.0;
  for (size_t i = 0; i < rr.x.size(); ++i) {
    double r = rr.x[i];
    for (size_t j = 0; j < pp.x.size(); ++j) {
      double phi = pp.x[j];
      double cosd2 = std::cos(delta) * std::cos(r) + std::sin(delta) * std::sin(r) * std::cos(phi);
      double d2 = std::acos(std::max(-1.0, std::min(1.0, cosd2)));
      // (1 + Delta) g has coefficients (1+lam) cg
      std::vector<double> cg1(cg.size());
      for (int l = 0; l < int(cg.size()); ++l) cg1[l] = (1.0 + sphere_eigenvalue(n, l)) * cg[l];
      double gv = synth(cg1, d2);
      double fv = synth(cf, r);
      acc += rr.w[i] * pp.w[j] * fv * gv * std::pow(std::sin(r), n - 1) *
             std::pow(std::sin(phi), n - 2) * area_n2;
    }
  }
  CHECK(got == doctest::Approx(acc).epsilon(1e-6));
}

TEST_SUITE_END();
