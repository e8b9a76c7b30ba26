#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "polybubble/euclid.hpp"
#include "polybubble/green.hpp"
#include "polybubble/manifold.hpp"
#include "polybubble/quadrature.hpp"
#include "polybubble/radial_ops.hpp"
#include "polybubble/sphere_spectral.hpp"

using namespace pb;

TEST_SUITE_BEGIN("green");

TEST_CASE("closed form on S^3 for k = 1") {
  // G(theta) = sinh(omega (pi - theta)) / (4 pi sin(theta) sinh(omega pi)),
  // omega = sqrt(alpha - 1).
  ModelManifold m = ModelManifold::sphere(3);
  Dimensions d(3, 1);
  for (double alpha : {25.0, 100.0, 1000.0}) {
    SpectralGreen g(m, d, alpha);
    double omega = std::sqrt(alpha - 1.0);
    for (double theta : {0.05, 0.2, 0.7}) {
      if (omega * theta > 12.0) continue;
      double exact =
          std::sinh(omega * (M_PI - theta)) / (4.0 * M_PI * std::sin(theta) * std::sinh(omega * M_PI));
      CHECK(g.eval(theta) == doctest::Approx(exact).epsilon(1e-8));
    }
  }
}

TEST_CASE("symmetry and diagonal rejection") {
  ModelManifold m = ModelManifold::sphere(3);
  Dimensions d(3, 1);
  SpectralGreen g(m, d, 100.0);
  ManifoldPoint x = north_pole(m);
  std::vector<double> v{0.4, 0.0, 0.0, 0.0};
  ManifoldPoint y = exp_map(m, x, v);
  CHECK(std::fabs(g.eval(x, y) - g.eval(y, x)) <= 1e-12);
  CHECK_THROWS(g.eval(0.0));
}

TEST_CASE("integral identity and eigenmode action") {
  ModelManifold m = ModelManifold::sphere(5);
  Dimensions d(5, 2);
  SpectralGreen g(m, d, 300.0);
  CHECK(g.integral() == doctest::Approx(std::pow(300.0, -2.0)).epsilon(1e-14));
  // Gauss-Jacobi quadrature of the synthesized (windowed) kernel: exact for
  // zonal polynomials, so it isolates the l = 0 coefficient alpha^{-k}.
  int L = 512 + 4 * int(std::sqrt(300.0));
  QuadRule gj = gauss_jacobi_symmetric(L / 2 + 8, 0.5 * (m.n - 2));
  double acc = sphere_area(m.n - 1) * gj.integrate([&](double t) { return g.eval_windowed(t, L); });
  CHECK(acc == doctest::Approx(g.integral()).epsilon(1e-8));
  // f = eigenmode -> multiplied by (lambda_l + alpha)^{-k}
  std::vector<double> coef(7, 0.0);
  coef[3] = 2.0;
  auto out = g.apply(coef);
  CHECK(out[3] == doctest::Approx(2.0 * std::pow(sphere_eigenvalue(5, 3) + 300.0, -2.0)));
}

TEST_CASE("round trip: forward operator undoes the Green operator") {
  ModelManifold m = ModelManifold::sphere(3);
  Dimensions d(3, 1);
  double alpha = 50.0;
  SpectralGreen g(m, d, alpha);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> coef(9, 0.0);
  for (auto& c : coef) c = U(rng);
  auto gc = g.apply(coef);
  // synthesize G f as a zonal profile with exact jets and apply (Delta+alpha)^k
  RadialJet prof;
  prof.jet = [&, n = m.n](double r, int len) {
    Taylor s = Taylor::constant(0.0, len);
    for (int l = 0; l < int(gc.size()); ++l) {
      double nl = std::sqrt(harmonic_space_dim(n, l) / sphere_area(n));
      s = s + gc[l] * nl * zonal_harmonic_profile(n, l).jet(r, len);
    }
    return s;
  };
  ZonalTransform zt(m.n, 8, 0.5);
  for (double r : {0.3, 1.0, 2.0}) {
    auto lv = lap_values(prof, Geom::Sphere, m.n, 0, r, d.k);
    double forward = 0.0, binom = 1.0;
    for (int l = 0; l <= d.k; ++l) {
      forward += binom * std::pow(alpha, d.k - l) * lv[l].value;
      binom *= double(d.k - l) / (l + 1);
    }
    double fval = zt.synth(coef, r);
    CHECK(forward == doctest::Approx(fval).epsilon(1e-8));
  }
}

TEST_CASE("coercivity transfer in the spectral proxies") {
  // ||G f||_{(1+lam)^k} <= ||f||_{(1+lam)^{-k}} for alpha >= 1.
  ModelManifold m = ModelManifold::sphere(5);
  Dimensions d(5, 2);
  SpectralGreen g(m, d, 2.0);
  ZonalTransform zt(5, 16, 0.3);
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> c(17);
    for (auto& v : c) v = U(rng);
    auto gc = g.apply(c);
    CHECK(zt.hk_proxy_sq(gc, d.k) <= zt.hminus_k_proxy_sq(c, d.k) * (1.0 + 1e-12));
  }
}

TEST_CASE("positivity and monotonicity in alpha") {
  ModelManifold m = ModelManifold::sphere(3);
  Dimensions d(3, 1);
  SpectralGreen g1(m, d, 100.0, 1e-8), g2(m, d, 400.0, 1e-8);
  for (double dist : {0.1, 0.3, 0.6}) {
    double a = g1.eval(dist), b = g2.eval(dist);
    CHECK(a > 0.0);
    CHECK(b > 0.0);
    CHECK(b < a);
  }
}

TEST_CASE("decay bound ratio bounded over the alpha sweep") {
  for (auto nk : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}}) {
    ModelManifold m = ModelManifold::sphere(nk.first);
    Dimensions d(nk.first, nk.second);
    std::vector<double> sups;
    for (double alpha : {100.0, 1000.0, 10000.0}) {
      SpectralGreen g(m, d, alpha);
      GreenDecayReport rep = green_decay_audit(g);
      CHECK(rep.min_value > 0.0);
      CHECK(std::isfinite(rep.sup_ratio));
      sups.push_back(rep.sup_ratio);
    }
    double lo = *std::min_element(sups.begin(), sups.end());
    double hi = *std::max_element(sups.begin(), sups.end());
    CHECK(hi <= 25.0 * lo); // uniform up to a modest band
  }
}

TEST_CASE("giraud lemma 2: ratio finite and stable across alpha") {
  ModelManifold m = ModelManifold::sphere(3);
  GiraudSpec s;
  s.gamma = 2.5;
  s.beta = 2.0;
  s.eps = 0.1;
  std::vector<double> sups;
  for (double alpha : {100.0, 1000.0, 10000.0}) {
    s.alpha = alpha;
    s.mu = std::sqrt(1e-3 / alpha);
    GiraudAudit a = giraud_audit(m, s, 2);
    CHECK(a.sup_ratio > 0.0);
    CHECK(std::isfinite(a.sup_ratio));
    sups.push_back(a.sup_ratio);
  }
  double lo = *std::min_element(sups.begin(), sups.end());
  double hi = *std::max_element(sups.begin(), sups.end());
  CHECK(hi <= 10.0 * lo);
}

TEST_CASE("giraud sanity: bounded Y gives Z close to int X times sup Y") {
  // beta = n makes Y = Psi_eps <= 1; with X sharply concentrated near its
  // center and alpha = 1, Z at tiny theta approaches int X * sup Y.
  ModelManifold m = ModelManifold::sphere(3);
  GiraudSpec s;
  s.gamma = m.n - 0.05;
  s.rho = 0.0;
  s.beta = double(m.n);
  s.eps = 0.1;
  s.alpha = 1.0;
  s.mu = 1e-6;
  double theta = 1e-3;
  double z = giraud_convolution(m, s, 1, theta);
  auto X = [&](double r) {
    double base = std::pow(s.mu + r, -s.gamma);
    double sa = std::sqrt(s.alpha);
    return sa * r <= 1.0 ? base : base * std::exp(-(1.0 - s.eps) * sa * r);
  };
  double intX = integrate_radial(m, X, s.mu, M_PI - 1e-9);
  CHECK(z == doctest::Approx(intX).epsilon(0.05)); // sup Y = 1
  CHECK(z <= intX * (1.0 + 1e-9));
}

TEST_CASE("giraud lemma 1 exponential log-slope") {
  ModelManifold m = ModelManifold::sphere(3);
  GiraudSpec s;
  s.gamma = 0.5;
  s.beta = 0.5; // beta = gamma kills the power prefactor of the bound
  s.rho = 0.5;
  s.eps = 0.1;
  for (double alpha : {400.0, 2500.0}) {
    s.alpha = alpha;
    s.mu = std::sqrt(1e-3 / alpha);
    double slope = giraud_exponential_slope(m, s);
    double expect = -(1.0 - s.eps) * std::sqrt(alpha);
    CHECK(slope == doctest::Approx(expect).epsilon(0.10));
  }
}

TEST_CASE("giraud exponent validation") {
  ModelManifold m = ModelManifold::sphere(3);
  GiraudSpec s;
  s.gamma = 1.0;
  s.beta = 2.0;
  CHECK_THROWS_AS(giraud_audit(m, s, 2), std::invalid_argument); // gamma <= beta
  s.gamma = 5.0;                                                 // > n
  CHECK_THROWS_AS(giraud_audit(m, s, 1), std::invalid_argument);
}

TEST_SUITE_END();
