#include "polybubble/sphere_spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "polybubble/euclid.hpp"

namespace pb {

double harmonic_space_dim(int n, int l) {
  if (l == 0) return 1.0;
  // (2l+n-1)/(n-1) * binom(l+n-2, n-2)
  double b = 1.0;
  for (int i = 1; i <= n - 2; ++i) b *= double(l + i) / i;
  return (2.0 * l + n - 1.0) / (n - 1.0) * b;
}

double sphere_eigenvalue(int n, int l) { return double(l) * (l + n - 1.0); }

std::vector<double> zonal_values(int n, int L, double t) {
  // C_{l+1} = (2(l+lam) t C_l - (l+2lam-1) C_{l-1})/(l+1), lam = (n-1)/2,
  // normalized by C_l(1) = binom(l+2lam-1, l).
  double lam = 0.5 * (n - 1);
  std::vector<double> c(L + 1), c1(L + 1);
  c[0] = 1.0;
  c1[0] = 1.0;
  if (L >= 1) {
    c[1] = 2.0 * lam * t;
    c1[1] = 2.0 * lam;
  }
  for (int l = 1; l < L; ++l) {
    c[l + 1] = (2.0 * (l + lam) * t * c[l] - (l + 2.0 * lam - 1.0) * c[l - 1]) / (l + 1);
    c1[l + 1] = (2.0 * (l + lam) * c1[l] - (l + 2.0 * lam - 1.0) * c1[l - 1]) / (l + 1);
  }
  for (int l = 0; l <= L; ++l) c[l] /= c1[l];
  return c;
}

RadialJet zonal_harmonic_profile(int n, int l) {
  RadialJet f;
  f.jet = [n, l](double r, int len) {
    // run the recurrence in Taylor arithmetic on t = cos(r + .)
    double lam = 0.5 * (n - 1);
    Taylor t = cos_series(r, len);
    Taylor cm1 = Taylor::constant(1.0, len);
    if (l == 0) return cm1;
    Taylor c = 2.0 * lam * t;
    double n1 = 2.0 * lam, nm1 = 1.0;
    for (int j = 1; j < l; ++j) {
      Taylor cp = (2.0 * (j + lam) * (t * c) - (j + 2.0 * lam - 1.0) * cm1) * (1.0 / (j + 1));
      double np = (2.0 * (j + lam) * n1 - (j + 2.0 * lam - 1.0) * nm1) / (j + 1);
      cm1 = c;
      c = cp;
      nm1 = n1;
      n1 = np;
    }
    return c * (1.0 / n1);
  };
  return f;
}

ZonalTransform::ZonalTransform(int n, int L, double inner_scale, int q) : n_(n), L_(L) {
  // Graded panels near the pole for concentration scales, capped so the
  // oscillation pi/L of the highest mode is resolved everywhere.
  double h_cap = std::min(M_PI / 12.0, 2.5 / std::max(1.0, double(L)) * M_PI);
  auto edges = graded_edges(std::max(1e-12, inner_scale / 8.0), M_PI, 2.0, h_cap);
  QuadRule rule = composite_gauss(edges, q);
  r_ = rule.x;
  w_.resize(r_.size());
  double area = sphere_area(n - 1);
  for (size_t i = 0; i < r_.size(); ++i)
    w_[i] = rule.w[i] * area * std::pow(std::sin(r_[i]), n - 1);
  double omega_n = sphere_area(n);
  norm_.resize(L + 1);
  for (int l = 0; l <= L; ++l) norm_[l] = std::sqrt(harmonic_space_dim(n, l) / omega_n);
}

std::vector<double> ZonalTransform::coefficients(const std::vector<double>& v) const {
  if (v.size() != r_.size()) throw std::invalid_argument("ZonalTransform: value count mismatch");
  std::vector<double> c(L_ + 1, 0.0);
  for (size_t i = 0; i < r_.size(); ++i) {
    double fv = v[i] * w_[i];
    if (fv == 0.0) continue;
    std::vector<double> g = zonal_values(n_, L_, std::cos(r_[i]));
    for (int l = 0; l <= L_; ++l) c[l] += fv * g[l] * norm_[l];
  }
  return c;
}

std::vector<double> ZonalTransform::coefficients(const std::function<double(double)>& f) const {
  std::vector<double> v(r_.size());
  for (size_t i = 0; i < r_.size(); ++i) v[i] = f(r_[i]);
  return coefficients(v);
}

double ZonalTransform::synth(const std::vector<double>& c, double r) const {
  std::vector<double> g = zonal_values(n_, L_, std::cos(r));
  double s = 0.0;
  for (int l = 0; l <= L_; ++l) s += c[l] * g[l] * norm_[l];
  return s;
}

double ZonalTransform::hk_proxy_sq(const std::vector<double>& c, int k) const {
  double s = 0.0;
  for (int l = 0; l < int(c.size()); ++l)
    s += std::pow(1.0 + sphere_eigenvalue(n_, l), k) * c[l] * c[l];
  return s;
}

double ZonalTransform::hminus_k_proxy_sq(const std::vector<double>& c, int k) const {
  double s = 0.0;
  for (int l = 0; l < int(c.size()); ++l)
    s += std::pow(1.0 + sphere_eigenvalue(n_, l), -k) * c[l] * c[l];
  return s;
}

double cross_center_hk_inner(int n, int k, const std::vector<double>& cf,
                             const std::vector<double>& cg, double cos_delta) {
  size_t L = std::min(cf.size(), cg.size());
  std::vector<double> g = zonal_values(n, int(L) - 1, cos_delta);
  double s = 0.0;
  for (size_t l = 0; l < L; ++l) {
    double lam = sphere_eigenvalue(n, int(l));
    double m = 1.0, pw = 1.0;
    for (int j = 1; j <= k; ++j) {
      pw *= lam;
      m += pw;
    }
    s += m * cf[l] * cg[l] * g[l];
  }
  return s;
}

} // namespace pb
