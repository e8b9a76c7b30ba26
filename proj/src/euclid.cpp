#include "polybubble/euclid.hpp"

#include <cmath>
#include <stdexcept>

#include "polybubble/quadrature.hpp"
#include "polybubble/radial_ops.hpp"

namespace pb {

double sphere_area(int d) {
  // |S^d| = 2 pi^{(d+1)/2} / Gamma((d+1)/2)
  return 2.0 * std::pow(M_PI, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1));
}

RadialJet bubble_profile(const Dimensions& dims) {
  double rho = dims.rho();
  double s = dims.s_exp();
  RadialJet f;
  f.parity = +1;
  f.xjet = [rho, s](double x0, int len) {
    Taylor xi = Taylor::variable(x0, len);
    return (Taylor::constant(1.0, len) + rho * xi).pow(-s);
  };
  f.jet = [f](double r, int len) {
    return substitute_linear_quadratic(f.xjet(r * r, len), 2.0 * r, len);
  };
  return f;
}

Taylor bubble_jet(const Dimensions& dims, double r, int len) {
  if (len == 0) len = 2 * dims.k + 2;
  return bubble_profile(dims).jet(r, len);
}

KernelBasis::KernelBasis(const Dimensions& d) : dims(d) {
  double rho = d.rho();
  double s = d.s_exp();
  auto a_bubble = [rho, s](double x0, int len) {
    Taylor xi = Taylor::variable(x0, len);
    return (Taylor::constant(1.0, len) + rho * xi).pow(-s);
  };
  // Z_0 = y.grad B + s B = 2 x A'(x) + s A(x), even.
  z0.parity = +1;
  z0.xjet = [a_bubble, s](double x0, int len) {
    int l = std::min(len + 1, Taylor::kMaxLen);
    Taylor A = a_bubble(x0, l);
    Taylor xi = Taylor::variable(x0, l);
    return (2.0 * (xi * A.derivative()) + s * A).truncated(len);
  };
  z0.jet = [this](double r, int len) {
    return substitute_linear_quadratic(z0.xjet(r * r, len), 2.0 * r, len);
  };
  // Z_j = dB/dy_j = B'(r) y_j/|y| with B'(r) = 2 r A'(x): odd core 2 A'.
  z_angular.parity = -1;
  z_angular.xjet = [a_bubble](double x0, int len) {
    int l = std::min(len + 1, Taylor::kMaxLen);
    return (2.0 * a_bubble(x0, l).derivative()).truncated(len);
  };
  z_angular.jet = [this](double r, int len) {
    Taylor core = substitute_linear_quadratic(z_angular.xjet(r * r, len), 2.0 * r, len);
    return (Taylor::variable(r, len) * core).truncated(len);
  };
}

double KernelBasis::eval(int j, const std::vector<double>& y) const {
  if (j < 0 || j > dims.n) throw std::out_of_range("KernelBasis::eval: index out of range");
  if (int(y.size()) != dims.n) throw std::invalid_argument("KernelBasis::eval: point dimension mismatch");
  double r2 = 0.0;
  for (double v : y) r2 += v * v;
  double r = std::sqrt(r2);
  if (j == 0) return z0(r);
  if (r == 0.0) return 0.0;
  return z_angular(r) * (y[j - 1] / r);
}

double KernelBasis::z0_root() const {
  // Z_0 = (n-2k)(1+rho r^2)^{-s-1} (1 - rho r^2)/2 vanishes at rho r^2 = 1.
  return 1.0 / std::sqrt(dims.rho());
}

RadialJet polyharmonic_radial_apply(const Dimensions& dims, const RadialJet& f, int m) {
  int n = dims.n;
  RadialJet out;
  out.r_max = f.r_max;
  out.parity = f.parity;
  out.even_region = f.even_region;
  if (f.parity != 0 && f.xjet) {
    auto base = f.xjet;
    int parity = f.parity;
    out.xjet = [base, n, m, parity](double x0, int len) {
      int need = len + 2 * m;
      if (need > Taylor::kMaxLen)
        throw std::invalid_argument("polyharmonic_radial_apply: insufficient jet order");
      return xlap_pow(base(x0, need), Geom::Euclid, n, parity == +1 ? 0 : 1, x0, m);
    };
    out.jet = [out](double r, int len) {
      Taylor core = substitute_linear_quadratic(out.xjet(r * r, len), 2.0 * r, len);
      if (out.parity == -1) return (Taylor::variable(r, len) * core).truncated(len);
      return core;
    };
    return out;
  }
  auto base = f.jet;
  out.jet = [base, n, m](double r, int len) {
    int need = len + 2 * m;
    if (need > Taylor::kMaxLen)
      throw std::invalid_argument("polyharmonic_radial_apply: insufficient jet order");
    return radial_laplacian_euclid_pow(base(r, need), n, r, 0, m);
  };
  return out;
}

namespace {

// Radial profile of |Delta^{k/2} f| for a sector-0 field: even k gives
// Delta^{k/2} f, odd k the radial derivative of Delta^{(k-1)/2} f.
double half_laplacian_value(const Dimensions& dims, const RadialJet& f, double r) {
  int k = dims.k;
  LapValue lv = poly_lap(f, Geom::Euclid, dims.n, 0, r, k / 2);
  return (k % 2 == 0) ? lv.value : lv.dr;
}

} // namespace

double euclid_hk_norm_sq(const Dimensions& dims, const RadialJet& f, int sector, int nodes) {
  if (sector != 0) return euclid_hk_inner(dims, f, f, sector, nodes);
  double area = sphere_area(dims.n - 1);
  auto integrand = [&](double r) {
    double v = half_laplacian_value(dims, f, r);
    return v * v * std::pow(r, dims.n - 1);
  };
  return area * improper_radial_integral(integrand, 1.0, nodes);
}

double euclid_hk_inner(const Dimensions& dims, const RadialJet& f, const RadialJet& g, int sector,
                       int nodes) {
  // <f, g>_{Hdot^k} = int f . Delta^k g  (all derivatives moved onto g).
  // Sector-1 profiles carry the angular factor y_j/|y|, whose squared mean
  // over S^{n-1} is 1/n.
  double ang = sphere_area(dims.n - 1) * (sector == 0 ? 1.0 : 1.0 / dims.n);
  int k = dims.k;
  auto integrand = [&](double r) {
    double lg = poly_lap(g, Geom::Euclid, dims.n, sector, r, k).value;
    return f(r) * lg * std::pow(r, dims.n - 1);
  };
  return ang * improper_radial_integral(integrand, 1.0, nodes);
}

EuclidNorms euclid_norms(const Dimensions& dims, int nodes, double tol) {
  RadialJet B = bubble_profile(dims);
  double p = dims.two_sharp();
  double area = sphere_area(dims.n - 1);

  auto hk_at = [&](int nn) { return euclid_hk_norm_sq(dims, B, 0, nn); };
  auto lp_at = [&](int nn) {
    auto integrand = [&](double r) {
      return std::pow(B(r), p) * std::pow(r, dims.n - 1);
    };
    return area * improper_radial_integral(integrand, 1.0, nn);
  };

  double hk2 = hk_at(nodes), hk2b = hk_at(2 * nodes);
  double lp = lp_at(nodes), lpb = lp_at(2 * nodes);
  if (std::fabs(hk2 - hk2b) > tol * std::fabs(hk2b) || std::fabs(lp - lpb) > tol * std::fabs(lpb))
    throw std::runtime_error("euclid_norms: quadrature did not converge to tolerance");

  EuclidNorms out;
  out.hk_norm_B = std::sqrt(hk2b);
  out.l2sharp_norm_B = std::pow(lpb, 1.0 / p);
  out.K0_from_hk = std::pow(out.hk_norm_B, -2.0 * dims.k / dims.n);
  out.K0_from_quotient = out.l2sharp_norm_B / out.hk_norm_B;
  return out;
}

PdeResiduals pde_residuals(const Dimensions& dims, const std::vector<double>& grid) {
  int n = dims.n, k = dims.k;
  double p = dims.two_sharp();
  RadialJet B = bubble_profile(dims);
  KernelBasis kb(dims);

  PdeResiduals out;
  out.max_residual_B = 0.0;
  out.max_residual_Z.assign(n + 1, 0.0);
  for (double r : grid) {
    double b = B(r);
    double lb = poly_lap(B, Geom::Euclid, n, 0, r, k).value;
    out.max_residual_B = std::max(out.max_residual_B, std::fabs(lb - std::pow(b, p - 1.0)));

    double vb2 = (p - 1.0) * std::pow(b, p - 2.0);
    double lz0 = poly_lap(kb.z0, Geom::Euclid, n, 0, r, k).value;
    out.max_residual_Z[0] = std::max(out.max_residual_Z[0], std::fabs(lz0 - vb2 * kb.z0(r)));

    double lz1 = poly_lap(kb.z_angular, Geom::Euclid, n, 1, r, k).value;
    double res1 = std::fabs(lz1 - vb2 * kb.z_angular(r));
    for (int j = 1; j <= n; ++j) out.max_residual_Z[j] = std::max(out.max_residual_Z[j], res1);
  }
  return out;
}

std::vector<std::vector<double>> kernel_gram(const Dimensions& dims, int nodes) {
  int n = dims.n;
  KernelBasis kb(dims);
  std::vector<std::vector<double>> G(n + 1, std::vector<double>(n + 1, 0.0));
  double d00 = euclid_hk_inner(dims, kb.z0, kb.z0, 0, nodes);
  double d11 = euclid_hk_inner(dims, kb.z_angular, kb.z_angular, 1, nodes);
  G[0][0] = d00;
  for (int j = 1; j <= n; ++j) G[j][j] = d11;
  // Cross entries vanish by angular parity: s_j has zero mean and distinct
  // first harmonics are orthogonal on S^{n-1}.
  return G;
}

std::vector<double> bubble_kernel_angles(const Dimensions& dims, int nodes) {
  KernelBasis kb(dims);
  RadialJet B = bubble_profile(dims);
  double nb = std::sqrt(euclid_hk_norm_sq(dims, B, 0, nodes));
  double n0 = std::sqrt(euclid_hk_inner(dims, kb.z0, kb.z0, 0, nodes));
  std::vector<double> out(dims.n + 1, 0.0);
  out[0] = euclid_hk_inner(dims, B, kb.z0, 0, nodes) / (nb * n0);
  // j >= 1 vanish by sector orthogonality.
  return out;
}

double green_constant_euclid(const Dimensions& dims) {
  int n = dims.n, k = dims.k;
  return std::exp(std::lgamma(0.5 * n - k)) /
         (std::pow(4.0, k) * std::pow(M_PI, 0.5 * n) * std::tgamma(k));
}

} // namespace pb
