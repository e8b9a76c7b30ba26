#pragma once

#include <functional>
#include <vector>

#include "polybubble/manifold.hpp"
#include "polybubble/radial_jet.hpp"

namespace pb {

// Zonal spherical-harmonic analysis on the unit S^n.
//
// G_l(t) is the Gegenbauer polynomial C_l^{(n-1)/2}(t) normalized so that
// G_l(1) = 1; the degree-l zonal harmonic about a pole z is G_l(cos d(z, .)),
// an eigenfunction of the geometer Laplacian with eigenvalue l(l+n-1).
// N(n, l) is the dimension of the degree-l harmonic space, and
// e_l := sqrt(N_l / omega_n) G_l(z . x) is L^2-orthonormal.

double harmonic_space_dim(int n, int l);
double sphere_eigenvalue(int n, int l);

// G_l(t) for l = 0..L (upward recurrence), at a single t in [-1, 1].
std::vector<double> zonal_values(int n, int L, double t);

// Exact-jet radial profile of the zonal harmonic G_l(cos r).
RadialJet zonal_harmonic_profile(int n, int l);

// Zonal spectral coefficients with respect to the orthonormal basis e_l,
// l = 0..L, of a zonal function given by values on a radial quadrature rule.
class ZonalTransform {
public:
  ZonalTransform(int n, int L, double inner_scale, int nodes_per_panel = 12);

  int degree() const { return L_; }
  int n_dim() const { return n_; }
  const std::vector<double>& radii() const { return r_; }

  // Analysis: f given pointwise on the transform's radii.
  std::vector<double> coefficients(const std::vector<double>& values_on_radii) const;
  std::vector<double> coefficients(const std::function<double(double)>& f) const;
  // Synthesis at an arbitrary radius.
  double synth(const std::vector<double>& coef, double r) const;

  // Paper-norm proxies: sum_l w(lambda_l) |c_l|^2 with w = (1+lambda)^{+k}
  // (H^k proxy) or (1+lambda)^{-k} (dual H^{-k} proxy).
  double hk_proxy_sq(const std::vector<double>& coef, int k) const;
  double hminus_k_proxy_sq(const std::vector<double>& coef, int k) const;

private:
  int n_, L_;
  std::vector<double> r_, w_; // radii and weights including measure factor
  std::vector<double> norm_;  // sqrt(N_l / omega_n)
};

// <f, g>_{H^k} of zonal functions about two different poles at geodesic
// distance delta, from their coefficient vectors (addition theorem):
// sum_l m_l f_l g_l G_l(cos delta), where m_l = sum_{j<=k} lambda_l^j is the
// paper's H^k multiplier.
double cross_center_hk_inner(int n, int k, const std::vector<double>& cf,
                             const std::vector<double>& cg, double cos_delta);

} // namespace pb
