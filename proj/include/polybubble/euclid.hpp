#pragma once

#include <functional>
#include <vector>

#include "polybubble/dimensions.hpp"
#include "polybubble/radial_jet.hpp"
#include "polybubble/taylor.hpp"

namespace pb {

// The standard bubble B(y) = (1 + rho_{n,k} |y|^2)^{-(n-2k)/2}, the extremal
// of the sharp Euclidean Sobolev inequality, normalized so B(0) = 1 and
// Delta^k B = B^{2#-1}.
RadialJet bubble_profile(const Dimensions& dims);

// Jet of B at radius r, to order 2k+1 by default.
Taylor bubble_jet(const Dimensions& dims, double r, int len = 0);

// Kernel of the linearization Delta^k u = (2#-1) B^{2#-2} u:
//   Z_0 = y.grad B + (n-2k)/2 B   (radial),
//   Z_j = dB/dy_j = B'(|y|) y_j/|y|  (radial profile B' times y_j/|y|).
struct KernelBasis {
  Dimensions dims;
  RadialJet z0;        // sector-0 profile
  RadialJet z_angular; // sector-1 profile (shared by j = 1..n)

  explicit KernelBasis(const Dimensions& d);
  // Z_j evaluated at a Cartesian point y (size n). 0 <= j <= n.
  double eval(int j, const std::vector<double>& y) const;
  // Radius where Z_0 vanishes: rho_tilde = rho^{-1/2}.
  double z0_root() const;
};

// Applies the Euclidean radial Laplacian m times to a jet-backed profile.
// Pre: m <= k is not enforced here, only that the jet is long enough.
RadialJet polyharmonic_radial_apply(const Dimensions& dims, const RadialJet& f, int m);

struct EuclidNorms {
  double hk_norm_B;        // ||B||_{Hdot^k}
  double l2sharp_norm_B;   // ||B||_{L^{2#}}
  double K0_from_hk;       // hk_norm^{-2k/n}
  double K0_from_quotient; // l2sharp / hk_norm
};

// Radial quadrature of the two norm integrals, with a convergence check
// (doubling the node count must agree to `tol`, else throws).
EuclidNorms euclid_norms(const Dimensions& dims, int nodes = 200, double tol = 1e-9);

// ||.||_{Hdot^k} of a radial profile: even k integrates |Delta^{k/2} f|^2,
// odd k integrates |(Delta^{(k-1)/2} f)'|^2, both against omega_{n-1} r^{n-1} dr.
double euclid_hk_norm_sq(const Dimensions& dims, const RadialJet& f, int sector, int nodes = 200);

// Hdot^k inner product of two jet-backed profiles living in the same angular
// sector (0 or 1). Uses sum_l int f . Delta^k g with all derivatives on g.
double euclid_hk_inner(const Dimensions& dims, const RadialJet& f, const RadialJet& g, int sector,
                       int nodes = 200);

struct PdeResiduals {
  double max_residual_B;
  std::vector<double> max_residual_Z; // indexed j = 0..n (j>=1 all equal)
};

// sup over the grid of |Delta^k B - B^{2#-1}| and of the linearized residuals
// |Delta^k Z_j - (2#-1) B^{2#-2} Z_j|, all evaluated from exact jets.
PdeResiduals pde_residuals(const Dimensions& dims, const std::vector<double>& grid);

// Gram matrix in Hdot^k of {Z_0, ..., Z_n}. Distinct angular sectors are
// orthogonal by parity of the first harmonic; those entries are exact zeros,
// computed as such. Radial x radial and the sector-1 diagonal come from
// quadrature.
std::vector<std::vector<double>> kernel_gram(const Dimensions& dims, int nodes = 200);

// <B, Z_j>_{Hdot^k} normalized by the norms, j = 0..n.
std::vector<double> bubble_kernel_angles(const Dimensions& dims, int nodes = 200);

// Fundamental-solution constant of Delta^k on R^n:
// c_{n,k} = Gamma(n/2 - k) / (4^k pi^{n/2} (k-1)!).
double green_constant_euclid(const Dimensions& dims);

// Surface measure of the unit sphere S^{n-1} in R^n.
double sphere_area(int n_minus_1);

} // namespace pb
