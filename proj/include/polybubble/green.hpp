#pragma once

#include <vector>

#include "polybubble/dimensions.hpp"
#include "polybubble/manifold.hpp"
#include "polybubble/sphere_spectral.hpp"

namespace pb {

// Spectral Green operator for (Delta + alpha)^k on the round S^n:
//   G_alpha(x, y) = sum_l (lambda_l + alpha)^{-k} (N_l / omega_n) G_l(x.y).
//
// The raw zonal sum converges only conditionally off the diagonal, so
// pointwise evaluation uses a smooth spectral window w(l/L) (1 on [0, 1/2],
// rolling off to 0 at 1), which makes the truncation error decay faster than
// any power of 1/(L d). The degree is doubled until successive evaluations
// agree to the requested tolerance.
class SpectralGreen {
public:
  SpectralGreen(const ModelManifold& m, const Dimensions& dims, double alpha,
                double tol = 1e-10);

  double alpha() const { return alpha_; }
  const Dimensions& dims() const { return dims_; }

  // Pointwise kernel value at geodesic distance dist > 0; throws when the
  // windowed sums cannot certify `tol` (too close to the diagonal, or in the
  // far tail where the kernel sits below the rounding floor of the sum).
  double eval(double dist) const;
  double eval(const ManifoldPoint& x, const ManifoldPoint& y) const;

  // Windowed partial sum at fixed degree, t = cos(dist). Exposed so that
  // polynomial-exact quadrature can integrate the synthesized kernel.
  double eval_windowed(double t, int L) const { return windowed_sum(t, L); }

  // Coefficient multiplier (lambda_l + alpha)^{-k}.
  double multiplier(int l) const;

  // Applies (Delta+alpha)^{-k} to zonal coefficients.
  std::vector<double> apply(const std::vector<double>& coef) const;

  // int_M G_alpha(x, y) dv(y) = alpha^{-k}, exactly in the spectral form.
  double integral() const { return std::pow(alpha_, -double(dims_.k)); }

private:
  double windowed_sum(double t, int L) const;

  ModelManifold m_;
  Dimensions dims_;
  double alpha_;
  double tol_;
  int L_base_;
};

struct GreenDecayReport {
  // sup over d in [2/sqrt(alpha), inj/2] of G d^{n-2k} e^{+sqrt(alpha) d / 2}
  double sup_ratio;
  double min_value; // positivity probe: min of G over the sampled range
};
GreenDecayReport green_decay_audit(const SpectralGreen& g, int samples = 48);

// --- Giraud convolution audits ---

struct GiraudSpec {
  double gamma = 2.0;  // X singularity exponent
  double rho = 0.0;    // extra X exponent (gir1 only)
  double beta = 2.0;   // Y singularity exponent
  double eps = 0.1;    // exponential margin in Psi_eps
  double alpha = 100.0;
  double mu = 1e-3;
};

// Z(theta) = int_M X(d(x,z)) Y(d(z,y)) dv(z) at geodesic distance theta,
// with the bound-saturating model kernels of the two convolution lemmas.
// `lemma` is 1 or 2.
double giraud_convolution(const ModelManifold& m, const GiraudSpec& s, int lemma, double theta);

// The lemmas' right-hand sides at distance theta.
double giraud_bound(const ModelManifold& m, const GiraudSpec& s, int lemma, double theta);

struct GiraudAudit {
  std::vector<double> thetas;
  std::vector<double> ratios; // Z / bound
  double sup_ratio;
};
GiraudAudit giraud_audit(const ModelManifold& m, const GiraudSpec& s, int lemma);

// Log-slope of Z(theta) over theta in [2/sqrt(alpha), 6/sqrt(alpha)] for the
// exponential regime of lemma 1 (beta = gamma kills the power prefactor).
double giraud_exponential_slope(const ModelManifold& m, const GiraudSpec& s);

} // namespace pb
