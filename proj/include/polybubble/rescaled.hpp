#pragma once

#include <vector>

#include "polybubble/dimensions.hpp"
#include "polybubble/manifold.hpp"
#include "polybubble/radial_jet.hpp"

namespace pb {

// Concentration parameters nu = (z, mu) with the admissibility constraint
// alpha mu^2 < tau and 1/sqrt(alpha) < inj/2.
struct ConcentrationParams {
  ManifoldPoint z;
  double mu = 1e-2;
  double alpha = 100.0;
  double tau = 1.0;

  void validate(const ModelManifold& m) const;
};

// --- weight families ---

// eta(t): the blow-up rate weight; branches on (n, k).
double eta_weight(const Dimensions& d, double t);
// sigma_{n,k} in {1/2, 3/4, 1}, the exponent matching eta.
double sigma_nk(const Dimensions& d);
// r_{nu,alpha}(x) = eta(sqrt(alpha)(mu + d)).
double r_weight(const Dimensions& d, double alpha, double mu, double dist);
// F_{nu,alpha}: r_weight inside sqrt(alpha) d <= 1, alpha^k d^{2k} e^{-sqrt(alpha) d/2} outside.
double F_weight(const Dimensions& d, double alpha, double mu, double dist);
// Psi(t) = 1 for t < 1, e^{-t/2} beyond; Psi_eps uses e^{-(1-eps)t}.
double Psi_weight(double t);
double Psi_eps_weight(double t, double eps);
// gamma rate of the final contradiction argument.
double gamma_rate(const Dimensions& d, double alpha, double mu);

// The C^{2k+1} decay profile h: 1 on [0,1], exp(-step(t)(t-1)/2) on (1,2),
// exactly e^{1/2} e^{-t/2} from t = 2 on.
RadialJet h_profile();

// The modified bubble W = Theta_alpha(z, .) B_{z,mu} and the rescaled kernel
// fields, all as exact-jet radial profiles about z.
class RescaledBubble {
public:
  RescaledBubble(const ModelManifold& m, const Dimensions& dims, const ConcentrationParams& p);

  const ModelManifold& manifold() const { return m_; }
  const Dimensions& dims() const { return dims_; }
  const ConcentrationParams& params() const { return p_; }

  // Theta_alpha(z, x) as a function of d(z, x), jets to order 2k+1.
  const RadialJet& theta() const { return theta_; }
  // B_{z,mu}(x) = (mu/(mu^2 + rho d^2))^{(n-2k)/2}, no cutoff.
  const RadialJet& bubble_zm() const { return bubble_; }
  // W = Theta . B_{z,mu}.
  const RadialJet& w() const { return w_; }
  // Z~_0 = Theta (Z_0)_{z,mu}   (zonal).
  const RadialJet& ztilde0() const { return zt0_; }
  // sector-1 profile q with Z~_j = q(d) sigma_j, j = 1..n.
  const RadialJet& ztilde_ang() const { return zt_ang_; }
  // The dz-Theta correction piece of Z~_j: -mu Theta'(d) B_{z,mu}(d) (sector 1).
  const RadialJet& dz_theta_term() const { return dz_term_; }

  RadialField w_field() const { return make_field(w_, 0); }
  RadialField ztilde0_field() const { return make_field(zt0_, 0); }
  RadialField ztilde_ang_field() const { return make_field(zt_ang_, 1); }

  // (Delta + alpha)^k f - nonlinearity, evaluated from exact jets at radius r:
  //   which = -1: residual of W against W^{2#-1}
  //   which =  0: residual of Z~_0 against (2#-1) W^{2#-2} Z~_0
  //   which =  1: same for the sector-1 profile
  double residual_at(int which, double r) const;

  // Numerical d/dz_j Theta at x (geodesic-path centered difference), against
  // the analytic -sigma_j Theta'(d).
  double dz_theta_numeric(const ManifoldPoint& x, int j, double step = 0.0) const;
  double dz_theta_analytic(double dist) const;

private:
  RadialField make_field(const RadialJet& prof, int sector) const;

  ModelManifold m_;
  Dimensions dims_;
  ConcentrationParams p_;
  RadialJet theta_, bubble_, w_, zt0_, zt_ang_, dz_term_;
};

struct ResidualAudit {
  double sup_ratio_inner = 0.0; // sup_{sqrt(a) d <= 1} |R| / (a (mu+d)^{2-2k} B_{z,mu})
  double sup_ratio_outer = 0.0; // sup_{sqrt(a) d >= 1} |R| / (a^k mu^s d^{2k-n} e^{-sqrt(a)d/2})
  double hminus_k_proxy = 0.0;  // spectral dual-norm proxy of the residual
  double ratio_hminus = 0.0;    // hminus / (sqrt(alpha) mu)^{1/2}
};

// which as in RescaledBubble::residual_at.
ResidualAudit residual_audit(const RescaledBubble& rb, int which, int transform_degree = 0);

struct ConvergencePoint {
  double alpha, mu, tau;
  std::vector<double> lterm;        // int_M |Delta^{l/2} W|^{2#_{k-l}}, l = 0..k
  std::vector<double> lterm_limit;  // Euclidean limits
  double w_hk, w_hkm1;              // H^k and H^{k-1} norms of W
  double gram_diag0, gram_diag1;    // <Z~_0,Z~_0>_{H^k}, <Z~_j,Z~_j>_{H^k} (j>=1)
  double gram_limit0, gram_limit1;  // ||Z_0||^2, ||Z_j||^2 in Hdot^k
  double w_psi_inner;               // <W, psi_{z,mu}>_{H^k}
  double b_psi_limit;               // <B, psi>_{Hdot^k}
  double dz_term_weighted;          // sum_l a^{k-l} int |Delta^{l/2}(mu dz Theta . B)|^2
};

ConvergencePoint convergence_point(const ModelManifold& m, const Dimensions& dims,
                                   const ConcentrationParams& p);

} // namespace pb
