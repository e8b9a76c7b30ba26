#pragma once

#include "polybubble/linearized.hpp"

namespace pb {

// A positive solution of (Delta+alpha)^k u = u^{2#-1} on the round S^n,
// either the constant branch u = alpha^{(n-2k)/4} or the blow-up branch
// concentrated at the north pole.
struct CriticalSolution {
  std::shared_ptr<RadialGrid> grid;
  Eigen::VectorXd u;
  double alpha = 0.0;
  double mu_star = 0.0;       // reduced-equation root (blow-up branch)
  double residual_rel = 0.0;  // sup |u - (Delta+alpha)^{-k} u_+^{2#-1}| / sup u
  double min_value = 0.0;
  double max_value = 0.0;
  double energy_hk = 0.0;     // paper H^k norm
  int newton_iterations = 0;
  FixedPointResult fixed_point; // the projected stage at mu_star
};

// Initial concentration scale: minimizes the H^{-k} proxy of the residual of
// W over log mu (golden-section search).
double initial_mu(const ModelManifold& m, const Dimensions& dims, double alpha,
                  double amu2_lo = 1e-4, double amu2_hi = 0.5);

// Blow-up branch: projected fixed point + secant on the reduced multiplier
// lambda_0(mu), then full Newton on the unprojected discrete equation.
CriticalSolution solve_critical_blowup(const ModelManifold& m, const Dimensions& dims,
                                       double alpha);

// The constant branch (exact).
double constant_branch_value(const Dimensions& dims, double alpha);

} // namespace pb
