#include "polybubble/critical_solver.hpp"

#include <cmath>
#include <stdexcept>

namespace pb {

double constant_branch_value(const Dimensions& dims, double alpha) {
  // (Delta+alpha)^k c = alpha^k c and c^{2#-1} = c c^{2#-2} match when
  // c = alpha^{(n-2k)/4}.
  return std::pow(alpha, 0.25 * (dims.n - 2 * dims.k));
}

double initial_mu(const ModelManifold& m, const Dimensions& dims, double alpha, double amu2_lo,
                  double amu2_hi) {
  auto proxy = [&](double lmu) {
    ConcentrationParams p;
    p.z = north_pole(m);
    p.alpha = alpha;
    p.mu = std::exp(lmu);
    p.tau = 1.0;
    RescaledBubble rb(m, dims, p);
    return residual_audit(rb, -1).hminus_k_proxy;
  };
  double lo = 0.5 * std::log(amu2_lo / alpha);
  double hi = 0.5 * std::log(amu2_hi / alpha);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = proxy(c1), f2 = proxy(c2);
  for (int it = 0; it < 28; ++it) {
    if (f1 < f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = proxy(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = proxy(c2);
    }
  }
  return std::exp(0.5 * (a + b));
}

namespace {

struct ReducedPoint {
  double lambda0;
  FixedPointResult fp;
  std::shared_ptr<RadialGrid> grid;
  std::shared_ptr<LinearizedProblem> lin;
};

ReducedPoint reduced_multiplier(const ModelManifold& m, const Dimensions& dims, double alpha,
                                double mu) {
  ConcentrationParams p;
  p.z = north_pole(m);
  p.alpha = alpha;
  p.mu = mu;
  p.tau = 1.0;
  RescaledBubble rb(m, dims, p);
  ReducedPoint out;
  out.grid = std::make_shared<RadialGrid>(m, 0, mu, alpha);
  out.lin = std::make_shared<LinearizedProblem>(rb, out.grid);
  out.fp = fixed_point_construct(*out.lin);
  if (!out.fp.converged) throw std::runtime_error("solve_critical: projected fixed point failed");
  out.lambda0 = out.fp.lambda0;
  return out;
}

} // namespace

CriticalSolution solve_critical_blowup(const ModelManifold& m, const Dimensions& dims,
                                       double alpha) {
  if (alpha < 1.0) throw std::invalid_argument("solve_critical: alpha >= 1 required");
  double mu0 = initial_mu(m, dims, alpha);

  // Bracket a sign change of the reduced multiplier lambda_0(mu) around mu0,
  // stepping outward in log mu, then bisect. The root is where W + phi solves
  // the full (unprojected) equation to leading order.
  double l0 = std::log(mu0);
  ReducedPoint p0 = reduced_multiplier(m, dims, alpha, mu0);
  double llo = l0, lhi = l0, flo = p0.lambda0;
  bool bracketed = false;
  double step = 0.3;
  double prev_l = l0;
  ReducedPoint prev = p0;
  for (int j = 1; j <= 16 && !bracketed; ++j) {
    int sgn = (j % 2 ? +1 : -1);
    double lnext = l0 + sgn * ((j + 1) / 2) * step;
    if (alpha * std::exp(2.0 * lnext) > 0.5) continue; // stay admissible
    ReducedPoint pn = reduced_multiplier(m, dims, alpha, std::exp(lnext));
    if (pn.lambda0 * p0.lambda0 < 0.0) {
      // bracket between lnext and the matching-sign point closest to it
      llo = std::min(lnext, l0);
      lhi = std::max(lnext, l0);
      flo = (llo == lnext) ? pn.lambda0 : p0.lambda0;
      bracketed = true;
    }
    prev_l = lnext;
    prev = pn;
  }
  (void)prev_l;
  (void)prev;
  if (!bracketed) throw std::runtime_error("solve_critical: no reduced-equation root bracketed");

  ReducedPoint best = p0;
  for (int it = 0; it < 42; ++it) {
    double lmid = 0.5 * (llo + lhi);
    ReducedPoint pm = reduced_multiplier(m, dims, alpha, std::exp(lmid));
    best = pm;
    if (std::fabs(pm.lambda0) < 1e-13 || (lhi - llo) < 1e-11) break;
    if (pm.lambda0 * flo < 0.0) {
      lhi = lmid;
    } else {
      llo = lmid;
      flo = pm.lambda0;
    }
  }

  CriticalSolution sol;
  sol.grid = best.grid;
  sol.alpha = alpha;
  sol.mu_star = std::exp(0.5 * (llo + lhi));
  sol.fixed_point = best.fp;
  Eigen::VectorXd u = best.lin->w_values() + best.fp.phi;

  // Newton polish on F(u) = u - (Delta+alpha)^{-k} u_+^{2#-1}
  const RadialGrid& g = *best.grid;
  int N = g.size();
  double pexp = dims.two_sharp();
  auto Fres = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd up(N);
    for (int i = 0; i < N; ++i) up(i) = std::pow(std::max(v(i), 0.0), pexp - 1.0);
    return (v - best.lin->apply_shift_inverse(up)).eval();
  };
  Eigen::VectorXd F = Fres(u);
  double fn = F.lpNorm<Eigen::Infinity>();
  for (int it = 0; it < 30; ++it) {
    if (fn <= 1e-13 * u.lpNorm<Eigen::Infinity>()) break;
    Eigen::VectorXd mult(N);
    for (int i = 0; i < N; ++i)
      mult(i) = (pexp - 1.0) * std::pow(std::max(u(i), 0.0), pexp - 2.0);
    Eigen::MatrixXd J = Eigen::MatrixXd::Identity(N, N) -
                        best.lin->apply_shift_inverse_matrix(Eigen::MatrixXd(mult.asDiagonal()));
    Eigen::VectorXd du = J.partialPivLu().solve(F);
    double t = 1.0;
    for (int ls = 0; ls < 12; ++ls) {
      Eigen::VectorXd ut = u - t * du;
      Eigen::VectorXd Ft = Fres(ut);
      if (Ft.lpNorm<Eigen::Infinity>() < fn) {
        u = ut;
        F = Ft;
        fn = F.lpNorm<Eigen::Infinity>();
        break;
      }
      t *= 0.5;
      if (ls == 11) throw std::runtime_error("solve_critical: Newton line search stalled");
    }
    sol.newton_iterations = it + 1;
  }

  sol.u = u;
  sol.residual_rel = fn / u.lpNorm<Eigen::Infinity>();
  sol.min_value = u.minCoeff();
  sol.max_value = u.maxCoeff();
  if (sol.min_value < -1e-11 * sol.max_value)
    throw std::runtime_error("solve_critical: candidate lost positivity");
  sol.energy_hk = g.hk_norm(u, dims.k);
  return sol;
}

} // namespace pb
