#include "polybubble/linearized.hpp"

#include <cmath>

#include "polybubble/radial_ops.hpp"
#include "polybubble/sphere_spectral.hpp"

namespace pb {

LinearizedProblem::LinearizedProblem(const RescaledBubble& rb, std::shared_ptr<RadialGrid> grid)
    : rb_(std::make_shared<RescaledBubble>(rb)), grid_(std::move(grid)) {
  const Dimensions& d = rb.dims();
  const ConcentrationParams& p = rb.params();
  int N = grid_->size();
  shift_ = std::make_unique<RadialGrid::ShiftSolver>(*grid_, p.alpha, d.k);

  w_ = grid_->sample(rb.w());
  z_ = grid_->sample(rb.ztilde0());

  // K = (Delta+alpha)^{-k} ((2#-1) W^{2#-2} .) built column-block-wise via the
  // factored shift solves.
  double pw = d.two_sharp() - 2.0;
  Eigen::VectorXd mult(N);
  for (int i = 0; i < N; ++i) mult(i) = (d.two_sharp() - 1.0) * std::pow(std::max(w_(i), 0.0), pw);
  Eigen::MatrixXd K = mult.asDiagonal();
  K = shift_->apply_inverse_matrix(K);
  M_ = Eigen::MatrixXd::Identity(N, N) - K;

  // constraint row: <u, Z~_0>_{H^k} = sum_l int u Delta^l Z~_0 = c . u
  Eigen::VectorXd kernel_sum = Eigen::VectorXd::Zero(N);
  for (int i = 0; i < N; ++i) {
    double r = grid_->nodes()[i];
    if (r >= rb.ztilde0().r_max && rb.ztilde0().r_max > 0.0) continue;
    auto lv = lap_values(rb.ztilde0(), grid_->manifold().geom(), d.n, 0, r, d.k);
    double s = 0.0;
    for (int l = 0; l <= d.k; ++l) s += lv[l].value;
    kernel_sum(i) = s;
  }
  c_ = grid_->volume_weights().cwiseProduct(kernel_sum);
  znorm2_ = c_.dot(z_);

  Eigen::MatrixXd aug(N + 1, N + 1);
  aug.topLeftCorner(N, N) = M_;
  aug.topRightCorner(N, 1) = -z_;
  aug.bottomLeftCorner(1, N) = c_.transpose();
  aug(N, N) = 0.0;
  aug_.compute(aug);
}

LinearizedProblem::Solution LinearizedProblem::solve_preconditioned(const Eigen::VectorXd& b) const {
  int N = grid_->size();
  Eigen::VectorXd rhs(N + 1);
  rhs.head(N) = b;
  rhs(N) = 0.0;
  Eigen::VectorXd sol = aug_.solve(rhs);
  Solution out;
  out.phi = sol.head(N);
  out.lambda0 = sol(N);
  double pn = grid_->hk_norm(out.phi, rb_->dims().k);
  out.ortho_defect = pn > 0.0 ? c_.dot(out.phi) / (pn * std::sqrt(znorm2_)) : 0.0;
  return out;
}

LinearizedProblem::Solution LinearizedProblem::solve_strong(const Eigen::VectorXd& R) const {
  return solve_preconditioned(shift_->apply_inverse(R));
}

Eigen::VectorXd LinearizedProblem::project(const Eigen::VectorXd& u) const {
  return u - z_ * (c_.dot(u) / znorm2_);
}

double LinearizedProblem::projected_condition(int iters) const {
  int N = grid_->size();
  // power iteration for the largest singular value of P M P
  Eigen::VectorXd v = Eigen::VectorXd::Ones(N);
  v = project(v);
  v.normalize();
  double smax = 1.0;
  for (int i = 0; i < iters; ++i) {
    Eigen::VectorXd u = project(M_ * v);
    Eigen::VectorXd w = project(M_.transpose() * u);
    smax = std::sqrt(w.norm());
    v = w.normalized();
  }
  // inverse iteration through the bordered factorization for the smallest
  Eigen::VectorXd x = Eigen::VectorXd::Random(N);
  x = project(x).normalized();
  double smin = smax;
  for (int i = 0; i < iters; ++i) {
    Eigen::VectorXd rhs(N + 1);
    rhs.head(N) = x;
    rhs(N) = 0.0;
    Eigen::VectorXd sol = aug_.solve(rhs);
    Eigen::VectorXd y = project(sol.head(N));
    double ny = y.norm();
    if (ny == 0.0) break;
    smin = 1.0 / ny;
    // back through the transpose as well for a two-sided estimate
    x = y.normalized();
  }
  return smax / smin;
}

NonlinearityParams::NonlinearityParams(const Dimensions& d) : dims(d) {
  double p = d.two_sharp();
  theta = 0.5 * std::min(1.0, p - 2.0);
  measured_C1 = 0.0;
  measured_C2 = 0.0;
  for (double b : {0.1, 1.0, 10.0}) {
    for (double a : {-20.0, -1.5, -0.3, -1e-3, 1e-3, 0.2, 0.7, 5.0, 50.0}) {
      double g = std::fabs(nonlinearity_G(d, b, a));
      double rhs = std::fabs(a) * (std::pow(std::fabs(a), p - 2.0) +
                                   std::pow(b, p - 2.0 - theta) * std::pow(std::fabs(a), theta));
      measured_C1 = std::max(measured_C1, g / rhs);
      for (double a2 : {-0.4, 0.1, 2.0}) {
        double g12 = std::fabs(std::pow(std::max(b + a, 0.0), p - 1.0) -
                               std::pow(std::max(b + a2, 0.0), p - 1.0) -
                               (p - 1.0) * std::pow(b, p - 2.0) * (a - a2));
        double rhs2 = std::fabs(a - a2) *
                      (std::pow(b, p - 2.0 - theta) * std::pow(std::fabs(a), theta) +
                       std::pow(std::fabs(a), p - 2.0) +
                       std::pow(b, p - 2.0 - theta) * std::pow(std::fabs(a2), theta) +
                       std::pow(std::fabs(a2), p - 2.0));
        if (rhs2 > 0.0) measured_C2 = std::max(measured_C2, g12 / rhs2);
      }
    }
  }
}

double nonlinearity_G(const Dimensions& d, double b, double a) {
  double p = d.two_sharp();
  return std::pow(std::max(b + a, 0.0), p - 1.0) - std::pow(b, p - 1.0) -
         (p - 1.0) * std::pow(b, p - 2.0) * a;
}

double nonlinearity_bound_rhs(const NonlinearityParams& np, double b, double a) {
  double p = np.dims.two_sharp();
  return np.measured_C1 * std::fabs(a) *
         (std::pow(std::fabs(a), p - 2.0) +
          std::pow(b, p - 2.0 - np.theta) * std::pow(std::fabs(a), np.theta));
}

FixedPointResult fixed_point_construct(const LinearizedProblem& lin, double tol, int max_iter) {
  const RescaledBubble& rb = lin.bubble();
  const RadialGrid& g = lin.grid();
  const Dimensions& d = rb.dims();
  const ConcentrationParams& p = rb.params();
  int N = g.size();

  Eigen::VectorXd RB(N);
  for (int i = 0; i < N; ++i) RB(i) = rb.residual_at(-1, g.nodes()[i]);
  const Eigen::VectorXd& W = lin.w_values();

  FixedPointResult out;
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(N);
  double prev_step = -1.0;
  int bad = 0;
  double lambda0 = 0.0;
  for (int m = 0; m < max_iter; ++m) {
    Eigen::VectorXd R(N);
    for (int i = 0; i < N; ++i) R(i) = -RB(i) + nonlinearity_G(d, W(i), phi(i));
    auto sol = lin.solve_strong(R);
    double step = g.hk_norm(sol.phi - phi, d.k);
    lambda0 = sol.lambda0;
    out.iterations = m + 1;
    if (prev_step > 0.0) {
      double ratio = step / prev_step;
      out.contraction_ratios.push_back(ratio);
      if (ratio >= 1.0) {
        if (++bad >= 3) {
          out.contraction_failed = true;
          out.phi = sol.phi;
          return out;
        }
      } else {
        bad = 0;
      }
    }
    phi = sol.phi;
    prev_step = step;
    if (step < tol) {
      out.converged = true;
      break;
    }
  }
  out.phi = phi;
  out.lambda0 = lambda0;
  out.hk_norm = g.hk_norm(phi, d.k);
  out.w_hk_norm = g.hk_norm(W, d.k);

  double sa = std::sqrt(p.alpha);
  double sup_w = 0.0, sup_inf = 0.0;
  for (int i = 0; i < N; ++i) {
    double r = g.nodes()[i];
    double fb = F_weight(d, p.alpha, p.mu, r) * rb.bubble_zm()(r);
    sup_w = std::max(sup_w, std::fabs(phi(i)) / fb);
    sup_inf = std::max(sup_inf, std::fabs(phi(i)));
  }
  out.weighted_sup = sup_w;
  out.sup_ratio_eta = std::pow(p.mu, d.s_exp()) * sup_inf / eta_weight(d, sa * p.mu);

  // substitute-back residual of the projected equation. The W-channel uses
  // the defining identity (Delta+alpha)^{-k} W^{2#-1} = W - (Delta+alpha)^{-k} R_B
  // with the jet-exact R_B, so the check isolates the fixed-point and
  // linear-algebra consistency rather than re-measuring the W discretization
  // (which the residual audits cover).
  Eigen::VectorXd gph(N);
  for (int i = 0; i < N; ++i)
    gph(i) = (d.two_sharp() - 1.0) * std::pow(std::max(W(i), 0.0), d.two_sharp() - 2.0) * phi(i) +
             nonlinearity_G(d, W(i), phi(i)) - RB(i);
  Eigen::VectorXd v = phi - lin.apply_shift_inverse(gph);
  v = lin.project(v);
  int L = int(std::min(2400.0, std::max(256.0, 24.0 * sa)));
  ZonalTransform zt(d.n, L, p.mu);
  std::vector<double> vals(zt.radii().size());
  // interpolate grid values onto the transform radii with local barycentric
  for (size_t i = 0; i < zt.radii().size(); ++i) {
    double r = zt.radii()[i];
    const auto& nodes = g.nodes();
    auto it = std::lower_bound(nodes.begin(), nodes.end(), r);
    int idx = int(it - nodes.begin());
    int lo = std::max(0, std::min(idx - 4, N - 8));
    std::vector<double> xs(nodes.begin() + lo, nodes.begin() + lo + 8);
    Eigen::MatrixXd wts = fd_weights(r, xs, 0);
    double s = 0.0;
    for (int j = 0; j < 8; ++j) s += wts(0, j) * v(lo + j);
    vals[i] = s;
  }
  auto coef = zt.coefficients(vals);
  out.residual_proxy = std::sqrt(zt.hminus_k_proxy_sq(coef, d.k));
  return out;
}

} // namespace pb
