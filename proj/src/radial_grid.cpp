#include "polybubble/radial_grid.hpp"

#include <cmath>
#include <stdexcept>

#include "polybubble/euclid.hpp"
#include "polybubble/quadrature.hpp"

namespace pb {

Eigen::MatrixXd fd_weights(double z, const std::vector<double>& x, int m) {
  int nd = int(x.size());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(m + 1, nd);
  double c1 = 1.0, c4 = x[0] - z;
  c(0, 0) = 1.0;
  for (int i = 1; i < nd; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0, c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int s = mn; s >= 1; --s) c(s, i) = c1 * (s * c(s - 1, i - 1) - c5 * c(s, i - 1)) / c2;
        c(0, i) = -c1 * c5 * c(0, i - 1) / c2;
      }
      for (int s = mn; s >= 1; --s) c(s, j) = (c4 * c(s, j) - s * c(s - 1, j)) / c3;
      c(0, j) = c4 * c(0, j) / c3;
    }
    c1 = c2;
  }
  return c;
}

namespace {
constexpr int kStencil = 9;
}

RadialGrid::RadialGrid(const ModelManifold& m, int sector, double inner_scale, double alpha,
                       int q)
    : m_(m), sector_(sector) {
  double r_max = m.inj_radius();
  double r_c = std::max(1e-9, inner_scale / 3.0);
  double g = std::log(2.0) / q;
  double sa = std::sqrt(std::max(alpha, 1.0));
  double h_tail = std::min(r_max / 110.0, 0.3 / sa);
  // the decay profile h(sqrt(alpha) r) turns on across r in [1, 2]/sqrt(alpha)
  // with boundary-layer derivatives; resolve that band explicitly
  double band_lo = 0.85 / sa, band_hi = 2.3 / sa, h_band = 0.05 / sa;
  double r = 0.5 * g * r_c;
  while (r < r_max - 0.5 * h_tail) {
    r_.push_back(r);
    double h = std::min(g * (r + r_c), h_tail);
    if (r > band_lo && r < band_hi) h = std::min(h, h_band);
    r += h;
  }
  int N = int(r_.size());
  if (N < 24) throw std::invalid_argument("RadialGrid: grid too small");

  // order-8 stencils, with parity ghosts past both ends
  d1_ = Eigen::MatrixXd::Zero(N, N);
  d2_ = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    // choose the 9 nearest nodes in the extended set
    int lo = std::max(0, std::min(i - kStencil / 2, N - kStencil));
    std::vector<double> xs;
    std::vector<int> idx;
    std::vector<double> sign;
    // interior window [lo, lo+kStencil); replace out-of-window by ghosts when
    // near the ends
    int left_ghosts = std::max(0, kStencil / 2 - i);
    int right_ghosts = std::max(0, i + kStencil / 2 + 1 - N);
    for (int gi = left_ghosts; gi >= 1; --gi) {
      xs.push_back(-r_[gi - 1]);
      idx.push_back(gi - 1);
      sign.push_back(sector_ == 0 ? 1.0 : -1.0);
    }
    int take = kStencil - left_ghosts - right_ghosts;
    int start = left_ghosts > 0 ? 0 : (right_ghosts > 0 ? N - take : lo);
    for (int j = start; j < start + take; ++j) {
      xs.push_back(r_[j]);
      idx.push_back(j);
      sign.push_back(1.0);
    }
    for (int gi = 1; gi <= right_ghosts; ++gi) {
      xs.push_back(2.0 * r_max - r_[N - gi]);
      idx.push_back(N - gi);
      sign.push_back(sector_ == 0 ? 1.0 : -1.0);
    }
    Eigen::MatrixXd w = fd_weights(r_[i], xs, 2);
    for (size_t j = 0; j < xs.size(); ++j) {
      d1_(i, idx[j]) += sign[j] * w(1, j);
      d2_(i, idx[j]) += sign[j] * w(2, j);
    }
  }

  // geometer Laplacian
  lap_ = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    double cot = (m.kind == ModelManifold::Kind::RoundSphere) ? 1.0 / std::tan(r_[i]) : 1.0 / r_[i];
    lap_.row(i) = -d2_.row(i) - (m.n - 1) * cot * d1_.row(i);
    if (sector_ == 1) {
      double s2 = (m.kind == ModelManifold::Kind::RoundSphere) ? std::sin(r_[i]) : r_[i];
      lap_(i, i) += (m.n - 1) / (s2 * s2);
    }
  }

  // quadrature weights: integrate the degree-7 interpolant on each interval,
  // with parity ghosts so the end intervals interpolate symmetrically
  vw_ = Eigen::VectorXd::Zero(N);
  std::vector<double> edges;
  edges.push_back(0.0);
  for (int i = 0; i + 1 < N; ++i) edges.push_back(0.5 * (r_[i] + r_[i + 1]));
  edges.push_back(r_max);
  QuadRule gl = gauss_legendre(5, 0.0, 1.0);
  double par = sector_ == 0 ? 1.0 : -1.0;
  for (int i = 0; i < N; ++i) {
    std::vector<double> xs;
    std::vector<int> idx;
    std::vector<double> sgn;
    int left_ghosts = std::max(0, 4 - i);
    int right_ghosts = std::max(0, i + 4 - (N - 1));
    for (int gi = left_ghosts; gi >= 1; --gi) {
      xs.push_back(-r_[gi - 1]);
      idx.push_back(gi - 1);
      sgn.push_back(par);
    }
    int take = 8 - left_ghosts - right_ghosts;
    int start = left_ghosts > 0 ? 0 : (right_ghosts > 0 ? N - take : i - 4);
    for (int j = start; j < start + take; ++j) {
      xs.push_back(r_[j]);
      idx.push_back(j);
      sgn.push_back(1.0);
    }
    for (int gi = 1; gi <= right_ghosts; ++gi) {
      xs.push_back(2.0 * r_max - r_[N - gi]);
      idx.push_back(N - gi);
      sgn.push_back(par);
    }
    double a = edges[i], b = edges[i + 1];
    for (int qj = 0; qj < 5; ++qj) {
      double xq = a + (b - a) * gl.x[qj];
      Eigen::MatrixXd w = fd_weights(xq, xs, 0);
      for (size_t j = 0; j < xs.size(); ++j) vw_(idx[j]) += sgn[j] * (b - a) * gl.w[qj] * w(0, j);
    }
  }
  // fold in the measure
  double area = sphere_area(m.n - 1);
  for (int i = 0; i < N; ++i) {
    double meas = (m.kind == ModelManifold::Kind::RoundSphere) ? std::pow(std::sin(r_[i]), m.n - 1)
                                                               : std::pow(r_[i], m.n - 1);
    vw_(i) *= area * meas;
  }
}

Eigen::MatrixXd RadialGrid::lap_flat() const {
  int N = size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) {
    out.row(i) = -d2_.row(i) - (m_.n - 1) / r_[i] * d1_.row(i);
    if (sector_ == 1) out(i, i) += (m_.n - 1) / (r_[i] * r_[i]);
  }
  return out;
}

Eigen::VectorXd RadialGrid::sample(const RadialJet& f) const {
  Eigen::VectorXd v(size());
  for (int i = 0; i < size(); ++i)
    v(i) = (f.r_max > 0.0 && r_[i] >= f.r_max) ? 0.0 : f(r_[i]);
  return v;
}

Eigen::VectorXd RadialGrid::flat_weights(double r_cut) const {
  int N = size();
  Eigen::VectorXd out(N);
  double area = sphere_area(m_.n - 1);
  for (int i = 0; i < N; ++i) {
    double meas_sphere = (m_.kind == ModelManifold::Kind::RoundSphere)
                             ? std::pow(std::sin(r_[i]), m_.n - 1)
                             : std::pow(r_[i], m_.n - 1);
    double w_dr = vw_(i) / (area * meas_sphere);
    out(i) = (r_cut > 0.0 && r_[i] > r_cut) ? 0.0 : w_dr * area * std::pow(r_[i], m_.n - 1);
  }
  return out;
}

double RadialGrid::hk_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v, int order) const {
  double ang = sector_ == 0 ? 1.0 : 1.0 / m_.n;
  Eigen::VectorXd lv = v;
  double total = u.dot(vw_.cwiseProduct(lv));
  for (int l = 1; l <= order; ++l) {
    lv = lap_ * lv;
    total += u.dot(vw_.cwiseProduct(lv));
  }
  return ang * total;
}

double RadialGrid::hk_norm(const Eigen::VectorXd& u, int order) const {
  return std::sqrt(std::max(0.0, hk_inner(u, u, order)));
}

RadialGrid::ShiftSolver::ShiftSolver(const RadialGrid& g, double alpha, int k)
    : alpha_(alpha), k_(k) {
  Eigen::MatrixXd A = g.lap();
  A.diagonal().array() += alpha;
  lu_.compute(A);
}

Eigen::VectorXd RadialGrid::ShiftSolver::apply_inverse(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out = v;
  for (int i = 0; i < k_; ++i) out = lu_.solve(out);
  return out;
}

Eigen::MatrixXd RadialGrid::ShiftSolver::apply_inverse_matrix(const Eigen::MatrixXd& m) const {
  Eigen::MatrixXd out = m;
  for (int i = 0; i < k_; ++i) out = lu_.solve(out);
  return out;
}

} // namespace pb
