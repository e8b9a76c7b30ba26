#pragma once

#include <Eigen/Dense>

#include "polybubble/manifold.hpp"
#include "polybubble/radial_jet.hpp"

namespace pb {

// Finite-difference weights for derivatives 0..m at z on arbitrary nodes x
// (Fornberg's algorithm). Returns (m+1) x x.size() weights.
Eigen::MatrixXd fd_weights(double z, const std::vector<double>& x, int m);

// Collocation grid in the geodesic radius on (0, pi), geometrically graded
// toward the center down to `inner_scale`, with the far-field spacing capped
// at ~0.3/sqrt(alpha) so exponential tails stay resolved. Zonal fields are
// represented by their values at the nodes; derivative matrices use order-8
// stencils with parity ghosts at both poles.
class RadialGrid {
public:
  RadialGrid(const ModelManifold& m, int sector, double inner_scale, double alpha,
             int points_per_octave = 10);

  int size() const { return int(r_.size()); }
  const std::vector<double>& nodes() const { return r_; }
  const Eigen::VectorXd& volume_weights() const { return vw_; }
  const ModelManifold& manifold() const { return m_; }
  int sector() const { return sector_; }

  // Geometer Laplacian (dense). `flat` swaps in the Euclidean radial operator
  // on the same nodes (used for chart-transfer comparisons).
  const Eigen::MatrixXd& lap() const { return lap_; }
  Eigen::MatrixXd lap_flat() const;
  const Eigen::MatrixXd& d1() const { return d1_; }

  // Sampled values of a jet profile.
  Eigen::VectorXd sample(const RadialJet& f) const;

  double integrate(const Eigen::VectorXd& values) const { return vw_.dot(values); }
  // Euclidean-measure weights r^{n-1} dr restricted to r <= r_cut (0 = all).
  Eigen::VectorXd flat_weights(double r_cut = 0.0) const;

  // sum_{l=0}^{order} int u . Delta^l v (paper H^order inner product via parts).
  double hk_inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v, int order) const;
  double hk_norm(const Eigen::VectorXd& u, int order) const;

  // (Delta + alpha)^{-k} by k successive dense solves (factored once).
  class ShiftSolver {
  public:
    ShiftSolver(const RadialGrid& g, double alpha, int k);
    Eigen::VectorXd apply_inverse(const Eigen::VectorXd& v) const;
    Eigen::MatrixXd apply_inverse_matrix(const Eigen::MatrixXd& m) const;
    double alpha() const { return alpha_; }
    int k() const { return k_; }

  private:
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double alpha_;
    int k_;
  };

private:
  ModelManifold m_;
  int sector_;
  std::vector<double> r_;
  Eigen::VectorXd vw_;
  Eigen::MatrixXd d1_, d2_, lap_;
};

} // namespace pb
