#include "polybubble/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace pb {

QuadRule gauss_legendre(int n, double a, double b) {
  // Newton iteration on the Legendre recurrence, nodes symmetric in pairs.
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  const double eps = 1e-15;
  int m = (n + 1) / 2;
  double xm = 0.5 * (b + a);
  double xl = 0.5 * (b - a);
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::fabs(z - z1) > eps);
    r.x[i] = xm - xl * z;
    r.x[n - 1 - i] = xm + xl * z;
    r.w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    r.w[n - 1 - i] = r.w[i];
  }
  return r;
}

QuadRule gauss_jacobi_symmetric(int n, double lam) {
  // Golub-Welsch on the symmetric Jacobi matrix for weight (1-t^2)^lam.
  // Off-diagonal b_j^2 = j(j+2*lam) / ((2j+2*lam)^2 - 1).
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    double den = (2.0 * j + 2.0 * lam) * (2.0 * j + 2.0 * lam) - 1.0;
    double b2 = j * (j + 2.0 * lam) / den;
    double b = std::sqrt(b2);
    J(j - 1, j) = b;
    J(j, j - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi_symmetric: eigensolve failed");
  double mu0 = std::sqrt(M_PI) * std::exp(std::lgamma(lam + 1.0) - std::lgamma(lam + 1.5));
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v0 * v0;
  }
  return r;
}

QuadRule composite_gauss(const std::vector<double>& edges, int q) {
  QuadRule out;
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    QuadRule panel = gauss_legendre(q, edges[p], edges[p + 1]);
    out.x.insert(out.x.end(), panel.x.begin(), panel.x.end());
    out.w.insert(out.w.end(), panel.w.begin(), panel.w.end());
  }
  return out;
}

std::vector<double> graded_edges(double inner, double r_max, double growth, double h_cap) {
  if (inner <= 0.0 || r_max <= inner) throw std::invalid_argument("graded_edges: bad range");
  std::vector<double> e{0.0, inner};
  double x = inner;
  while (x < r_max) {
    double h = std::min(x * (growth - 1.0), h_cap);
    x += h;
    if (x > r_max - 1e-12 * r_max) x = r_max;
    e.push_back(x);
  }
  return e;
}

double improper_radial_integral(const std::function<double(double)>& f, double scale, int n) {
  QuadRule r = gauss_legendre(n, 0.0, 0.5 * M_PI);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    double t = r.x[i];
    double c = std::cos(t);
    double rr = scale * std::tan(t);
    s += r.w[i] * f(rr) * scale / (c * c);
  }
  return s;
}

} // namespace pb
