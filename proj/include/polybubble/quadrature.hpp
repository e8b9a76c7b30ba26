#pragma once

#include <functional>
#include <vector>

namespace pb {

struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;

  double integrate(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
    return s;
  }
};

// Gauss-Legendre nodes/weights on [a, b].
QuadRule gauss_legendre(int n, double a, double b);

// Gauss-Jacobi rule with weight (1-t^2)^lam on [-1, 1] (symmetric Jacobi),
// computed by Golub-Welsch. Used for the sphere measure sin^{n-1}r dr with
// t = cos r, lam = (n-2)/2; exact for polynomial integrands of degree 2n-1.
QuadRule gauss_jacobi_symmetric(int n, double lam);

// Composite Gauss-Legendre rule on panels [edges[0], edges[1]], ...
QuadRule composite_gauss(const std::vector<double>& edges, int nodes_per_panel);

// Panel edges geometrically graded from an inner scale up to r_max:
// {0, inner, inner*growth, ...}, additionally capped so no panel exceeds
// h_cap. Resolves concentration scales at logarithmic cost.
std::vector<double> graded_edges(double inner, double r_max, double growth, double h_cap);

// Quadrature over [0, infinity) of integrands with power-law tails, via the
// substitution r = scale * tan(s) on s in (0, pi/2) with Gauss-Legendre.
// The integrand must decay faster than r^{-1}; convergence is checked by the
// caller by comparing node counts.
double improper_radial_integral(const std::function<double(double)>& f, double scale, int n);

} // namespace pb
