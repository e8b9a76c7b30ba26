#pragma once

#include <vector>

#include "polybubble/quadrature.hpp"
#include "polybubble/radial_jet.hpp"
#include "polybubble/smoothstep.hpp"

namespace pb {

// Model geometries: the unit round sphere S^n and the flat torus R^n/(L Z)^n.
struct ModelManifold {
  enum class Kind { RoundSphere, FlatTorus };

  Kind kind = Kind::RoundSphere;
  int n = 3;
  std::vector<double> periods; // torus only; defaults to 2*pi per axis

  static ModelManifold sphere(int n);
  static ModelManifold torus(int n, std::vector<double> periods = {});

  double inj_radius() const;
  // The fixed cutoff radius rho in (inj/2, inj); fixed once at 0.75 * inj.
  double cutoff_radius() const { return 0.75 * inj_radius(); }
  double volume() const;
  Geom geom() const { return kind == Kind::RoundSphere ? Geom::Sphere : Geom::Euclid; }
  // Cutoff chi: 1 on [0, inj/2], 0 beyond cutoff_radius().
  SmoothCutoff chi() const { return SmoothCutoff(0.5 * inj_radius(), cutoff_radius()); }
};

// Sphere points are unit vectors in R^{n+1}; torus points live in the cell.
struct ManifoldPoint {
  std::vector<double> coords;
};

ManifoldPoint north_pole(const ModelManifold& m);
double distance(const ModelManifold& m, const ManifoldPoint& p, const ManifoldPoint& q);
// v is tangent at z: sphere, a vector in R^{n+1} orthogonal to z; torus, any
// vector in R^n.
ManifoldPoint exp_map(const ModelManifold& m, const ManifoldPoint& z, const std::vector<double>& v);
// Inverse of exp_map; throws past the cut locus.
std::vector<double> log_map(const ModelManifold& m, const ManifoldPoint& z, const ManifoldPoint& x);

// A field that is radial about a center, in angular sector 0 (zonal) or 1
// (profile times a first harmonic around the axis). Profiles carry exact
// jets; grid-sampled fields live in the solver module instead.
struct RadialField {
  ModelManifold m;
  ManifoldPoint center;
  RadialJet profile;
  int sector = 0;
  double quad_scale = 1.0; // innermost feature scale, used to grade quadrature

  double eval_radial(double r) const { return profile(r); }
};

// Quadrature rule in the geodesic radius for integrals of fields with inner
// feature scale `scale`, supported in [0, r_max]. Panel edges are aligned
// with any seams (radii of reduced smoothness) passed in.
QuadRule radial_rule(const ModelManifold& m, double scale, double r_max, int nodes_per_panel = 12,
                     const std::vector<double>& seams = {});

// Integral over M of a zonal integrand given as values of r (the measure
// factor omega_{n-1} sin^{n-1} r, resp. omega_{n-1} r^{n-1}, is applied here).
double integrate_radial(const ModelManifold& m, const std::function<double(double)>& f, double scale,
                        double r_max, const std::vector<double>& seams = {});

// integral of f over M; sector-1 fields integrate to zero by parity.
double integrate(const RadialField& f);

// m-fold geometer Laplacian of a radial field (exact jets).
RadialField radial_laplacian_apply(const RadialField& f, int times);

// Paper-convention Sobolev norm: (sum_{l=0}^{order} int |Delta^{l/2} f|^2)^{1/2},
// odd l meaning |grad Delta^{(l-1)/2} f|.
double hk_norm(const RadialField& f, int order);
double hk_norm_sq(const RadialField& f, int order);

// sum_{l=0}^{order} int f . Delta^l g over M, for same-center same-sector
// fields (equal to the H^order inner product by parts).
double hk_inner(const RadialField& f, const RadialField& g, int order);

// The concentrated field psi_{z,mu}(x) = chi(d) mu^{-(n-2k)/2} psi(d/mu),
// identically zero for d >= cutoff_radius.
RadialField concentrate(const ModelManifold& m, const RadialJet& psi_euclid, double s_exp,
                        const ManifoldPoint& z, double mu);

struct ChartTransferReport {
  double manifold_integral;
  double euclidean_integral;
  double ratio;
};

// Compares int_M |Delta_g^{l/2}(f o exp_z^{-1})|^2 with the flat integral
// int_{R^n} |Delta_xi^{l/2} f|^2 for a compactly supported radial profile.
ChartTransferReport chart_transfer_check(const ModelManifold& m, const RadialJet& f,
                                         double support_radius, int l);

} // namespace pb
