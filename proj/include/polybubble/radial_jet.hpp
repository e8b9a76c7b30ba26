#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "polybubble/taylor.hpp"

namespace pb {

enum class Geom { Euclid, Sphere };

// A radial function carrying exact derivative jets.
//
// jet(r, len) returns the Taylor expansion in the radial variable about r.
// Profiles with a global parity additionally expose xjet(x, len), the
// expansion in x = r^2 of the even core A, where
//   parity = +1:  f(r) = A(r^2)        (smooth radial functions)
//   parity = -1:  f(r) = r A(r^2)      (first-harmonic radial profiles)
// inside r < even_region (outside, cutoff factors may break the parity).
//
// The x-form matters numerically: radial Laplacians in x have no 1/r terms,
// so poly-Laplacians of concentrated profiles evaluate without the severe
// cancellation the r-centered series suffers at small radii.
struct RadialJet {
  std::function<Taylor(double, int)> jet;
  std::function<Taylor(double, int)> xjet;
  int parity = 0;
  double even_region = std::numeric_limits<double>::infinity();
  double r_max = 0.0;
  // Radii where the profile is only C^8 (cutoff seams); quadrature rules
  // align panel edges with these.
  std::vector<double> seams;

  double operator()(double r) const { return jet(r, 1).value(); }
  double deriv(double r, int order) const { return jet(r, order + 1).deriv(order); }
};

// Value and radial derivative of Delta^m f at radius r, on Euclidean space or
// the unit sphere, in angular sector 0 (zonal) or 1 (first harmonic).
// Dispatches to the x-variable path when the profile declares parity there.
struct LapValue {
  double value;
  double dr;
};
LapValue poly_lap(const RadialJet& f, Geom g, int n, int sector, double r, int m);

// Substitute t -> lin*t + t^2 into a series (used to recover r-jets from
// x-jets: A(x0 + 2 r0 t + t^2)).
Taylor substitute_linear_quadratic(const Taylor& a, double lin, int len);

} // namespace pb
