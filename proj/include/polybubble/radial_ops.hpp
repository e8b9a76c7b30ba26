#pragma once

#include "polybubble/radial_jet.hpp"
#include "polybubble/taylor.hpp"

namespace pb {

// Radial form of the geometer's Laplacian Delta = -div(grad .) acting on a
// Taylor series about r0. Each application shortens the series by two.
//
// sector 0 is a plain radial function f(r); sector 1 is the radial profile of
// f(r) * (first spherical harmonic), which picks up the angular eigenvalue
// (n-1) of S^{n-1}:
//   euclid, sector 0:   -f'' - (n-1)/r f'
//   euclid, sector 1:   -f'' - (n-1)/r f' + (n-1)/r^2 f
//   sphere, sector 0:   -f'' - (n-1) cot(r) f'
//   sphere, sector 1:   -f'' - (n-1) cot(r) f' + (n-1)/sin^2(r) f
//
// At r0 == 0 the apparent singularities cancel against the parity of f
// (even for sector 0, odd for sector 1) and the limit is taken termwise.
Taylor radial_laplacian_euclid(const Taylor& f, int n, double r0, int sector);
Taylor radial_laplacian_sphere(const Taylor& f, int n, double r0, int sector);

// m-fold application.
Taylor radial_laplacian_euclid_pow(Taylor f, int n, double r0, int sector, int m);
Taylor radial_laplacian_sphere_pow(Taylor f, int n, double r0, int sector, int m);

// --- x-variable form, x = r^2. ---
//
// For f = A(x) (even) the radial Laplacians act on A as polynomial-coefficient
// operators with no 1/r terms; likewise for f = r A(x) (odd, first harmonic).
// On the sphere the trigonometric factors enter through the regular series
//   chat(x) = (r cot r - 1)/x,   shat(x) = ((r/sin r)^2 - 1)/x,
// both analytic on |x| < pi^2.

// Series of chat/shat about x0 (valid for x0 in [0, ~6]).
Taylor chat_series(double x0, int len);
Taylor shat_series(double x0, int len);

// One application of the radial Laplacian in x-form; A is the even core about
// x0 and the result is the even core of Delta f (same parity convention).
Taylor xlap_step(const Taylor& A, Geom g, int n, int sector, double x0);
Taylor xlap_pow(Taylor A, Geom g, int n, int sector, double x0, int m);

// Values (and radial derivatives) of Delta^m f at r for all m = 0..m_max in
// one jet evaluation.
std::vector<LapValue> lap_values(const RadialJet& f, Geom g, int n, int sector, double r,
                                 int m_max);

} // namespace pb
