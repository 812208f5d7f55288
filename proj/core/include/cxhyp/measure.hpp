#pragma once

#include <cstdint>

namespace cxhyp {

// Wedge over a disc of hyperbolic radius s: normal-disc sectors of hyperbolic
// radius eps and angle psi, swept over the anchor disc.
struct WedgeParams {
  double s;   // anchor disc radius
  double eps; // width
  double psi; // sector angle in (0, 2 pi]

  WedgeParams(double s_, double eps_, double psi_);
};

// Area of a disc of radius r in a complex line: 4 pi sinh^2(r/2).
double disc_area(double r);

// Area of the disc of half the projection radius: 4 pi sinh^2(s(d)/4) = 4 pi / (e^d - 1).
double half_projection_disc_area(double d);

// Volume of the eps-tube over a region of the given area in a complex line:
// 2 pi (cosh^4(eps/2) - 1) * area.
double tube_volume(double area, double eps);

// psi (cosh^4(eps/2) - 1) * disc_area(s).
double wedge_volume(const WedgeParams& w);

// cosh^4(x) - 1 without cancellation, = sinh^2(x) (cosh^2(x) + 1).
double cosh4_minus_1(double x);

struct McEstimate {
  double estimate;
  double std_error;
  std::uint64_t samples;
  std::uint64_t seed;
};

// Monte Carlo integral of the ball volume form 16 r / (1 - r^2 - |z2|^2)^3
// over the wedge region |z2| <= tanh(s/2), |z1| <= sqrt(1-|z2|^2) tanh(eps/2),
// |Arg z1| <= psi/2. Deterministic given the seed, independent of `threads`.
// Requires samples >= 10^4.
McEstimate mc_wedge_volume(const WedgeParams& w, std::uint64_t samples, std::uint64_t seed,
                           unsigned threads = 1);

} // namespace cxhyp
