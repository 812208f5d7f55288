#pragma once

#include <utility>

namespace cxhyp {

// Area/Euler-characteristic carrier for a closed hyperbolic surface. Exactly
// one of the two is primary; the other is derived through Gauss-Bonnet.
struct SurfaceData {
  static SurfaceData from_chi(long long chi);
  static SurfaceData from_area(double area);

  double area() const { return area_; }
  bool has_chi() const { return has_chi_; }
  long long chi() const { return chi_; }

 private:
  double area_ = 0.0;
  long long chi_ = 0;
  bool has_chi_ = false;
};

// Gauss-Bonnet: area of a closed hyperbolic surface of Euler characteristic chi.
double gauss_bonnet_area(long long chi);

// Collar width c(A) = (1/4) log(2/A + 1); strictly decreasing in A.
double collar_width_area(double area);

// c(|chi|) = (1/4) log(1/(pi |chi|) + 1).
double collar_width_chi(long long chi);

// Upper bound (1 + tanh(d/2))/2 on cos(psi) for small-displacement stabilizer
// elements relative to a pair of lines a distance d apart.
double holonomy_cos_bound(double d);

// Width of disjoint tubes around two surfaces: (1/8) log(2/max(A1,A2) + 1).
double two_surface_width_area(double a1, double a2);
double two_surface_width_chi(long long chi1, long long chi2);

// Volume lower bound for n pairwise-disjoint surfaces of area at most A:
// 2 pi n A [cosh^4((1/16) log(2/A + 1)) - 1].
double volume_lower_bound_area(long long n, double area);
// Chi form: 4 pi^2 n |chi| [cosh^4((1/16) log(1/(pi |chi|) + 1)) - 1].
double volume_lower_bound(long long n, long long chi);

// First-eigenvalue upper bound vol(N) / (c^2 (vol(X) - vol(N))).
double eigenvalue_bound_general(double vol_x, double vol_n, double c);

// The explicit form with c = collar_width_chi(chi) and vol(N) the tube volume
// over area 2 pi |chi|.
double eigenvalue_bound_explicit(double vol_x, long long chi);

// Bounds on the optimal tube width for surfaces of Euler characteristic chi
// (even, <= -2): lower = collar width, upper = s(arccosh(cot((pi/2)/(|chi|+2)))).
std::pair<double, double> tube_function_bounds(long long chi);

struct TubeReport {
  double width;
  double volume_lower_bound;
  long long n;
  long long chi;
};

TubeReport tube_report(long long n, long long chi);

} // namespace cxhyp
