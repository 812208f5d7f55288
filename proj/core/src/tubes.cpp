#include "cxhyp/tubes.hpp"

#include <algorithm>
#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/line.hpp"
#include "cxhyp/measure.hpp"

namespace cxhyp {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
} // namespace

SurfaceData SurfaceData::from_chi(long long chi) {
  SurfaceData s;
  if (chi >= 0) throw NonNegativeChi("SurfaceData: chi must be negative");
  s.chi_ = chi;
  s.has_chi_ = true;
  s.area_ = gauss_bonnet_area(chi);
  return s;
}

SurfaceData SurfaceData::from_area(double area) {
  SurfaceData s;
  if (!(area > 0.0)) throw NonPositiveArea("SurfaceData: area must be positive");
  s.area_ = area;
  return s;
}

double gauss_bonnet_area(long long chi) {
  if (chi >= 0) throw NonNegativeChi("gauss_bonnet_area: chi must be negative");
  return 2.0 * kPi * static_cast<double>(-chi);
}

double collar_width_area(double area) {
  if (!(area > 0.0)) throw NonPositiveArea("collar_width_area: area must be positive");
  return 0.25 * std::log1p(2.0 / area);
}

double collar_width_chi(long long chi) {
  if (chi >= 0) throw NonNegativeChi("collar_width_chi: chi must be negative");
  return 0.25 * std::log1p(1.0 / (kPi * static_cast<double>(-chi)));
}

double holonomy_cos_bound(double d) {
  if (!(d > 0.0)) throw NonPositiveDistance("holonomy_cos_bound: requires d > 0");
  return 0.5 * (1.0 + std::tanh(0.5 * d));
}

double two_surface_width_area(double a1, double a2) {
  if (!(a1 > 0.0) || !(a2 > 0.0))
    throw NonPositiveArea("two_surface_width_area: areas must be positive");
  return 0.125 * std::log1p(2.0 / std::max(a1, a2));
}

double two_surface_width_chi(long long chi1, long long chi2) {
  if (chi1 >= 0 || chi2 >= 0)
    throw NonNegativeChi("two_surface_width_chi: chi must be negative");
  const double m = static_cast<double>(std::max(-chi1, -chi2));
  return 0.125 * std::log1p(1.0 / (kPi * m));
}

double volume_lower_bound_area(long long n, double area) {
  if (n < 1) throw ParameterOutOfRange("volume_lower_bound_area: n must be >= 1");
  if (!(area > 0.0)) throw NonPositiveArea("volume_lower_bound_area: area must be positive");
  const double w = 0.0625 * std::log1p(2.0 / area); // (1/16) log(2/A + 1)
  return 2.0 * kPi * static_cast<double>(n) * area * cosh4_minus_1(w);
}

double volume_lower_bound(long long n, long long chi) {
  if (n < 1) throw ParameterOutOfRange("volume_lower_bound: n must be >= 1");
  if (chi >= 0) throw NonNegativeChi("volume_lower_bound: chi must be negative");
  const double ac = static_cast<double>(-chi);
  const double w = 0.0625 * std::log1p(1.0 / (kPi * ac));
  return 4.0 * kPi * kPi * static_cast<double>(n) * ac * cosh4_minus_1(w);
}

double eigenvalue_bound_general(double vol_x, double vol_n, double c) {
  if (!(vol_n > 0.0) || !(c > 0.0))
    throw ParameterOutOfRange("eigenvalue_bound_general: vol_n and c must be positive");
  if (!(vol_x > vol_n))
    throw TubeExceedsManifold("eigenvalue_bound_general: tube volume reaches vol(X)");
  return vol_n / (c * c * (vol_x - vol_n));
}

double eigenvalue_bound_explicit(double vol_x, long long chi) {
  if (chi >= 0) throw NonNegativeChi("eigenvalue_bound_explicit: chi must be negative");
  const double c = collar_width_chi(chi);
  const double vol_n = tube_volume(gauss_bonnet_area(chi), c);
  return eigenvalue_bound_general(vol_x, vol_n, c);
}

std::pair<double, double> tube_function_bounds(long long chi) {
  if (chi > -2 || (chi % 2) != 0)
    throw InvalidChi("tube_function_bounds: chi must be an even integer <= -2 "
                     "(closed orientable surface of genus |chi|/2 + 1)");
  const double ac = static_cast<double>(-chi);
  const double lower = collar_width_chi(chi);
  const double half_angle = 0.5 * kPi / (ac + 2.0);
  const double upper = s_function(std::acosh(1.0 / std::tan(half_angle)));
  return {lower, upper};
}

TubeReport tube_report(long long n, long long chi) {
  return {collar_width_chi(chi), volume_lower_bound(n, chi), n, chi};
}

} // namespace cxhyp
