// Offline high-precision oracle for the closed-form reference values frozen
// into the test suite. Evaluates every formula in 128-bit floats (~33
// significant decimal digits) and prints one `name = value` line each.
//
// Regenerate the frozen table with:
//   golden-oracle > tests/data/golden_values.txt

#include <quadmath.h>

#include <cstdio>

namespace {

void print(const char* name, __float128 v) {
  char buf[128];
  quadmath_snprintf(buf, sizeof buf, "%.33Qe", v);
  std::printf("%s = %s\n", name, buf);
}

__float128 s_function(__float128 d) { return 2.0 * asinhq(1.0 / sinhq(0.5 * d)); }

__float128 cosh4_minus_1(__float128 x) {
  const __float128 sh = sinhq(x);
  const __float128 ch = coshq(x);
  return sh * sh * (ch * ch + 1.0);
}

const __float128 kPi = 2.0 * asinq(1.0);

__float128 collar_width_chi(__float128 abs_chi) {
  return 0.25 * log1pq(1.0 / (kPi * abs_chi));
}

__float128 tube_volume(__float128 area, __float128 eps) {
  return 2.0 * kPi * cosh4_minus_1(0.5 * eps) * area;
}

} // namespace

int main() {
  const __float128 pi = kPi;

  print("bergman_origin_to_half", logq(3.0));
  print("bergman_origin_to_08", logq(9.0));
  print("s_of_1", s_function(1.0));
  print("s_fixed_point", 2.0 * asinhq(1.0));
  print("proj_radius_intersecting_pi_3", logq(3.0));
  print("collar_width_area_2", 0.25 * logq(2.0));
  print("two_surface_width_2_2", 0.125 * logq(2.0));
  print("collar_width_chi_m2", collar_width_chi(2.0));
  print("tube_volume_area1_eps1", tube_volume(1.0, 1.0));
  print("cosh4_minus_1_half", cosh4_minus_1(0.5));
  print("half_projection_disc_area_ln2", 4.0 * pi / expm1q(logq(2.0)));

  // Volume lower bound, n = 1, chi = -2.
  {
    const __float128 w = 0.0625 * log1pq(1.0 / (2.0 * pi));
    print("volume_lower_bound_1_m2", 8.0 * pi * pi * cosh4_minus_1(w));
  }

  // Explicit eigenvalue bound, vol(X) = 100, chi = -2.
  {
    const __float128 c = collar_width_chi(2.0);
    const __float128 vol_n = tube_volume(4.0 * pi, c);
    print("eigenvalue_bound_100_m2", vol_n / (c * c * (100.0 - vol_n)));
  }

  // Optimal tube bounds at chi = -2: cot(pi/8) = 1 + sqrt(2).
  print("tube_bounds_lower_m2", collar_width_chi(2.0));
  print("tube_bounds_upper_m2", s_function(acoshq(1.0 + sqrtq(2.0))));

  // Regular 4g-gon data, genus 2.
  print("polygon_apothem_g2", acoshq(1.0 + sqrtq(2.0)));
  print("polygon_circumradius_g2", acoshq((1.0 + sqrtq(2.0)) * (1.0 + sqrtq(2.0))));

  return 0;
}
