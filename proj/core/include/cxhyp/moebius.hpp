#pragma once

#include <cmath>
#include <complex>

#include "cxhyp/errors.hpp"

namespace cxhyp {

// Orientation-preserving isometry of the Poincare disc as an SU(1,1) matrix
// [[a, b], [conj b, conj a]] with |a|^2 - |b|^2 = 1, acting by
// z -> (a z + b) / (conj(b) z + conj(a)).
struct DiscIsometry {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};

  std::complex<double> apply(const std::complex<double>& z) const {
    return (a * z + b) / (std::conj(b) * z + std::conj(a));
  }

  DiscIsometry inverse() const { return {std::conj(a), -b}; }

  DiscIsometry normalized() const {
    const double det = std::norm(a) - std::norm(b);
    if (det <= 0.0) throw ParameterOutOfRange("DiscIsometry: determinant not positive");
    const double s = 1.0 / std::sqrt(det);
    return {s * a, s * b};
  }

  static DiscIsometry identity() { return {}; }

  static DiscIsometry rotation(double theta) {
    return {std::polar(1.0, 0.5 * theta), {0.0, 0.0}};
  }

  // Maps 0 to p.
  static DiscIsometry translate_to(const std::complex<double>& p) {
    const double s = 1.0 / std::sqrt(1.0 - std::norm(p));
    return {{s, 0.0}, s * p};
  }

  // Translation along the real axis, 0 -> tanh(length/2).
  static DiscIsometry axis_translation(double length) {
    return {{std::cosh(0.5 * length), 0.0}, {std::sinh(0.5 * length), 0.0}};
  }
};

inline DiscIsometry compose(const DiscIsometry& f, const DiscIsometry& g) {
  // Matrix product f * g; the SU(1,1) form is preserved.
  return DiscIsometry{f.a * g.a + f.b * std::conj(g.b), f.a * g.b + f.b * std::conj(g.a)}
      .normalized();
}

// The unique orientation-preserving isometry with p -> p2 and q -> q2.
// Requires rho(p, q) = rho(p2, q2).
DiscIsometry map_two_points(const std::complex<double>& p, const std::complex<double>& q,
                            const std::complex<double>& p2, const std::complex<double>& q2);

} // namespace cxhyp
