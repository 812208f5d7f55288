#include "cxhyp/bisector.hpp"

#include <cmath>
#include <functional>

#include "cxhyp/errors.hpp"
#include "cxhyp/tolerances.hpp"

namespace cxhyp {

namespace {

// Disc coordinates of the carrier: the chart where the carrier is {(0,w)}.
struct CarrierChart {
  Isometry mover;
  Complex xi1, xi2; // spine endpoints on the unit circle
};

CarrierChart carrier_chart(const Bisector& b) {
  CarrierChart c{normalize_line(b.carrier()), {}, {}};
  const BoundaryPoint a = apply_boundary(c.mover, b.spine_start());
  const BoundaryPoint e = apply_boundary(c.mover, b.spine_end());
  if (std::abs(a.z1) > 1e-6 || std::abs(e.z1) > 1e-6)
    throw ParameterOutOfRange("Bisector: spine endpoints do not lie on the carrier boundary");
  c.xi1 = a.z2 / std::abs(a.z2);
  c.xi2 = e.z2 / std::abs(e.z2);
  return c;
}

// Disc isometry sending the geodesic (xi1 -> xi2) to the oriented imaginary
// axis (-i -> +i).
DiscIsometry spine_to_axis(const Complex& xi1, const Complex& xi2) {
  const double denom = 1.0 + (xi1 * std::conj(xi2)).real();
  DiscIsometry t = DiscIsometry::identity();
  if (std::abs(denom) > 1e-12) {
    // Center of the Euclidean circle carrying the geodesic; the closest point
    // of the geodesic to 0 lies on the ray toward it.
    const Complex ce = (xi1 + xi2) / denom;
    const double ace = std::abs(ce);
    if (ace > 1.0 + 1e-14) {
      const double r = std::sqrt(ace * ace - 1.0);
      const Complex m = ce / ace * (ace - r);
      t = DiscIsometry::translate_to(m).inverse();
    }
  }
  const Complex img1 = t.apply(xi1);
  DiscIsometry g = compose(DiscIsometry::rotation(-1.5707963267948966 - std::arg(img1)), t);
  return g;
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters) {
  const double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? f1 : f2;
}

} // namespace

Bisector Bisector::from_spine(const ComplexLine& carrier, const BoundaryPoint& a,
                              const BoundaryPoint& b) {
  for (const BoundaryPoint* p : {&a, &b}) {
    if (!is_on_boundary(*p))
      throw ParameterOutOfRange("Bisector: spine endpoint is not on the sphere at infinity");
    const Complex pairing = hermitian_form(standard_lift(*p), carrier.polar());
    if (std::abs(pairing) > 1e3 * tol::null)
      throw ParameterOutOfRange("Bisector: spine endpoint is not an ideal point of the carrier");
  }
  Bisector bis(carrier, a, b);
  // Endpoints must be distinct directions.
  const CarrierChart chart = carrier_chart(bis);
  if (std::abs(chart.xi1 - chart.xi2) < 1e-9)
    throw ParameterOutOfRange("Bisector: spine endpoints coincide");
  return bis;
}

Bisector Bisector::reversed() const { return Bisector(carrier_, b_, a_); }

BisectorSide bisector_membership(const Bisector& b, const BallPoint& p) {
  const CarrierChart chart = carrier_chart(b);
  const BallPoint q = apply_point(chart.mover, p);
  const Complex w = q.z2; // carrier projection: drop the normal coordinate
  const DiscIsometry g = spine_to_axis(chart.xi1, chart.xi2);
  const Complex u = g.apply(w);
  const double sd = std::asinh(2.0 * u.real() / (1.0 - std::norm(u)));
  BisectorSide out;
  out.signed_distance = sd;
  out.on = std::abs(sd) <= tol::geo;
  out.side = out.on ? 0 : (sd > 0.0 ? +1 : -1);
  return out;
}

BallPoint spine_point(const Bisector& b, double tau) {
  const CarrierChart chart = carrier_chart(b);
  const DiscIsometry g = spine_to_axis(chart.xi1, chart.xi2);
  const Complex w = g.inverse().apply(Complex{0.0, std::tanh(0.5 * tau)});
  const BallPoint std_pt{Complex{0.0, 0.0}, w};
  return apply_point(chart.mover.inverse(), std_pt);
}

double spine_distance_to_line(const Bisector& b, const ComplexLine& l) {
  const auto dist = [&](double tau) {
    const BallPoint sp = spine_point(b, tau);
    return bergman_distance(sp, orthogonal_projection(l, sp));
  };
  // The distance is convex along the spine and grows at its ends.
  return golden_min(dist, -40.0, 40.0, 120);
}

double bisector_projection_radius(const Bisector& b, const ComplexLine& l) {
  const auto cls = classify_pair(b.carrier(), l);
  if (cls.kind != LinePairClass::Kind::Intersecting)
    throw NotInGeneralPosition(
        "bisector_projection_radius: carrier does not meet the line transversally");
  const double d = spine_distance_to_line(b, l);
  if (!(d > tol::geo))
    throw NotInGeneralPosition("bisector_projection_radius: spine touches the line");
  return s_function(d);
}

ComplexLine carrier_fiber(const ComplexLine& carrier, const BallPoint& q) {
  return ComplexLine::from_polar(polar_of_span(carrier.polar(), standard_lift(q)));
}

Bisector apply_bisector(const Isometry& g, const Bisector& b) {
  return Bisector::from_spine(apply_line(g, b.carrier()), apply_boundary(g, b.spine_start()),
                              apply_boundary(g, b.spine_end()));
}

} // namespace cxhyp
