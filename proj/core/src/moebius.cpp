#include "cxhyp/moebius.hpp"

namespace cxhyp {

DiscIsometry map_two_points(const std::complex<double>& p, const std::complex<double>& q,
                            const std::complex<double>& p2, const std::complex<double>& q2) {
  const auto center = [](const std::complex<double>& u,
                         const std::complex<double>& v) -> DiscIsometry {
    // u -> 0, v -> positive real axis.
    const DiscIsometry t = DiscIsometry::translate_to(u).inverse();
    const std::complex<double> img = t.apply(v);
    return compose(DiscIsometry::rotation(-std::arg(img)), t);
  };
  const DiscIsometry f = center(p, q);
  const DiscIsometry g = center(p2, q2);
  const double ra = std::abs(f.apply(q));
  const double rb = std::abs(g.apply(q2));
  if (std::abs(ra - rb) > 1e-9 * (1.0 + std::abs(ra)))
    throw ParameterOutOfRange("map_two_points: point pairs are not equidistant");
  return compose(g.inverse(), f);
}

} // namespace cxhyp
