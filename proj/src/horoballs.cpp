#include "hypend/horoballs.hpp"

#include <cmath>

namespace hypend {

double Horoball::curvature() const {
  const double lambda = lift_[3] / ideal_lift(centre_)[3];
  return 4.0 * lambda * lambda;
}

Horoball Horoball::transformed(const MobiusMap& m) const { return Horoball(m(centre_), mobius_lift(m) * lift_); }

Horoball horoball_make(const IdealPoint& centre, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw GeometryError("asymptotic curvature must be positive");
  return Horoball(centre, 0.5 * std::sqrt(omega) * ideal_lift(centre));
}

double horoball_level(const Horoball& B, const HPoint& x) { return minkowski_inner(x.vec(), B.scaled_lift()) + 1.0; }

Membership horoball_contains(const Horoball& B, const HPoint& x, double band) {
  const double v = horoball_level(B, x);
  if (v > band) return Membership::interior;
  if (v < -band) return Membership::exterior;
  return Membership::boundary;
}

Horoball inscribed_horoball(const OrientedDisk& D, const IdealPoint& y) {
  const MinkowskiVec l = ideal_lift(y);
  const double v = minkowski_inner(l, D.pole());
  if (!(v < 0.0) || disk_contains(D, y) != Membership::interior)
    throw GeometryError("horoball centre must be interior to the disk");
  // B = {<x, l> > <l, N>}: tangent to the plane {<x, N> = 0} from inside.
  return Horoball(y, l / -v);
}

}  // namespace hypend
