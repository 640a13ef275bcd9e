#pragma once

#include "hypend/disks.hpp"
#include "hypend/lorentz.hpp"

namespace hypend {

/// Open horoball B = {x : <x, l_B> > -1} for a future null vector l_B.
///
/// Horoballs are parametrized by their centre y and asymptotic curvature
/// omega (an area density at y, in the standard chart at y). The scaled lift
/// is l_B = (sqrt(omega)/2) * ideal_lift(y). This calibration comes from the
/// upper half-space: {height > t} is B with l_B = t * ideal_lift(inf), while
/// the half-space exterior to the unit hemisphere scaled by t has area density
/// 4 t^2 at infinity in the w = 1/z chart. Larger omega means a smaller
/// horoball.
class Horoball {
 public:
  Horoball(const IdealPoint& centre, const MinkowskiVec& scaled_lift) : centre_(centre), lift_(scaled_lift) {}

  const IdealPoint& centre() const { return centre_; }
  const MinkowskiVec& scaled_lift() const { return lift_; }

  /// Asymptotic curvature in the standard chart at the centre.
  double curvature() const;
  /// Image under the Moebius map with lift L.
  Horoball transformed(const MobiusMap& m) const;

 private:
  IdealPoint centre_;
  MinkowskiVec lift_;
};

/// Throws GeometryError when omega <= 0.
Horoball horoball_make(const IdealPoint& centre, double omega);

/// Sign of <x, l_B> + 1 with a boundary band.
Membership horoball_contains(const Horoball& B, const HPoint& x, double band = 1e-10);
/// <x, l_B> + 1: positive inside.
double horoball_level(const Horoball& B, const HPoint& x);

/// The largest horoball centred at y inside the half-space over D; its
/// curvature equals disk_area_form(D, y). Throws unless y is interior to D.
Horoball inscribed_horoball(const OrientedDisk& D, const IdealPoint& y);

}  // namespace hypend
