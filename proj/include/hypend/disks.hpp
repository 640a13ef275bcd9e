#pragma once

#include "hypend/lorentz.hpp"

#include <string>

namespace hypend {

/// An open disk of the Riemann sphere, stored as its de Sitter pole N.
/// Interior convention: z lies in the disk iff <ideal_lift(z), N> < 0; the
/// corresponding open half-space of H^3 is {x : <x, N> < 0}.
class OrientedDisk {
 public:
  /// Requires <N,N> = 1 within tol (then renormalizes).
  explicit OrientedDisk(const MinkowskiVec& pole, double tol = 1e-10);

  const MinkowskiVec& pole() const { return pole_; }
  OrientedDisk reversed() const { return OrientedDisk(-pole_); }
  /// Image under the Moebius map whose lift is L.
  OrientedDisk transformed(const LorentzMatrix& L) const { return OrientedDisk(L * pole_, 1e-8); }

  /// True when infinity lies on the boundary (the disk is a half-plane).
  bool is_half_plane(double tol = 1e-12) const;

 private:
  MinkowskiVec pole_;
};

enum class CircleSide { interior, exterior };

/// {|z - c| < r} (interior) or {|z - c| > r} including infinity (exterior).
OrientedDisk disk_from_circle(Complex center, double radius, CircleSide side = CircleSide::interior);
/// {a x + b y + c > 0} when positive_side, else {a x + b y + c < 0}.
OrientedDisk disk_from_line(double a, double b, double c, bool positive_side = true);

/// Euclidean description of the boundary circle; for half-planes `line`
/// holds (a, b, c) with interior {a x + b y + c > 0}.
struct CircleDescription {
  bool is_line = false;
  Complex center;
  double radius = 0.0;
  CircleSide side = CircleSide::interior;
  Eigen::Vector3d line = Eigen::Vector3d::Zero();
};
CircleDescription describe(const OrientedDisk& D, double tol = 1e-12);

enum class Membership { interior, boundary, exterior };
std::string to_string(Membership m);

/// Sign of <ideal_lift_unit(z), N> with a boundary band.
Membership disk_contains(const OrientedDisk& D, const IdealPoint& z, double band = 1e-10);
/// <ideal_lift_unit(z), N>: negative inside, zero on the boundary circle.
double disk_level(const OrientedDisk& D, const IdealPoint& z);

/// `covering` is the case D0 u D1 = whole sphere with non-crossing boundaries.
enum class DiskRelation { overlap, tangent, nested, disjoint, covering, equal, opposite };
std::string to_string(DiskRelation r);

DiskRelation disk_relation(const OrientedDisk& D0, const OrientedDisk& D1, double band = 1e-10);

/// Point of the shorter de Sitter geodesic arc between overlapping disks,
/// s in [0, 1]. Throws GeometryError for non-overlapping pairs.
OrientedDisk disk_geodesic_arc(const OrientedDisk& D0, const OrientedDisk& D1, double s);

/// Hyperbolic (curvature -1) area density of D at an interior point, in the
/// standard chart at z (w = 1/z when z is infinity). Equals 4 / <l(z), N>^2.
double disk_area_form(const OrientedDisk& D, const IdealPoint& z);

/// Closed form for a Euclidean disk of radius R whose center is at distance r
/// from the evaluation point: 4R^2 / ((R - r)^2 (R + r)^2).
double euclidean_disk_area_form(double R, double r);

/// The same density computed by moving D onto the unit disk with a Moebius
/// map and pulling the closed form back as a 2-form.
double disk_area_form_transported(const OrientedDisk& D, const IdealPoint& z);

/// A Moebius map sending the unit disk onto D.
MobiusMap disk_uniformizer(const OrientedDisk& D);

/// A point of the boundary circle's complement that is interior to D.
IdealPoint disk_interior_point(const OrientedDisk& D);
/// A point exterior to D.
IdealPoint disk_exterior_point(const OrientedDisk& D);

/// arcsinh(-<x, N>): signed distance to the boundary plane of the half-space
/// over D, positive inside.
double halfspace_signed_distance(const OrientedDisk& D, const HPoint& x);

/// Membership of x in the shrunk half-space {d(x, boundary) >= r}.
bool in_shrunk_halfspace(const OrientedDisk& D, const HPoint& x, double r);

}  // namespace hypend
