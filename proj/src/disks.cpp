#include "hypend/disks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypend {

OrientedDisk::OrientedDisk(const MinkowskiVec& pole, double tol) {
  const double n2 = minkowski_norm2(pole);
  const double scale = std::max(1.0, pole.squaredNorm());
  if (!(std::abs(n2 - 1.0) <= tol * scale)) {
    std::ostringstream os;
    os << "de Sitter pole must be unit spacelike, <N,N> = " << n2;
    throw GeometryError(os.str());
  }
  pole_ = pole / std::sqrt(n2);
}

bool OrientedDisk::is_half_plane(double tol) const {
  return std::abs(pole_[2] + pole_[3]) <= tol * std::max(1.0, pole_.cwiseAbs().maxCoeff());
}

OrientedDisk disk_from_circle(Complex center, double radius, CircleSide side) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw GeometryError("circle radius must be positive");
  const double a = std::norm(center) - radius * radius;
  const double s = (side == CircleSide::interior ? 1.0 : -1.0) / radius;
  const MinkowskiVec N(-center.real(), -center.imag(), 0.5 * (a - 1.0), -0.5 * (a + 1.0));
  return OrientedDisk(s * N);
}

OrientedDisk disk_from_line(double a, double b, double c, bool positive_side) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0)) throw GeometryError("degenerate line (a, b) = 0");
  const double s = (positive_side ? 1.0 : -1.0) / n;
  return OrientedDisk(MinkowskiVec(-a * s, -b * s, -c * s, c * s));
}

CircleDescription describe(const OrientedDisk& D, double tol) {
  const MinkowskiVec& N = D.pole();
  CircleDescription out;
  const double k = N[2] + N[3];
  if (D.is_half_plane(tol)) {
    out.is_line = true;
    // <l(z), N> = 2 (x n1 + y n2) + (n3 - n4) - |z|^2 (n3 + n4); interior where negative.
    out.line = Eigen::Vector3d(-N[0], -N[1], -0.5 * (N[2] - N[3]));
    out.line /= out.line.head<2>().norm();
    return out;
  }
  // Interior pole: k = -1/rho; exterior pole: k = +1/rho.
  out.radius = 1.0 / std::abs(k);
  out.side = k < 0.0 ? CircleSide::interior : CircleSide::exterior;
  out.center = Complex(N[0], N[1]) / k;
  return out;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::interior: return "interior";
    case Membership::boundary: return "boundary";
    case Membership::exterior: return "exterior";
  }
  return "?";
}

double disk_level(const OrientedDisk& D, const IdealPoint& z) { return minkowski_inner(ideal_lift_unit(z), D.pole()); }

Membership disk_contains(const OrientedDisk& D, const IdealPoint& z, double band) {
  const double v = disk_level(D, z);
  if (v < -band) return Membership::interior;
  if (v > band) return Membership::exterior;
  return Membership::boundary;
}

std::string to_string(DiskRelation r) {
  switch (r) {
    case DiskRelation::overlap: return "overlap";
    case DiskRelation::tangent: return "tangent";
    case DiskRelation::nested: return "nested";
    case DiskRelation::disjoint: return "disjoint";
    case DiskRelation::covering: return "covering";
    case DiskRelation::equal: return "equal";
    case DiskRelation::opposite: return "opposite";
  }
  return "?";
}

DiskRelation disk_relation(const OrientedDisk& D0, const OrientedDisk& D1, double band) {
  const MinkowskiVec& N0 = D0.pole();
  const MinkowskiVec& N1 = D1.pole();
  const double c = minkowski_inner(N0, N1);
  if (std::abs(c) < 1.0 - band) return DiskRelation::overlap;
  if (std::abs(c - 1.0) <= band) {
    if ((N0 - N1).cwiseAbs().maxCoeff() <= 1e-8 * std::max(1.0, N0.cwiseAbs().maxCoeff()))
      return DiskRelation::equal;
    return DiskRelation::tangent;
  }
  if (std::abs(c + 1.0) <= band) {
    if ((N0 + N1).cwiseAbs().maxCoeff() <= 1e-8 * std::max(1.0, N0.cwiseAbs().maxCoeff()))
      return DiskRelation::opposite;
    return DiskRelation::tangent;
  }
  if (c > 1.0) return DiskRelation::nested;
  // c < -1: the boundary planes are ultraparallel. N1 - c N0 is timelike and
  // lies on the plane of D0; it is future pointing exactly when that plane sits
  // inside the half-space of D1, i.e. when the disks cover the sphere.
  return (N1 - c * N0)[3] > 0.0 ? DiskRelation::covering : DiskRelation::disjoint;
}

OrientedDisk disk_geodesic_arc(const OrientedDisk& D0, const OrientedDisk& D1, double s) {
  if (disk_relation(D0, D1) != DiskRelation::overlap) throw GeometryError("geodesic arc requires overlapping disks");
  const double c = std::clamp(minkowski_inner(D0.pole(), D1.pole()), -1.0, 1.0);
  const double theta = std::acos(c);
  const double st = std::sin(theta);
  const MinkowskiVec N = (std::sin((1.0 - s) * theta) * D0.pole() + std::sin(s * theta) * D1.pole()) / st;
  return OrientedDisk(N, 1e-8);
}

double disk_area_form(const OrientedDisk& D, const IdealPoint& z) {
  const double v = minkowski_inner(ideal_lift(z), D.pole());
  if (!(v < 0.0)) throw GeometryError("area form requested at a point not interior to the disk");
  return 4.0 / (v * v);
}

double euclidean_disk_area_form(double R, double r) {
  if (!(R > 0.0) || !(r >= 0.0) || !(r < R)) throw GeometryError("point not interior to the Euclidean disk");
  const double a = R - r;
  const double b = R + r;
  return 4.0 * R * R / (a * a * b * b);
}

namespace {

// Future timelike unit vector orthogonal to N, closest to the basepoint.
MinkowskiVec orthogonal_timelike(const MinkowskiVec& N) {
  const MinkowskiVec T(0, 0, 0, 1);
  const double tn = minkowski_inner(T, N);
  const MinkowskiVec P = T - tn * N;
  return P / std::sqrt(1.0 + tn * tn);
}

}  // namespace

IdealPoint disk_interior_point(const OrientedDisk& D) {
  return ideal_point_of_null(orthogonal_timelike(D.pole()) - D.pole());
}

IdealPoint disk_exterior_point(const OrientedDisk& D) {
  return ideal_point_of_null(orthogonal_timelike(D.pole()) + D.pole());
}

MobiusMap disk_uniformizer(const OrientedDisk& D) {
  const CircleDescription c = describe(D);
  if (c.is_line) {
    // {a x + b y + c > 0}: z = n ((1 + w)/(1 - w) - c/s) with n = (a + ib)/s.
    const double s = std::hypot(c.line[0], c.line[1]);
    const Complex n(c.line[0] / s, c.line[1] / s);
    const MobiusMap cayley(1.0, 1.0, -1.0, 1.0);
    return MobiusMap::translation(-n * c.line[2] / s) * MobiusMap::scaling(n) * cayley;
  }
  if (c.side == CircleSide::interior) return MobiusMap(c.radius, c.center, 0.0, 1.0);
  return MobiusMap(c.center, c.radius, 1.0, 0.0);
}

double disk_area_form_transported(const OrientedDisk& D, const IdealPoint& z) {
  if (disk_level(D, z) >= 0.0) throw GeometryError("area form requested at a point not interior to the disk");
  const MobiusMap n = disk_uniformizer(D).inverse();
  const IdealPoint w = n(z);
  if (w.is_infinite()) throw NumericError("transport sent an interior point to infinity");
  const double r = std::abs(w.value());
  if (!(r < 1.0)) throw NumericError("transport left the unit disk");
  return euclidean_disk_area_form(1.0, r) * std::norm(n.chart_derivative(z));
}

double halfspace_signed_distance(const OrientedDisk& D, const HPoint& x) {
  return std::asinh(-minkowski_inner(x.vec(), D.pole()));
}

bool in_shrunk_halfspace(const OrientedDisk& D, const HPoint& x, double r) {
  return halfspace_signed_distance(D, x) >= r;
}

}  // namespace hypend
