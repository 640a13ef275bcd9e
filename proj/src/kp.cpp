#include "hypend/kp.hpp"

#include "hypend/min_circle.hpp"

#include <cmath>

namespace hypend {

FiniteComplementDomain::FiniteComplementDomain(std::vector<IdealPoint> complement, double tol)
    : complement_(std::move(complement)) {
  for (std::size_t i = 0; i < complement_.size(); ++i)
    for (std::size_t j = i + 1; j < complement_.size(); ++j)
      if (chordal_distance(complement_[i], complement_[j]) <= tol)
        throw GeometryError("complement points must be pairwise distinct: " + complement_[i].to_string());
}

bool FiniteComplementDomain::excludes(const IdealPoint& x, double tol) const {
  for (const IdealPoint& p : complement_)
    if (chordal_distance(p, x) <= tol) return true;
  return false;
}

FiniteComplementDomain FiniteComplementDomain::with_added(const std::vector<IdealPoint>& extra) const {
  std::vector<IdealPoint> pts = complement_;
  pts.insert(pts.end(), extra.begin(), extra.end());
  return FiniteComplementDomain(std::move(pts));
}

FiniteComplementDomain FiniteComplementDomain::transformed(const MobiusMap& m) const {
  std::vector<IdealPoint> pts;
  pts.reserve(complement_.size());
  for (const IdealPoint& p : complement_) pts.push_back(m(p));
  return FiniteComplementDomain(std::move(pts));
}

std::string to_string(ConformalType t) {
  switch (t) {
    case ConformalType::elliptic: return "elliptic";
    case ConformalType::parabolic: return "parabolic";
    case ConformalType::hyperbolic: return "hyperbolic";
  }
  return "?";
}

ConformalType kp_classify(const FiniteComplementDomain& dom) {
  if (dom.size() == 0) return ConformalType::elliptic;
  if (dom.size() == 1) return ConformalType::parabolic;
  return ConformalType::hyperbolic;
}

namespace {

struct NormalizedMec {
  MobiusMap to_infinity;  // x -> infinity
  EnclosingCircle circle;
};

// After sending x to infinity, disks containing x and avoiding P are the
// exteriors of closed disks containing n(P); the density at infinity of the
// exterior of a radius-rho disk is 4 rho^2 and the chart derivative of n at x
// has modulus one.
NormalizedMec normalized_mec(const FiniteComplementDomain& dom, const IdealPoint& x, const KpOptions& opts) {
  if (dom.excludes(x)) throw GeometryError("query point " + x.to_string() + " lies in the complement");
  const MobiusMap n = MobiusMap::sending_to_infinity(x);
  std::vector<Complex> image;
  image.reserve(dom.size());
  for (const IdealPoint& p : dom.complement()) image.push_back(n(p).value());
  return {n, min_enclosing_circle(image, opts.seed)};
}

}  // namespace

double kp_form(const FiniteComplementDomain& dom, const IdealPoint& x, const KpOptions& opts) {
  if (dom.excludes(x)) throw GeometryError("query point " + x.to_string() + " lies in the complement");
  if (dom.size() <= 1) return 0.0;
  const NormalizedMec mec = normalized_mec(dom, x, opts);
  const double rho = mec.circle.radius;
  return 4.0 * rho * rho * std::norm(mec.to_infinity.chart_derivative(x));
}

MaxDisk kp_max_disk(const FiniteComplementDomain& dom, const IdealPoint& x, const KpOptions& opts) {
  if (kp_classify(dom) != ConformalType::hyperbolic)
    throw GeometryError("maximal disks exist only on hyperbolic domains (|P| >= 2)");
  const NormalizedMec mec = normalized_mec(dom, x, opts);
  const OrientedDisk exterior = disk_from_circle(mec.circle.center, mec.circle.radius, CircleSide::exterior);
  const OrientedDisk disk = exterior.transformed(mobius_lift(mec.to_infinity.inverse()));
  const double rho = mec.circle.radius;
  return {disk, mec.circle.support, 4.0 * rho * rho * std::norm(mec.to_infinity.chart_derivative(x))};
}

}  // namespace hypend
