#pragma once

#include "hypend/disks.hpp"
#include "hypend/lorentz.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hypend {

/// The Moebius surface (C-hat minus P, z) for a finite set P of ideal points.
class FiniteComplementDomain {
 public:
  /// Throws GeometryError when two points of P coincide (chordal tolerance).
  explicit FiniteComplementDomain(std::vector<IdealPoint> complement, double tol = 1e-12);

  const std::vector<IdealPoint>& complement() const { return complement_; }
  std::size_t size() const { return complement_.size(); }
  /// True when x coincides with a point of P (chordal tolerance).
  bool excludes(const IdealPoint& x, double tol = 1e-12) const;
  /// Domain over P u extra.
  FiniteComplementDomain with_added(const std::vector<IdealPoint>& extra) const;
  FiniteComplementDomain transformed(const MobiusMap& m) const;

 private:
  std::vector<IdealPoint> complement_;
};

enum class ConformalType { elliptic, parabolic, hyperbolic };
std::string to_string(ConformalType t);

ConformalType kp_classify(const FiniteComplementDomain& dom);

struct KpOptions {
  std::uint64_t seed = 0x5eedULL;
};

/// Kulkarni-Pinkall form at x: the infimum over disks D avoiding P and
/// containing x of the hyperbolic area density of D at x, in the standard
/// chart at x. Zero when |P| <= 1. Throws GeometryError when x lies in P.
double kp_form(const FiniteComplementDomain& dom, const IdealPoint& x, const KpOptions& opts = {});

/// The disk realizing kp_form. Its boundary passes through the returned
/// support points of P. Throws GeometryError unless the domain is hyperbolic.
struct MaxDisk {
  OrientedDisk disk;
  std::vector<std::size_t> support;  // indices into the complement
  double form = 0.0;
};
MaxDisk kp_max_disk(const FiniteComplementDomain& dom, const IdealPoint& x, const KpOptions& opts = {});

}  // namespace hypend
