#pragma once

#include "hypend/disks.hpp"
#include "hypend/horoballs.hpp"
#include "hypend/kp.hpp"
#include "hypend/lorentz.hpp"

#include <optional>
#include <vector>

namespace hypend {

/// The hyperbolic end H^3 \ K over (C-hat \ P, z), where K is the hyperbolic
/// convex hull of the ideal set P. The end is never meshed: every query is an
/// optimization over de Sitter poles of half-spaces avoiding P.
class EndOverDomain {
 public:
  /// Requires |P| >= 2.
  explicit EndOverDomain(FiniteComplementDomain domain);

  const FiniteComplementDomain& domain() const { return domain_; }
  /// Null lifts of P scaled to unit last component.
  const std::vector<MinkowskiVec>& lifts() const { return lifts_; }

 private:
  FiniteComplementDomain domain_;
  std::vector<MinkowskiVec> lifts_;
};

/// The supporting half-space of K that realizes the distance from x.
struct SupportPlane {
  OrientedDisk disk;                // ideal boundary of the half-space; avoids P, contains pi_inf(x)
  std::vector<std::size_t> active;  // vertices of the face/edge carrying the foot point
  double height = 0.0;              // d(x, K)
  HPoint foot;                      // nearest point of K
};

/// KKT active-set solve over edges and faces of the hull. Empty when x lies
/// in K (up to rounding).
std::optional<SupportPlane> end_support(const EndOverDomain& E, const HPoint& x, double feas_tol = 1e-10);

/// d(x, K); zero on or inside the hull.
double end_height(const EndOverDomain& E, const HPoint& x);

struct EndProjection {
  HPoint foot;
  IdealPoint ideal;           // vertical line projection pi_inf(x)
  MinkowskiVec gradient;      // unit gradient of the height at x
  SupportPlane support;
};

/// Throws GeometryError when x lies in K.
EndProjection end_project(const EndOverDomain& E, const HPoint& x);

struct RaySample {
  double t = 0.0;
  HPoint point;
  double height = 0.0;
  double vertical_speed = 0.0;    // <gamma', grad h>
  double horizontal_speed = 0.0;  // norm of the component of gamma' orthogonal to grad h
};

struct RayTrace {
  std::vector<RaySample> samples;
  bool downward_start = false;  // traced anyway; no guarantee applies
};

/// Samples of the exact geodesic x cosh t + v sinh t at t = 0, dt, 2 dt, ...
/// up to t_max. Samples that enter K are reported with zero height.
RayTrace end_trace_geodesic(const EndOverDomain& E, const HPoint& x, const MinkowskiVec& v, double t_max, double dt);

struct HessianProbe {
  double value = 0.0;    // second central difference of h along the geodesic
  double height = 0.0;
  bool ridge = false;    // the active face changes across the stencil
};

/// Second central difference (h(g(eps)) - 2 h(x) + h(g(-eps)))/eps^2 along
/// the geodesic with initial velocity xi. Unless `diagnostic`, xi must be
/// horizontal (orthogonal to grad h within 1e-8) and eps in (0, 0.1].
HessianProbe end_hessian_probe(const EndOverDomain& E, const HPoint& x, const MinkowskiVec& xi, double eps,
                               bool diagnostic = false);

struct HoroballCheck {
  bool inside = false;
  double level = 0.0;  // <x, l_B> + 1, positive inside
  IdealPoint centre;
  double curvature = 0.0;
};

/// Whether x lies in the open horoball centred at pi_inf(x) with asymptotic
/// curvature kp_form(P, pi_inf(x)).
HoroballCheck end_horoball_check(const EndOverDomain& E, const HPoint& x);

}  // namespace hypend
