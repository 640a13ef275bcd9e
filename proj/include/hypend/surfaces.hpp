#pragma once

#include "hypend/disks.hpp"
#include "hypend/horoballs.hpp"
#include "hypend/jet.hpp"
#include "hypend/lorentz.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace hypend {

enum class SurfaceFamily { plane_equidistant, horosphere, cylinder };
std::string to_string(SurfaceFamily f);

enum class HoroOrientation { outward, inward };

/// Point, unit normal and their first partials at a parameter point.
struct SurfaceFrame {
  MinkowskiVec e, e1, e2;
  MinkowskiVec nu, nu1, nu2;
};

struct SurfaceData {
  Eigen::Matrix2d I, II, III;
  Eigen::Matrix2d A;
  double K = 0.0;
};

/// Closed-form immersed surfaces of H^3.
///
/// Parameters u = (u1, u2):
///  - plane_equidistant(D, r): u1 + i u2 is a point of D (standard chart);
///    the point sits at distance r from the plane over D, on the D side, and
///    the normal points toward D. The Gauss map is the identity.
///  - horosphere(B, o): u1 + i u2 is the horizontal coordinate of the upper
///    half-space picture with the centre of B sent to infinity.
///  - cylinder(a, b, r): u = (s, theta), cone coordinates around the axis from
///    a to b; with a = 0, b = inf the point has upper half-space height e^s.
///
/// transformed() and offset_by() keep the parametrization of the original
/// surface.
class ExplicitSurface {
 public:
  static ExplicitSurface plane_equidistant(const OrientedDisk& D, double r);
  static ExplicitSurface horosphere(const Horoball& B, HoroOrientation orientation = HoroOrientation::outward);
  static ExplicitSurface cylinder(const IdealPoint& a, const IdealPoint& b, double r);

  SurfaceFamily family() const { return family_; }
  /// Equidistance radius (plane_equidistant, cylinder), ignoring offsets.
  double radius() const { return r_; }
  /// Total normal offset applied so far.
  double offset() const { return offset_; }
  HoroOrientation orientation() const { return orientation_; }
  /// Moebius map applied after the normalized construction.
  const MobiusMap& post() const { return post_; }

  /// The ideal disk of a plane_equidistant surface, after post().
  OrientedDisk base_disk() const;
  /// Cylinder axis endpoints (after post()).
  IdealPoint axis_start() const { return post_(0.0); }
  IdealPoint axis_end() const { return post_(IdealPoint::infinity()); }
  /// Centre of a horosphere (after post()).
  IdealPoint horosphere_centre() const { return post_(IdealPoint::infinity()); }

  ExplicitSurface transformed(const MobiusMap& m) const;
  ExplicitSurface offset_by(double t) const;

  bool in_chart(const Eigen::Vector2d& u) const;
  /// Throws GeometryError outside the chart.
  SurfaceFrame frame(const Eigen::Vector2d& u) const;
  HPoint point(const Eigen::Vector2d& u) const;

 private:
  ExplicitSurface() = default;
  SurfaceFrame base_frame(const Eigen::Vector2d& u) const;

  SurfaceFamily family_ = SurfaceFamily::plane_equidistant;
  MinkowskiVec pole_ = MinkowskiVec::Zero();  // plane_equidistant, before post
  double r_ = 0.0;
  double height_ = 1.0;  // horosphere height in the normalized picture
  HoroOrientation orientation_ = HoroOrientation::outward;
  double offset_ = 0.0;
  MobiusMap post_ = MobiusMap::identity();
};

SurfaceData surface_forms(const ExplicitSurface& S, const Eigen::Vector2d& u);

/// Horizon of the unit normal at e(u).
IdealPoint surface_gauss_map(const ExplicitSurface& S, const Eigen::Vector2d& u);

struct NormalOffset {
  HPoint point;
  Eigen::Matrix2d I;
};
/// exp(t N_e(u)) and cosh^2 t I + 2 cosh t sinh t II + sinh^2 t III.
NormalOffset surface_normal_offset(const ExplicitSurface& S, double t, const Eigen::Vector2d& u);

enum class FlowMethod { closed_form, rk4 };

struct ShapeFlowResult {
  Eigen::Matrix2d A;
  double K = 0.0;
};

/// Evolves A' = Id - A^2. Throws GeometryError for a non-symmetric A0, an
/// eigenvalue <= -1, or t < 0.
ShapeFlowResult shape_flow(const Eigen::Matrix2d& A0, double t, FlowMethod method = FlowMethod::closed_form);

/// I + 2 II + III
Eigen::Matrix2d surface_horospherical_metric(const ExplicitSurface& S, const Eigen::Vector2d& u);

/// Round metric of the unit sphere pulled back through the Gauss map.
Eigen::Matrix2d surface_gauss_pullback(const ExplicitSurface& S, const Eigen::Vector2d& u);

/// lambda_max / lambda_min - 1 for the pulled-back round metric relative to
/// I + 2 II + III. Throws GeometryError when either form degenerates.
double conformality_defect(const ExplicitSurface& S, const Eigen::Vector2d& u);

/// Kulkarni-Pinkall density of the Gauss image at the Gauss point, in the
/// standard chart there.
double gauss_image_kp(const ExplicitSurface& S, const Eigen::Vector2d& u);

/// The Kulkarni-Pinkall metric of the Gauss image pulled back to the
/// parameter domain.
Eigen::Matrix2d gauss_image_kp_metric(const ExplicitSurface& S, const Eigen::Vector2d& u);

/// Schwarzian of the Gauss map in the family's conformal coordinate
/// (u1 + i u2, or s + i theta for cylinders), as a jet at u. Throws
/// GeometryError when the Gauss map is constant.
Jet surface_schwarzian(const ExplicitSurface& S, const Eigen::Vector2d& u, std::size_t order = 8);

/// n_radial x n_angular parameter points over the base disk of a
/// plane_equidistant surface, at unit-disk radii up to max_radius.
std::vector<Eigen::Vector2d> equidistant_grid(const ExplicitSurface& S, std::size_t n_radial = 10,
                                              std::size_t n_angular = 10, double max_radius = 0.9);

struct AprioriOptions {
  std::size_t test_disks = 16;
  std::uint64_t seed = 0x5eedULL;
  double tol = 1e-8;
};

struct AprioriSample {
  Eigen::Vector2d u;
  IdealPoint gauss;
  double curvature = 0.0;
  /// Distance to the plane over the whole Gauss image.
  double full_disk_distance = 0.0;
  /// max over test disks of d(e(x), boundary) - r.
  double halfspace_excess = 0.0;
  /// Level of e(x) in the horoball of the Kulkarni-Pinkall density at the
  /// Gauss point (non-negative inside).
  double horoball_level = 0.0;
};

struct AprioriReport {
  std::vector<AprioriSample> samples;
  bool curvature_ok = true;
  bool halfspace_ok = true;
  bool horoball_ok = true;
  double max_halfspace_excess = 0.0;
  double max_full_disk_gap = 0.0;
  double min_horoball_level = 0.0;
};

/// Checks the a priori estimates for a surface whose Gauss image is a disk
/// (plane_equidistant, possibly offset or transformed): K <= tanh^2 r, the
/// half-space bound d(e(x), boundary of H_D) <= r for the Gauss image and
/// random sub-disks containing the Gauss point, and containment in the
/// closed Kulkarni-Pinkall horoball. Throws GeometryError for other families
/// or a non-convex sample.
AprioriReport surface_apriori_check(const ExplicitSurface& S, const std::vector<Eigen::Vector2d>& samples, double r,
                                    const AprioriOptions& opts = {});

}  // namespace hypend
