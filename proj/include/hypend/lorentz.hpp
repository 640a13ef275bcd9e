#pragma once

#include <Eigen/Core>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace hypend {

using Complex = std::complex<double>;

/// Raised when an input lies outside the domain of an operation
/// (non-unit tangent, point outside a model, critical point, ...).
class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a numerical procedure fails to meet its tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};


// ---------------------------------------------------------------------------
// R^{3,1}
// ---------------------------------------------------------------------------

/// A vector in R^{3,1}; the last component is the timelike one.
using MinkowskiVec = Eigen::Vector4d;
using LorentzMatrix = Eigen::Matrix4d;

/// u1 v1 + u2 v2 + u3 v3 - u4 v4
inline double minkowski_inner(const MinkowskiVec& u, const MinkowskiVec& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] - u[3] * v[3];
}

inline double minkowski_norm2(const MinkowskiVec& v) { return minkowski_inner(v, v); }

/// Point of the hyperboloid model: <v,v> = -1, v4 > 0.
class HPoint {
 public:
  /// Checks the hyperboloid constraint (relative to the size of v) and
  /// reprojects onto the sheet.
  explicit HPoint(const MinkowskiVec& v, double tol = 1e-10);
  /// The basepoint (0, 0, 0, 1).
  HPoint() : v_(0.0, 0.0, 0.0, 1.0) {}

  static HPoint basepoint() { return HPoint(); }
  /// Normalizes any future timelike vector without validation of its norm.
  static HPoint from_timelike(const MinkowskiVec& v);
  /// x cosh t + v sinh t for a unit tangent v at x, kept as computed.
  static HPoint on_geodesic(const HPoint& x, const MinkowskiVec& v, double t);

  const MinkowskiVec& vec() const { return v_; }
  double operator[](int i) const { return v_[i]; }

 private:
  struct Unchecked {};
  HPoint(const MinkowskiVec& v, Unchecked) : v_(v) {}
  MinkowskiVec v_;
};

/// A point of the Riemann sphere: a finite complex number or infinity.
class IdealPoint {
 public:
  IdealPoint() = default;
  IdealPoint(Complex z) : z_(z) {}  // NOLINT: implicit on purpose, finite points are the common case
  IdealPoint(double re, double im = 0.0) : z_(Complex(re, im)) {}

  static IdealPoint infinity() {
    IdealPoint p;
    p.z_.reset();
    return p;
  }

  bool is_infinite() const { return !z_.has_value(); }
  bool is_finite() const { return z_.has_value(); }
  /// Throws GeometryError at infinity.
  Complex value() const;

  std::string to_string() const;

 private:
  std::optional<Complex> z_ = Complex(0.0, 0.0);
};

/// Chordal distance on the unit sphere (bounded by 2).
double chordal_distance(const IdealPoint& a, const IdealPoint& b);

/// Null lift: (2a, 2b, 1-|z|^2, 1+|z|^2) for z = a+ib; (0,0,-1,1) at infinity.
MinkowskiVec ideal_lift(const IdealPoint& z);
/// Null lift scaled so the last component is 1 (a point of the unit sphere).
MinkowskiVec ideal_lift_unit(const IdealPoint& z);
/// Recovers the ideal point of a future null (or nearly null) vector, up to
/// positive scaling. Throws GeometryError on the zero vector.
IdealPoint ideal_point_of_null(const MinkowskiVec& v, double tol = 1e-13);

double hyperbolic_distance(const HPoint& x, const HPoint& y);

/// Unit-speed geodesic x cosh t + v sinh t. Requires <x,v> = 0 and <v,v> = 1.
HPoint geodesic_point(const HPoint& x, const MinkowskiVec& v, double t, double tol = 1e-10);
/// Ideal endpoint of the geodesic ray from x with unit initial velocity v.
IdealPoint horizon(const HPoint& x, const MinkowskiVec& v, double tol = 1e-10);
/// Unit tangent at x pointing toward y (y != x).
MinkowskiVec unit_tangent_toward(const HPoint& x, const HPoint& y);
/// Projects w onto the tangent space at x and normalizes. Throws when the
/// projection vanishes.
MinkowskiVec tangent_unit(const HPoint& x, const MinkowskiVec& w);
void check_unit_tangent(const HPoint& x, const MinkowskiVec& v, double tol);

// ---------------------------------------------------------------------------
// Moebius maps
// ---------------------------------------------------------------------------

/// z -> (a z + b)/(c z + d), stored with ad - bc = 1.
class MobiusMap {
 public:
  /// Rescales to unit determinant; throws GeometryError when ad - bc = 0.
  MobiusMap(Complex a, Complex b, Complex c, Complex d);

  static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
  /// z -> z + w
  static MobiusMap translation(Complex w) { return {1.0, w, 0.0, 1.0}; }
  /// z -> lambda z
  static MobiusMap scaling(Complex lambda);
  /// A map with 0 -> p, infinity -> q (p != q).
  static MobiusMap sending_zero_infinity_to(const IdealPoint& p, const IdealPoint& q);
  /// z -> 1/(z - x) for finite x, identity for x = infinity: sends x to infinity.
  static MobiusMap sending_to_infinity(const IdealPoint& x);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  IdealPoint operator()(const IdealPoint& z) const;
  MobiusMap operator*(const MobiusMap& other) const;  // composition: (this o other)
  MobiusMap inverse() const { return {d_, -b_, -c_, a_}; }

  /// Derivative of the map in the standard charts at z and at its image: the
  /// identity chart at finite points, w = 1/z at infinity.
  Complex chart_derivative(const IdealPoint& z) const;

 private:
  Complex a_, b_, c_, d_;
};

/// The element of SO_0(3,1) inducing m on the null cone: ideal_lift(m(z)) is a
/// positive multiple of L ideal_lift(z).
LorentzMatrix mobius_lift(const MobiusMap& m);

/// Applies a Lorentz transformation to a point of the hyperboloid.
HPoint apply(const LorentzMatrix& L, const HPoint& x);

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

enum class Model { hyperboloid, klein_ball, upper_half_space };

Model parse_model(const std::string& name);
std::string model_name(Model m);

/// Upper half-space point: horizontal coordinate w and height h > 0.
/// The vertical axis over 0 is the geodesic from 0 to infinity through the
/// basepoint, which sits at height 1.
struct UhsPoint {
  Complex w;
  double h;
};

HPoint from_uhs(const UhsPoint& p);
UhsPoint to_uhs(const HPoint& x);
HPoint from_klein(const Eigen::Vector3d& k);
Eigen::Vector3d to_klein(const HPoint& x);

/// Generic conversion; 3-component models pad the result with a trailing 0.
/// Throws GeometryError for points outside the source model's domain.
Eigen::Vector4d model_convert(const Eigen::Vector4d& p, Model from, Model to);

}  // namespace hypend
