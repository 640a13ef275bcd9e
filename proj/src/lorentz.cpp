#include "hypend/lorentz.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hypend {

HPoint::HPoint(const MinkowskiVec& v, double tol) {
  const double n2 = minkowski_norm2(v);
  const double scale = std::max(1.0, v[3] * v[3]);
  if (!(std::abs(n2 + 1.0) <= tol * scale) || !(v[3] > 0.0)) {
    std::ostringstream os;
    os << "not a point of the hyperboloid: <v,v> = " << n2 << ", v4 = " << v[3];
    throw GeometryError(os.str());
  }
  v_ = v / std::sqrt(-n2);
}

HPoint HPoint::from_timelike(const MinkowskiVec& v) {
  const double n2 = minkowski_norm2(v);
  if (!(n2 < 0.0) || !(v[3] > 0.0)) throw GeometryError("vector is not future timelike");
  return HPoint(v / std::sqrt(-n2), Unchecked{});
}

HPoint HPoint::on_geodesic(const HPoint& x, const MinkowskiVec& v, double t) {
  return HPoint(x.vec() * std::cosh(t) + v * std::sinh(t), Unchecked{});
}

Complex IdealPoint::value() const {
  if (!z_) throw GeometryError("ideal point is infinity");
  return *z_;
}

std::string IdealPoint::to_string() const {
  if (!z_) return "inf";
  std::ostringstream os;
  os << z_->real() << (z_->imag() < 0 ? "-" : "+") << std::abs(z_->imag()) << "i";
  return os.str();
}

double chordal_distance(const IdealPoint& a, const IdealPoint& b) {
  const MinkowskiVec u = ideal_lift_unit(a);
  const MinkowskiVec v = ideal_lift_unit(b);
  return (u.head<3>() - v.head<3>()).norm();
}

MinkowskiVec ideal_lift(const IdealPoint& z) {
  if (z.is_infinite()) return {0.0, 0.0, -1.0, 1.0};
  const Complex w = z.value();
  const double r2 = std::norm(w);
  return {2.0 * w.real(), 2.0 * w.imag(), 1.0 - r2, 1.0 + r2};
}

MinkowskiVec ideal_lift_unit(const IdealPoint& z) {
  const MinkowskiVec l = ideal_lift(z);
  return l / l[3];
}

IdealPoint ideal_point_of_null(const MinkowskiVec& v, double tol) {
  const double size = v.cwiseAbs().maxCoeff();
  if (!(size > 0.0)) throw GeometryError("zero vector has no ideal point");
  const double den = v[2] + v[3];
  if (std::abs(den) <= tol * size) return IdealPoint::infinity();
  return IdealPoint(Complex(v[0], v[1]) / den);
}

double hyperbolic_distance(const HPoint& x, const HPoint& y) {
  const double c = -minkowski_inner(x.vec(), y.vec());
  if (c > 2.0) return std::acosh(c);
  return 2.0 * std::asinh(0.5 * std::sqrt(std::max(0.0, minkowski_norm2(x.vec() - y.vec()))));
}

void check_unit_tangent(const HPoint& x, const MinkowskiVec& v, double tol) {
  const double ortho = minkowski_inner(x.vec(), v);
  const double norm = minkowski_norm2(v);
  if (std::abs(ortho) > tol || std::abs(norm - 1.0) > tol) {
    std::ostringstream os;
    os << "not a unit tangent: <x,v> = " << ortho << ", <v,v> = " << norm;
    throw GeometryError(os.str());
  }
}

HPoint geodesic_point(const HPoint& x, const MinkowskiVec& v, double t, double tol) {
  check_unit_tangent(x, v, tol);
  return HPoint::on_geodesic(x, v, t);
}

IdealPoint horizon(const HPoint& x, const MinkowskiVec& v, double tol) {
  check_unit_tangent(x, v, tol);
  return ideal_point_of_null(x.vec() + v);
}

MinkowskiVec tangent_unit(const HPoint& x, const MinkowskiVec& w) {
  const MinkowskiVec t = w + minkowski_inner(x.vec(), w) * x.vec();
  const double n2 = minkowski_norm2(t);
  if (!(n2 > 0.0)) throw GeometryError("tangent projection vanishes");
  return t / std::sqrt(n2);
}

MinkowskiVec unit_tangent_toward(const HPoint& x, const HPoint& y) { return tangent_unit(x, y.vec()); }

// ---------------------------------------------------------------------------

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) {
  const Complex det = a * d - b * c;
  const double size = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(std::abs(det) > 1e-14 * size * size)) throw GeometryError("degenerate Moebius map (ad - bc = 0)");
  const Complex s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

MobiusMap MobiusMap::scaling(Complex lambda) {
  if (lambda == 0.0) throw GeometryError("zero scaling");
  return {lambda, 0.0, 0.0, 1.0};
}

MobiusMap MobiusMap::sending_zero_infinity_to(const IdealPoint& p, const IdealPoint& q) {
  if (chordal_distance(p, q) < 1e-14) throw GeometryError("endpoints coincide");
  if (q.is_infinite()) return translation(p.value());
  if (p.is_infinite()) return {q.value(), -1.0, 1.0, 0.0};
  return {q.value(), p.value(), 1.0, 1.0};
}

MobiusMap MobiusMap::sending_to_infinity(const IdealPoint& x) {
  if (x.is_infinite()) return identity();
  return {0.0, 1.0, 1.0, -x.value()};
}

IdealPoint MobiusMap::operator()(const IdealPoint& z) const {
  if (z.is_infinite()) {
    if (c_ == 0.0) return IdealPoint::infinity();
    return IdealPoint(a_ / c_);
  }
  const Complex w = z.value();
  const Complex num = a_ * w + b_;
  const Complex den = c_ * w + d_;
  if (std::abs(den) <= 1e-300 || std::abs(den) <= 1e-15 * std::abs(num)) return IdealPoint::infinity();
  return IdealPoint(num / den);
}

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

Complex MobiusMap::chart_derivative(const IdealPoint& z) const {
  const IdealPoint image = (*this)(z);
  if (z.is_finite()) {
    const Complex w = z.value();
    if (image.is_finite()) {
      const Complex den = c_ * w + d_;
      return 1.0 / (den * den);
    }
    const Complex num = a_ * w + b_;
    return -1.0 / (num * num);
  }
  if (image.is_finite()) return -1.0 / (c_ * c_);
  return d_ * d_;
}

namespace {

// Hermitian-matrix model of R^{3,1}: X <-> 1/2 [[x4 - x3, x1 + i x2], [x1 - i x2, x4 + x3]],
// chosen so that ideal_lift(z) <-> (z, 1)(z, 1)^*.
Eigen::Matrix2cd to_hermitian(const MinkowskiVec& x) {
  Eigen::Matrix2cd H;
  H(0, 0) = 0.5 * (x[3] - x[2]);
  H(0, 1) = 0.5 * Complex(x[0], x[1]);
  H(1, 0) = 0.5 * Complex(x[0], -x[1]);
  H(1, 1) = 0.5 * (x[3] + x[2]);
  return H;
}

MinkowskiVec from_hermitian(const Eigen::Matrix2cd& H) {
  const double x4 = (H(0, 0) + H(1, 1)).real();
  const double x3 = (H(1, 1) - H(0, 0)).real();
  const Complex off = 2.0 * H(0, 1);
  return {off.real(), off.imag(), x3, x4};
}

}  // namespace

LorentzMatrix mobius_lift(const MobiusMap& m) {
  Eigen::Matrix2cd M;
  M << m.a(), m.b(), m.c(), m.d();
  LorentzMatrix L;
  for (int j = 0; j < 4; ++j) {
    const MinkowskiVec e = MinkowskiVec::Unit(j);
    L.col(j) = from_hermitian(M * to_hermitian(e) * M.adjoint());
  }
  return L;
}

HPoint apply(const LorentzMatrix& L, const HPoint& x) { return HPoint::from_timelike(L * x.vec()); }

// ---------------------------------------------------------------------------

Model parse_model(const std::string& name) {
  if (name == "hyperboloid") return Model::hyperboloid;
  if (name == "klein_ball" || name == "klein") return Model::klein_ball;
  if (name == "upper_half_space" || name == "uhs") return Model::upper_half_space;
  throw std::invalid_argument("unknown model: " + name);
}

std::string model_name(Model m) {
  switch (m) {
    case Model::hyperboloid: return "hyperboloid";
    case Model::klein_ball: return "klein_ball";
    case Model::upper_half_space: return "upper_half_space";
  }
  return "?";
}

HPoint from_uhs(const UhsPoint& p) {
  if (!(p.h > 0.0) || !std::isfinite(p.h)) throw GeometryError("upper half-space height must be positive");
  // ideal_lift(w)/(2h) + (h/2) ideal_lift(inf)
  const double r2 = std::norm(p.w);
  const MinkowskiVec v(p.w.real() / p.h, p.w.imag() / p.h, (1.0 - r2) / (2.0 * p.h) - 0.5 * p.h,
                       (1.0 + r2) / (2.0 * p.h) + 0.5 * p.h);
  return HPoint::from_timelike(v);
}

UhsPoint to_uhs(const HPoint& x) {
  const double s = x[2] + x[3];
  const double h = 1.0 / s;
  return {Complex(x[0], x[1]) * h, h};
}

HPoint from_klein(const Eigen::Vector3d& k) {
  const double n2 = k.squaredNorm();
  if (!(n2 < 1.0)) throw GeometryError("point outside the Klein ball");
  const double s = 1.0 / std::sqrt(1.0 - n2);
  return HPoint::from_timelike(MinkowskiVec(k[0] * s, k[1] * s, k[2] * s, s));
}

Eigen::Vector3d to_klein(const HPoint& x) { return x.vec().head<3>() / x[3]; }

Eigen::Vector4d model_convert(const Eigen::Vector4d& p, Model from, Model to) {
  HPoint x = HPoint::basepoint();
  switch (from) {
    case Model::hyperboloid: x = HPoint(p); break;
    case Model::klein_ball: x = from_klein(p.head<3>()); break;
    case Model::upper_half_space: x = from_uhs({Complex(p[0], p[1]), p[2]}); break;
  }
  switch (to) {
    case Model::hyperboloid: return x.vec();
    case Model::klein_ball: {
      const Eigen::Vector3d k = to_klein(x);
      return {k[0], k[1], k[2], 0.0};
    }
    case Model::upper_half_space: {
      const UhsPoint u = to_uhs(x);
      return {u.w.real(), u.w.imag(), u.h, 0.0};
    }
  }
  return x.vec();
}

}  // namespace hypend
