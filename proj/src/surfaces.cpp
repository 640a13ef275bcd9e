#include "hypend/surfaces.hpp"

#include "hypend/kp.hpp"
#include "hypend/schwarzian.hpp"

#include <boost/numeric/odeint.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace hypend {

std::string to_string(SurfaceFamily f) {
  switch (f) {
    case SurfaceFamily::plane_equidistant: return "plane_equidistant";
    case SurfaceFamily::horosphere: return "horosphere";
    case SurfaceFamily::cylinder: return "cylinder";
  }
  return "unknown";
}

ExplicitSurface ExplicitSurface::plane_equidistant(const OrientedDisk& D, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw GeometryError("equidistance radius must be positive");
  ExplicitSurface s;
  s.family_ = SurfaceFamily::plane_equidistant;
  s.pole_ = D.pole();
  s.r_ = r;
  return s;
}

ExplicitSurface ExplicitSurface::horosphere(const Horoball& B, HoroOrientation orientation) {
  ExplicitSurface s;
  s.family_ = SurfaceFamily::horosphere;
  s.orientation_ = orientation;
  const IdealPoint& y = B.centre();
  if (!y.is_infinite()) s.post_ = MobiusMap(y.value(), 1.0, 1.0, 0.0);
  const MinkowskiVec v = mobius_lift(s.post_) * ideal_lift(IdealPoint::infinity());
  s.height_ = B.scaled_lift()[3] / v[3];
  if (!(s.height_ > 0.0)) throw GeometryError("horoball lift is not future pointing");
  return s;
}

ExplicitSurface ExplicitSurface::cylinder(const IdealPoint& a, const IdealPoint& b, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw GeometryError("cylinder radius must be positive");
  ExplicitSurface s;
  s.family_ = SurfaceFamily::cylinder;
  s.r_ = r;
  s.post_ = MobiusMap::sending_zero_infinity_to(a, b);
  return s;
}

OrientedDisk ExplicitSurface::base_disk() const {
  if (family_ != SurfaceFamily::plane_equidistant) throw GeometryError("surface has no base disk");
  return OrientedDisk(pole_).transformed(mobius_lift(post_));
}

ExplicitSurface ExplicitSurface::transformed(const MobiusMap& m) const {
  ExplicitSurface s = *this;
  s.post_ = m * post_;
  return s;
}

ExplicitSurface ExplicitSurface::offset_by(double t) const {
  if (!std::isfinite(t)) throw GeometryError("offset must be finite");
  ExplicitSurface s = *this;
  s.offset_ += t;
  return s;
}

bool ExplicitSurface::in_chart(const Eigen::Vector2d& u) const {
  if (!u.allFinite()) return false;
  if (family_ != SurfaceFamily::plane_equidistant) return true;
  return minkowski_inner(ideal_lift(IdealPoint(u[0], u[1])), pole_) < 0.0;
}

SurfaceFrame ExplicitSurface::base_frame(const Eigen::Vector2d& u) const {
  SurfaceFrame f;
  switch (family_) {
    case SurfaceFamily::plane_equidistant: {
      // p = N - l(u)/<l(u),N> runs over the plane; e = p cosh r - N sinh r.
      const MinkowskiVec& N = pole_;
      const MinkowskiVec l = ideal_lift(IdealPoint(u[0], u[1]));
      const MinkowskiVec l1(2.0, 0.0, -2.0 * u[0], 2.0 * u[0]);
      const MinkowskiVec l2(0.0, 2.0, -2.0 * u[1], 2.0 * u[1]);
      const double q = minkowski_inner(l, N);
      if (!(q < 0.0)) throw GeometryError("parameter point outside the base disk");
      const double q1 = minkowski_inner(l1, N);
      const double q2 = minkowski_inner(l2, N);
      const MinkowskiVec p = N - l / q;
      const MinkowskiVec p1 = -l1 / q + l * (q1 / (q * q));
      const MinkowskiVec p2 = -l2 / q + l * (q2 / (q * q));
      const double c = std::cosh(r_), s = std::sinh(r_);
      f.e = p * c - N * s;
      f.e1 = p1 * c;
      f.e2 = p2 * c;
      f.nu = p * s - N * c;
      f.nu1 = p1 * s;
      f.nu2 = p2 * s;
      break;
    }
    case SurfaceFamily::horosphere: {
      const double t = height_;
      const double a = u[0], b = u[1], n2 = a * a + b * b;
      f.e = MinkowskiVec(a / t, b / t, (1.0 - n2) / (2.0 * t) - t / 2.0, (1.0 + n2) / (2.0 * t) + t / 2.0);
      f.e1 = MinkowskiVec(1.0 / t, 0.0, -a / t, a / t);
      f.e2 = MinkowskiVec(0.0, 1.0 / t, -b / t, b / t);
      f.nu = MinkowskiVec(a / t, b / t, (1.0 - n2) / (2.0 * t) + t / 2.0, (1.0 + n2) / (2.0 * t) - t / 2.0);
      f.nu1 = f.e1;
      f.nu2 = f.e2;
      if (orientation_ == HoroOrientation::inward) {
        f.nu = -f.nu;
        f.nu1 = -f.nu1;
        f.nu2 = -f.nu2;
      }
      break;
    }
    case SurfaceFamily::cylinder: {
      // Axis point at height e^sigma; the surface point sits at height e^s.
      const double sigma = u[0] + std::log(std::cosh(r_));
      const double th = u[1];
      const double cr = std::cosh(r_), sr = std::sinh(r_);
      const double ch = std::cosh(sigma), sh = std::sinh(sigma);
      const double ct = std::cos(th), st = std::sin(th);
      f.e = MinkowskiVec(sr * ct, sr * st, -cr * sh, cr * ch);
      f.e1 = MinkowskiVec(0.0, 0.0, -cr * ch, cr * sh);
      f.e2 = MinkowskiVec(-sr * st, sr * ct, 0.0, 0.0);
      f.nu = MinkowskiVec(cr * ct, cr * st, -sr * sh, sr * ch);
      f.nu1 = MinkowskiVec(0.0, 0.0, -sr * ch, sr * sh);
      f.nu2 = MinkowskiVec(-cr * st, cr * ct, 0.0, 0.0);
      break;
    }
  }
  return f;
}

SurfaceFrame ExplicitSurface::frame(const Eigen::Vector2d& u) const {
  if (!in_chart(u)) throw GeometryError("parameter point outside the chart");
  SurfaceFrame f = base_frame(u);
  if (offset_ != 0.0) {
    const double c = std::cosh(offset_), s = std::sinh(offset_);
    SurfaceFrame g;
    g.e = f.e * c + f.nu * s;
    g.e1 = f.e1 * c + f.nu1 * s;
    g.e2 = f.e2 * c + f.nu2 * s;
    g.nu = f.e * s + f.nu * c;
    g.nu1 = f.e1 * s + f.nu1 * c;
    g.nu2 = f.e2 * s + f.nu2 * c;
    f = g;
  }
  const LorentzMatrix L = mobius_lift(post_);
  return {L * f.e, L * f.e1, L * f.e2, L * f.nu, L * f.nu1, L * f.nu2};
}

HPoint ExplicitSurface::point(const Eigen::Vector2d& u) const { return HPoint(frame(u).e, 1e-8); }

namespace {

Eigen::Matrix2d gram(const MinkowskiVec& a1, const MinkowskiVec& a2, const MinkowskiVec& b1, const MinkowskiVec& b2) {
  Eigen::Matrix2d m;
  m << minkowski_inner(a1, b1), minkowski_inner(a1, b2), minkowski_inner(a2, b1), minkowski_inner(a2, b2);
  return 0.5 * (m + m.transpose());
}

}  // namespace

SurfaceData surface_forms(const ExplicitSurface& S, const Eigen::Vector2d& u) {
  const SurfaceFrame f = S.frame(u);
  SurfaceData d;
  d.I = gram(f.e1, f.e2, f.e1, f.e2);
  d.II = gram(f.nu1, f.nu2, f.e1, f.e2);
  d.III = gram(f.nu1, f.nu2, f.nu1, f.nu2);
  if (!(std::abs(d.I.determinant()) > 1e-300)) throw GeometryError("immersion degenerates at this parameter");
  d.A = d.I.inverse() * d.II;
  d.K = d.A.determinant();
  return d;
}

IdealPoint surface_gauss_map(const ExplicitSurface& S, const Eigen::Vector2d& u) {
  const SurfaceFrame f = S.frame(u);
  return ideal_point_of_null(f.e + f.nu);
}

NormalOffset surface_normal_offset(const ExplicitSurface& S, double t, const Eigen::Vector2d& u) {
  const SurfaceFrame f = S.frame(u);
  const SurfaceData d = surface_forms(S, u);
  const double c = std::cosh(t), s = std::sinh(t);
  return {HPoint(f.e * c + f.nu * s, 1e-8), c * c * d.I + 2.0 * c * s * d.II + s * s * d.III};
}

namespace {

double flow_eigenvalue(double k, double t) {
  if (k <= -1.0) throw GeometryError("shape operator eigenvalue <= -1 reaches the flow singularity");
  if (k == 1.0) return 1.0;
  if (k < 1.0) return std::tanh(t + std::atanh(k));
  return 1.0 / std::tanh(t + std::atanh(1.0 / k));
}

}  // namespace

ShapeFlowResult shape_flow(const Eigen::Matrix2d& A0, double t, FlowMethod method) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw GeometryError("flow time must be finite and non-negative");
  if (!A0.allFinite() || std::abs(A0(0, 1) - A0(1, 0)) > 1e-12 * (1.0 + A0.norm()))
    throw GeometryError("shape operator must be symmetric");
  Eigen::Matrix2d A = 0.5 * (A0 + A0.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(A);
  const Eigen::Vector2d k0 = eig.eigenvalues();
  if (k0.minCoeff() <= -1.0) throw GeometryError("shape operator eigenvalue <= -1 reaches the flow singularity");

  if (method == FlowMethod::closed_form) {
    const Eigen::Vector2d kt(flow_eigenvalue(k0[0], t), flow_eigenvalue(k0[1], t));
    A = eig.eigenvectors() * kt.asDiagonal() * eig.eigenvectors().transpose();
  } else {
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 3>;  // (a11, a12, a22)
    State y{A(0, 0), A(0, 1), A(1, 1)};
    const auto rhs = [](const State& s, State& ds, double) {
      ds[0] = 1.0 - (s[0] * s[0] + s[1] * s[1]);
      ds[1] = -s[1] * (s[0] + s[2]);
      ds[2] = 1.0 - (s[1] * s[1] + s[2] * s[2]);
    };
    if (t > 0.0) {
      const double dt_max = std::min(1e-3, 0.02 / std::max(1.0, k0.cwiseAbs().maxCoeff()));
      const auto steps = static_cast<std::size_t>(std::ceil(t / dt_max));
      const double dt = t / static_cast<double>(steps);
      odeint::runge_kutta4<State> stepper;
      odeint::integrate_n_steps(stepper, rhs, y, 0.0, dt, steps);
    }
    A << y[0], y[1], y[1], y[2];
  }
  return {A, A.determinant()};
}

Eigen::Matrix2d surface_horospherical_metric(const ExplicitSurface& S, const Eigen::Vector2d& u) {
  const SurfaceData d = surface_forms(S, u);
  return d.I + 2.0 * d.II + d.III;
}

Eigen::Matrix2d surface_gauss_pullback(const ExplicitSurface& S, const Eigen::Vector2d& u) {
  const SurfaceFrame f = S.frame(u);
  const MinkowskiVec w = f.e + f.nu;
  const MinkowskiVec w1 = f.e1 + f.nu1;
  const MinkowskiVec w2 = f.e2 + f.nu2;
  const auto unit_partial = [&](const MinkowskiVec& dw) {
    return Eigen::Vector3d((dw.head<3>() * w[3] - w.head<3>() * dw[3]) / (w[3] * w[3]));
  };
  Eigen::Matrix<double, 3, 2> J;
  J.col(0) = unit_partial(w1);
  J.col(1) = unit_partial(w2);
  return J.transpose() * J;
}

double conformality_defect(const ExplicitSurface& S, const Eigen::Vector2d& u) {
  const Eigen::Matrix2d H = surface_horospherical_metric(S, u);
  const Eigen::Matrix2d G = surface_gauss_pullback(S, u);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> eig(G, H);
  if (eig.info() != Eigen::Success) throw GeometryError("horospherical metric is degenerate");
  const Eigen::Vector2d lam = eig.eigenvalues();
  if (!(lam.minCoeff() > 1e-14 * lam.cwiseAbs().maxCoeff()) || !(lam.maxCoeff() > 0.0))
    throw GeometryError("Gauss map pull-back is degenerate");
  return lam.maxCoeff() / lam.minCoeff() - 1.0;
}

double gauss_image_kp(const ExplicitSurface& S, const Eigen::Vector2d& u) {
  const IdealPoint y = surface_gauss_map(S, u);
  switch (S.family()) {
    case SurfaceFamily::plane_equidistant: return disk_area_form(S.base_disk(), y);
    case SurfaceFamily::horosphere:
      if (S.orientation() == HoroOrientation::inward) throw GeometryError("Gauss map of an inward horosphere is constant");
      return 0.0;
    case SurfaceFamily::cylinder:
      return kp_form(FiniteComplementDomain({S.axis_start(), S.axis_end()}), y);
  }
  return 0.0;
}

Eigen::Matrix2d gauss_image_kp_metric(const ExplicitSurface& S, const Eigen::Vector2d& u) {
  const double omega = gauss_image_kp(S, u);
  const SurfaceFrame f = S.frame(u);
  const MinkowskiVec w = f.e + f.nu;
  const MinkowskiVec w1 = f.e1 + f.nu1;
  const MinkowskiVec w2 = f.e2 + f.nu2;
  const IdealPoint y = ideal_point_of_null(w);
  std::array<Complex, 2> dz;
  const std::array<const MinkowskiVec*, 2> dws{&w1, &w2};
  for (int i = 0; i < 2; ++i) {
    const MinkowskiVec& dw = *dws[i];
    if (y.is_finite()) {
      const double den = w[2] + w[3];
      const Complex z(w[0] / den, w[1] / den);
      dz[i] = Complex(dw[0], dw[1]) / den - z * (dw[2] + dw[3]) / den;
    } else {
      const double den = w[3] - w[2];
      const Complex z(w[0] / den, -w[1] / den);
      dz[i] = Complex(dw[0], -dw[1]) / den - z * (dw[3] - dw[2]) / den;
    }
  }
  Eigen::Matrix2d g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = omega * (dz[i] * std::conj(dz[j])).real();
  return g;
}

Jet surface_schwarzian(const ExplicitSurface& S, const Eigen::Vector2d& u, std::size_t order) {
  const Complex z0(u[0], u[1]);
  const Jet z = Jet::variable(z0, order + 3);
  switch (S.family()) {
    case SurfaceFamily::plane_equidistant: return schwarzian_jet(mobius_compose(S.post(), z));
    case SurfaceFamily::horosphere:
      if (S.orientation() == HoroOrientation::inward) throw GeometryError("Gauss map of an inward horosphere is constant");
      return schwarzian_jet(mobius_compose(S.post(), z));
    case SurfaceFamily::cylinder:
      return schwarzian_jet(mobius_compose(S.post(), exp(z) * std::cosh(S.radius())));
  }
  throw GeometryError("unknown surface family");
}

std::vector<Eigen::Vector2d> equidistant_grid(const ExplicitSurface& S, std::size_t n_radial, std::size_t n_angular,
                                              double max_radius) {
  if (S.family() != SurfaceFamily::plane_equidistant) throw GeometryError("grid needs a plane_equidistant surface");
  if (!(max_radius > 0.0 && max_radius < 1.0)) throw GeometryError("grid radius must lie in (0, 1)");
  // Parameters live in the chart of the disk before post().
  const OrientedDisk D0 = S.base_disk().transformed(mobius_lift(S.post().inverse()));
  const MobiusMap n = disk_uniformizer(D0);
  std::vector<Eigen::Vector2d> out;
  out.reserve(n_radial * n_angular);
  for (std::size_t j = 0; j < n_radial; ++j) {
    const double rho = max_radius * (static_cast<double>(j) + 0.5) / static_cast<double>(n_radial);
    for (std::size_t k = 0; k < n_angular; ++k) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_angular);
      const IdealPoint z = n(std::polar(rho, th));
      if (z.is_infinite()) continue;
      out.emplace_back(z.value().real(), z.value().imag());
    }
  }
  return out;
}

AprioriReport surface_apriori_check(const ExplicitSurface& S, const std::vector<Eigen::Vector2d>& samples, double r,
                                    const AprioriOptions& opts) {
  if (S.family() != SurfaceFamily::plane_equidistant)
    throw GeometryError("a priori check needs a surface whose Gauss image is a disk");
  if (!(r > 0.0)) throw GeometryError("radius must be positive");
  const OrientedDisk omega = S.base_disk();
  const MobiusMap n = disk_uniformizer(omega);
  const MobiusMap n_inv = n.inverse();
  const LorentzMatrix Ln = mobius_lift(n);
  const double k_max = std::tanh(r) * std::tanh(r);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);

  AprioriReport rep;
  rep.min_horoball_level = std::numeric_limits<double>::infinity();
  for (const Eigen::Vector2d& u : samples) {
    const SurfaceData d = surface_forms(S, u);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(d.II);
    if (!(eig.eigenvalues().minCoeff() > 0.0)) throw GeometryError("sample is not strictly convex");

    AprioriSample s;
    s.u = u;
    s.gauss = surface_gauss_map(S, u);
    s.curvature = d.K;
    const HPoint e = S.point(u);
    s.full_disk_distance = halfspace_signed_distance(omega, e);
    s.halfspace_excess = s.full_disk_distance - r;

    const IdealPoint w_ideal = n_inv(s.gauss);
    if (w_ideal.is_finite()) {
      const Complex w = w_ideal.value();
      for (std::size_t k = 0; k < opts.test_disks; ++k) {
        Complex c;
        do {
          c = Complex(unit(rng), unit(rng));
        } while (!(std::abs(c) < 1.0 && std::abs(w - c) < 1.0 - std::abs(c)));
        const double lo = std::abs(w - c), hi = 1.0 - std::abs(c);
        const double rho = lo + (hi - lo) * (0.05 + 0.95 * frac(rng));
        const OrientedDisk sub(Ln * disk_from_circle(c, rho).pole(), 1e-8);
        s.halfspace_excess = std::max(s.halfspace_excess, halfspace_signed_distance(sub, e) - r);
      }
    }

    const double kp = gauss_image_kp(S, u);
    s.horoball_level = horoball_level(horoball_make(s.gauss, kp), e);

    rep.curvature_ok = rep.curvature_ok && d.K <= k_max + opts.tol;
    rep.max_halfspace_excess = rep.samples.empty() ? s.halfspace_excess
                                                   : std::max(rep.max_halfspace_excess, s.halfspace_excess);
    rep.max_full_disk_gap = std::max(rep.max_full_disk_gap, std::abs(s.full_disk_distance - r));
    rep.min_horoball_level = std::min(rep.min_horoball_level, s.horoball_level);
    rep.samples.push_back(s);
  }
  if (rep.samples.empty()) rep.min_horoball_level = 0.0;
  rep.halfspace_ok = rep.max_halfspace_excess <= opts.tol;
  rep.horoball_ok = rep.min_horoball_level >= -opts.tol;
  return rep;
}

}  // namespace hypend
