#include "hypend/schwarzian.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace hypend {

Jet schwarzian_jet(const Jet& phi) {
  if (phi.order() < 4) throw std::invalid_argument("schwarzian_jet needs a jet of order >= 4");
  if (std::abs(phi[1]) <= 1e-12) throw GeometryError("Schwarzian undefined at a critical point (phi' = 0)");
  const Jet d1 = phi.derivative();
  const Jet pre = d1.derivative() / d1;  // phi''/phi'
  return pre.derivative() - pre * pre * 0.5;
}

Jet mobius_compose(const MobiusMap& m, const Jet& phi) {
  const Jet den = phi * m.c() + m.d();
  if (std::abs(den.value()) <= 1e-12 * (std::abs(m.c() * phi.value()) + std::abs(m.d())))
    throw GeometryError("Moebius map has its pole at phi(basepoint)");
  return (phi * m.a() + m.b()) / den;
}

double mobius_invariance_check(const Jet& phi, const MobiusMap& m) {
  const Jet s0 = schwarzian_jet(phi);
  const Jet s1 = schwarzian_jet(mobius_compose(m, phi));
  double dev = 0.0;
  for (std::size_t k = 0; k <= std::min(s0.order(), s1.order()); ++k) dev = std::max(dev, std::abs(s0[k] - s1[k]));
  return dev;
}

HolomorphicField::HolomorphicField(JetFn jets, DomainFn domain) : jets_(std::move(jets)), domain_(std::move(domain)) {}

HolomorphicField HolomorphicField::from_function(std::function<Jet(const Jet& z)> f, DomainFn domain) {
  return HolomorphicField([f = std::move(f)](Complex z0, std::size_t order) { return f(Jet::variable(z0, order)); },
                          std::move(domain));
}

HolomorphicField HolomorphicField::constant(Complex c) {
  return HolomorphicField([c](Complex z0, std::size_t order) { return Jet::constant(z0, c, order); });
}

namespace {

namespace odeint = boost::numeric::odeint;

// (u1, u1', u2, u2') split into real and imaginary parts.
using OdeState = std::array<double, 8>;

OdeState pack(const ProjectiveState& s) {
  return {s.u1.real(), s.u1.imag(), s.du1.real(), s.du1.imag(), s.u2.real(), s.u2.imag(), s.du2.real(), s.du2.imag()};
}

ProjectiveState unpack(const OdeState& y) {
  return {{y[0], y[1]}, {y[2], y[3]}, {y[4], y[5]}, {y[6], y[7]}};
}

Complex wronskian(const ProjectiveState& s) { return s.du1 * s.u2 - s.u1 * s.du2; }

PathSample make_sample(Complex z, const ProjectiveState& s, double drift, const SolveOptions& opts) {
  PathSample out{z, s, IdealPoint::infinity(), false, Complex{}, drift};
  const double a1 = std::abs(s.u1);
  const double a2 = std::abs(s.u2);
  if (a2 > a1 / opts.chart_flip) {
    out.phi = IdealPoint(s.u1 / s.u2);
  } else {
    out.flipped = true;
    out.inverse_phi = s.u2 / s.u1;
    if (a2 > 0.0) out.phi = IdealPoint(s.u1 / s.u2);
  }
  return out;
}

}  // namespace

SchwarzianSolution schwarzian_solve(const HolomorphicField& f, const std::vector<Complex>& path,
                                    const SchwarzianNormalization& norm, const SolveOptions& opts) {
  if (std::abs(norm.first) <= 1e-300) throw GeometryError("normalization requires phi'(z0) != 0");
  if (!f.contains(norm.z0)) throw GeometryError("normalization point outside the field's domain");

  std::vector<Complex> vertices;
  vertices.push_back(norm.z0);
  for (const Complex& z : path)
    if (std::abs(z - vertices.back()) > 0.0) vertices.push_back(z);

  // Wronskian 1: u2 = phi'^{-1/2}, u2' = -phi'' u2 / (2 phi'), u1 = phi u2.
  ProjectiveState s;
  s.u2 = 1.0 / std::sqrt(norm.first);
  s.du2 = -norm.second * s.u2 / (2.0 * norm.first);
  s.u1 = norm.value * s.u2;
  s.du1 = norm.first * s.u2 + norm.value * s.du2;
  const Complex w0 = wronskian(s);

  SchwarzianSolution out;
  out.vertices.push_back(make_sample(norm.z0, s, 0.0, opts));

  for (std::size_t k = 1; k < vertices.size(); ++k) {
    const Complex a = vertices[k - 1];
    const Complex delta = vertices[k] - a;
    bool left_domain = false;
    const auto rhs = [&](const OdeState& y, OdeState& dy, double t) {
      const Complex z = a + t * delta;
      if (!f.contains(z)) left_domain = true;
      const Complex half_f = 0.5 * f.value(z);
      const ProjectiveState st = unpack(y);
      const ProjectiveState d{delta * st.du1, -delta * half_f * st.u1, delta * st.du2, -delta * half_f * st.u2};
      dy = pack(d);
    };
    OdeState y = pack(s);
    try {
      auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<OdeState>>(opts.abs_tol, opts.rel_tol);
      odeint::integrate_adaptive(stepper, rhs, y, 0.0, 1.0, opts.initial_step);
    } catch (const odeint::odeint_error& e) {
      throw NumericError(std::string("Schwarzian ODE integration failed: ") + e.what());
    }
    if (left_domain) throw GeometryError("integration path leaves the field's domain");
    s = unpack(y);
    const double drift = std::abs(wronskian(s) - w0) / std::abs(w0);
    if (!(drift <= opts.wronskian_tol)) {
      std::ostringstream os;
      os << "Wronskian drift " << drift << " exceeds tolerance on segment " << k;
      throw NumericError(os.str());
    }
    out.vertices.push_back(make_sample(vertices[k], s, drift, opts));
  }
  return out;
}

}  // namespace hypend
