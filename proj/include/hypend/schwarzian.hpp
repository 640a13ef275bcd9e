#pragma once

#include "hypend/jet.hpp"
#include "hypend/lorentz.hpp"

#include <functional>
#include <vector>

namespace hypend {

/// (phi''/phi')' - (1/2)(phi''/phi')^2 as a jet of order phi.order() - 3.
/// Throws GeometryError at a critical point or when the order is below 4.
Jet schwarzian_jet(const Jet& phi);

/// (a phi + b)/(c phi + d) as a jet.
Jet mobius_compose(const MobiusMap& m, const Jet& phi);

/// Largest coefficient deviation between S(m o phi) and S(phi). Throws
/// GeometryError when m has its pole at phi(basepoint).
double mobius_invariance_check(const Jet& phi, const MobiusMap& m);

/// A holomorphic function on a declared domain, able to produce jets.
class HolomorphicField {
 public:
  using JetFn = std::function<Jet(Complex basepoint, std::size_t order)>;
  using DomainFn = std::function<bool(Complex)>;

  explicit HolomorphicField(JetFn jets, DomainFn domain = {});

  /// The field built from a univariate jet expression f(z).
  static HolomorphicField from_function(std::function<Jet(const Jet& z)> f, DomainFn domain = {});
  static HolomorphicField constant(Complex c);

  Complex value(Complex z) const { return jets_(z, 0).value(); }
  Jet jet(Complex z, std::size_t order) const { return jets_(z, order); }
  bool contains(Complex z) const { return !domain_ || domain_(z); }

 private:
  JetFn jets_;
  DomainFn domain_;
};

/// Moebius gauge for the solution: phi(z0), phi'(z0), phi''(z0).
struct SchwarzianNormalization {
  Complex z0;
  Complex value;
  Complex first;
  Complex second;
};

struct SolveOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double initial_step = 1e-3;
  /// Relative Wronskian drift that counts as an integration failure.
  double wronskian_tol = 1e-6;
  /// |phi| beyond which the sample is reported in the chart 1/phi.
  double chart_flip = 1e6;
};

/// State of u'' + (f/2) u = 0 for the two solutions with phi = u1/u2.
struct ProjectiveState {
  Complex u1, du1, u2, du2;
};

struct PathSample {
  Complex z;
  ProjectiveState state;
  /// phi(z), or infinity when u2 vanishes.
  IdealPoint phi;
  /// True when |phi| exceeds the chart-flip threshold; then `inverse_phi`
  /// holds 1/phi = u2/u1.
  bool flipped = false;
  Complex inverse_phi;
  double wronskian_drift = 0.0;
};

struct SchwarzianSolution {
  /// One sample per path vertex (the first is the normalization point).
  std::vector<PathSample> vertices;
  const PathSample& end() const { return vertices.back(); }
};

/// Integrates u'' + (f/2) u = 0 along the polyline starting at
/// normalization.z0 with initial data pinned by the normalization; then
/// phi = u1/u2 satisfies S(phi) = f. Throws NumericError when the
/// integrator misses its tolerance and GeometryError on phi'(z0) = 0 or a
/// path leaving the field's domain.
SchwarzianSolution schwarzian_solve(const HolomorphicField& f, const std::vector<Complex>& path,
                                    const SchwarzianNormalization& norm, const SolveOptions& opts = {});

}  // namespace hypend
