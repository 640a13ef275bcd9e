#include "hypend/ends.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <span>

namespace hypend {

EndOverDomain::EndOverDomain(FiniteComplementDomain domain) : domain_(std::move(domain)) {
  if (domain_.size() < 2) throw GeometryError("an end over C-hat \\ P needs |P| >= 2");
  lifts_.reserve(domain_.size());
  for (const IdealPoint& p : domain_.complement()) lifts_.push_back(ideal_lift_unit(p));
}

namespace {

struct Candidate {
  MinkowskiVec pole;  // unit, <x, pole> = -s
  double s = 0.0;
  std::vector<std::size_t> active;
  std::vector<double> weights;
};

// Stationary point of max -<x,N> on the de Sitter quadric with <l_i, N> = 0
// for i in the active set: N ~ -x + sum nu_i l_i.
std::optional<Candidate> stationary(const EndOverDomain& E, const HPoint& x, std::span<const std::size_t> active) {
  const auto& L = E.lifts();
  const int k = static_cast<int>(active.size());
  Eigen::MatrixXd G(k, k);
  Eigen::VectorXd r(k);
  for (int i = 0; i < k; ++i) {
    r[i] = minkowski_inner(L[active[i]], x.vec());
    for (int j = 0; j < k; ++j) G(i, j) = minkowski_inner(L[active[i]], L[active[j]]);
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
  if (lu.rank() < k) return std::nullopt;
  const Eigen::VectorXd nu = lu.solve(r);
  MinkowskiVec N = -x.vec();
  for (int i = 0; i < k; ++i) N += nu[i] * L[active[i]];
  const double s2 = minkowski_norm2(N);
  if (!(s2 > 0.0)) return std::nullopt;
  const double s = std::sqrt(s2);
  Candidate c{N / s, s, {active.begin(), active.end()}, {nu.data(), nu.data() + k}};
  return c;
}

bool primal_feasible(const EndOverDomain& E, const MinkowskiVec& pole, double tol) {
  for (const MinkowskiVec& l : E.lifts())
    if (minkowski_inner(l, pole) < -tol) return false;
  return true;
}

}  // namespace

std::optional<SupportPlane> end_support(const EndOverDomain& E, const HPoint& x, double feas_tol) {
  const std::size_t n = E.lifts().size();
  std::optional<Candidate> best;
  const auto consider = [&](std::span<const std::size_t> active) {
    std::optional<Candidate> c = stationary(E, x, active);
    if (!c || !primal_feasible(E, c->pole, feas_tol)) return;
    if (!best || c->s > best->s) best = std::move(c);
  };
  // Singleton active sets have a null stationary pole, so the enumeration
  // starts at edges.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t pair[2] = {i, j};
      consider(pair);
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::size_t triple[3] = {i, j, k};
        consider(triple);
      }
    }
  if (!best) return std::nullopt;

  // Faces whose foot lies on an edge carry a zero weight; report the edge.
  std::vector<std::size_t> active;
  double wmax = 0.0;
  for (double w : best->weights) wmax = std::max(wmax, w);
  MinkowskiVec foot = MinkowskiVec::Zero();
  for (std::size_t i = 0; i < best->active.size(); ++i) {
    foot += best->weights[i] * E.lifts()[best->active[i]];
    if (best->weights[i] > 1e-9 * wmax) active.push_back(best->active[i]);
  }
  return SupportPlane{OrientedDisk(best->pole, 1e-8), std::move(active), std::asinh(best->s), HPoint::from_timelike(foot)};
}

double end_height(const EndOverDomain& E, const HPoint& x) {
  const auto sp = end_support(E, x);
  return sp ? sp->height : 0.0;
}

EndProjection end_project(const EndOverDomain& E, const HPoint& x) {
  auto sp = end_support(E, x);
  if (!sp || !(sp->height > 0.0)) throw GeometryError("point lies in the convex hull; no vertical projection");
  const MinkowskiVec& N = sp->disk.pole();
  const HPoint& foot = sp->foot;
  // The vertical line leaves the foot along -N.
  const IdealPoint ideal = ideal_point_of_null(foot.vec() - N);
  const double h = sp->height;
  const MinkowskiVec grad = foot.vec() * std::sinh(h) - N * std::cosh(h);
  return {foot, ideal, tangent_unit(x, grad), std::move(*sp)};
}

RayTrace end_trace_geodesic(const EndOverDomain& E, const HPoint& x, const MinkowskiVec& v, double t_max, double dt) {
  check_unit_tangent(x, v, 1e-10);
  if (!(dt > 0.0) || !(t_max >= 0.0)) throw GeometryError("trace needs dt > 0 and t_max >= 0");
  RayTrace out;
  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  out.samples.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const HPoint p = HPoint::on_geodesic(x, v, t);
    RaySample s{t, p, 0.0, 0.0, 0.0};
    if (auto sp = end_support(E, p); sp && sp->height > 0.0) {
      // On the active face sinh h = A cosh t + B sinh t with A, B taken at t = 0.
      const MinkowskiVec& N = sp->disk.pole();
      const double A = -minkowski_inner(x.vec(), N), B = -minkowski_inner(v, N);
      const double sh = A * std::cosh(t) + B * std::sinh(t);
      const double ch = std::sqrt(1.0 + sh * sh);
      s.height = std::asinh(sh);
      s.vertical_speed = (A * std::sinh(t) + B * std::cosh(t)) / ch;
      s.horizontal_speed = std::sqrt(std::max(0.0, 1.0 + A * A - B * B)) / ch;
    }
    out.samples.push_back(s);
  }
  if (!out.samples.empty() && out.samples.front().height > 0.0)
    out.downward_start = out.samples.front().vertical_speed < -1e-12;
  return out;
}

HessianProbe end_hessian_probe(const EndOverDomain& E, const HPoint& x, const MinkowskiVec& xi, double eps,
                               bool diagnostic) {
  check_unit_tangent(x, xi, 1e-8);
  if (!diagnostic && !(eps > 0.0 && eps <= 0.1)) throw GeometryError("probe step must lie in (0, 0.1]");
  const auto centre = end_support(E, x);
  if (!centre || !(centre->height > 0.0)) throw GeometryError("Hessian probe requires a point outside the hull");
  if (!diagnostic) {
    const double h = centre->height;
    const MinkowskiVec grad = tangent_unit(x, centre->foot.vec() * std::sinh(h) - centre->disk.pole() * std::cosh(h));
    if (std::abs(minkowski_inner(grad, xi)) > 1e-8) throw GeometryError("probe direction is not horizontal");
  }
  const HPoint plus = HPoint::from_timelike(x.vec() * std::cosh(eps) + xi * std::sinh(eps));
  const HPoint minus = HPoint::from_timelike(x.vec() * std::cosh(eps) - xi * std::sinh(eps));
  const auto sp = end_support(E, plus);
  const auto sm = end_support(E, minus);
  const double hp = sp ? sp->height : 0.0;
  const double hm = sm ? sm->height : 0.0;
  HessianProbe out;
  out.height = centre->height;
  out.value = (hp - 2.0 * centre->height + hm) / (eps * eps);
  out.ridge = !sp || !sm || sp->active != centre->active || sm->active != centre->active;
  return out;
}

HoroballCheck end_horoball_check(const EndOverDomain& E, const HPoint& x) {
  const EndProjection proj = end_project(E, x);
  const double omega = kp_form(E.domain(), proj.ideal);
  const Horoball B = horoball_make(proj.ideal, omega);
  const double level = horoball_level(B, x);
  return {level > 0.0, level, proj.ideal, omega};
}

}  // namespace hypend
