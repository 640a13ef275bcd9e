// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "hypend/disks.hpp"
#include "hypend/ends.hpp"
#include "hypend/horoballs.hpp"
#include "hypend/kp.hpp"
#include "hypend/schwarzian.hpp"
#include "hypend/surfaces.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace hypend;
using testutil::Rng;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

MinkowskiVec horizontal(const HPoint& x, const MinkowskiVec& grad, double theta) {
  MinkowskiVec basis[2];
  int found = 0;
  for (int k = 0; k < 4 && found < 2; ++k) {
    MinkowskiVec w = MinkowskiVec::Unit(k);
    w += minkowski_inner(w, x.vec()) * x.vec();
    w -= minkowski_inner(w, grad) * grad;
    for (int j = 0; j < found; ++j) w -= minkowski_inner(w, basis[j]) * basis[j];
    const double n2 = minkowski_norm2(w);
    if (n2 < 1e-3) continue;
    basis[found++] = w / std::sqrt(n2);
  }
  return std::cos(theta) * basis[0] + std::sin(theta) * basis[1];
}

Complex random_outside(Rng& rng, const FiniteComplementDomain& dom) {
  for (;;) {
    const Complex z = rng.complex(1.5);
    bool ok = true;
    for (const auto& p : dom.complement())
      if (chordal_distance(p, z) < 0.05) ok = false;
    if (ok) return z;
  }
}

void disks_criterion(Check& c) {
  Rng rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex centre = rng.complex();
    const double R = rng.uniform(0.2, 2.0);
    const OrientedDisk D = disk_from_circle(centre, R);
    const Complex z = centre + std::polar(R * std::sqrt(rng.uniform(0.0, 0.98)), rng.uniform(0.0, 6.3));
    const double closed = euclidean_disk_area_form(R, std::abs(z - centre));
    worst = std::max(worst, rel(disk_area_form_transported(D, z), closed));
  }
  c.require(worst <= 1e-10, "area form closed vs transported");
  c.detail << "area-form rel err " << worst;

  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    oracle::Circle a, b;
    const OrientedDisk D0 = testutil::random_disk(rng, &a), D1 = testutil::random_disk(rng, &b);
    const auto r = disk_relation(D0, D1);
    if (static_cast<int>(r) != static_cast<int>(oracle::circle_relation(a, b))) ++mismatches;
  }
  c.require(mismatches == 0, "disk_relation vs brute force");
  c.detail << ", relation mismatches " << mismatches << "/1000";

  int pairs = 0, violations = 0;
  while (pairs < 200) {
    const OrientedDisk D0 = testutil::random_disk(rng), D1 = testutil::random_disk(rng);
    if (disk_relation(D0, D1) != DiskRelation::overlap) continue;
    ++pairs;
    for (int k = 0; k < 50; ++k) {
      const OrientedDisk Ds = disk_geodesic_arc(D0, D1, rng.uniform());
      const Complex z = rng.complex(2.5);
      const double l0 = disk_level(D0, z), l1 = disk_level(D1, z), ls = disk_level(Ds, z);
      if ((l0 < -1e-9 && l1 < -1e-9 && !(ls < 0.0)) || (l0 > 1e-9 && l1 > 1e-9 && !(ls > 0.0))) ++violations;
    }
  }
  c.require(violations == 0, "arc sandwich");
  c.detail << ", sandwich violations " << violations << "/10000";
}

void horoball_criterion(Check& c) {
  Rng rng(1002);
  double worst = 0.0;
  for (int i = 0; i < 300; ++i) {
    const OrientedDisk D = testutil::random_disk(rng);
    const Complex y = testutil::random_interior_point(rng, D);
    worst = std::max(worst, rel(inscribed_horoball(D, y).curvature(), disk_area_form(D, y)));
  }
  c.require(worst <= 1e-9, "calibration identity");
  double equi = 0.0;
  for (int i = 0; i < 300; ++i) {
    const MobiusMap m = testutil::random_mobius(rng);
    const Complex y = rng.complex();
    const IdealPoint my = m(y);
    if (my.is_infinite()) continue;
    const double w = rng.uniform(0.1, 5.0);
    const MinkowskiVec a = horoball_make(y, w).transformed(m).scaled_lift();
    const MinkowskiVec b = horoball_make(my, w / std::norm(m.chart_derivative(y))).scaled_lift();
    equi = std::max(equi, (a - b).cwiseAbs().maxCoeff() / (1.0 + b.cwiseAbs().maxCoeff()));
  }
  c.require(equi <= 1e-8, "horoball equivariance");
  c.detail << "calibration rel err " << worst << ", equivariance err " << equi;
}

void kp_criterion(Check& c) {
  Rng rng(1003);
  double worst = 0.0;
  int domains = 0;
  while (domains < 100) {
    const auto P = testutil::random_ideal_set(rng, static_cast<std::size_t>(rng.integer(2, 8)));
    const FiniteComplementDomain dom(P);
    const Complex x = random_outside(rng, dom);
    ++domains;
    worst = std::max(worst, rel(kp_form(dom, x), oracle::kp_bruteforce(testutil::to_oracle(P), x)));
  }
  c.require(worst <= 1e-6, "oracle equivalence");
  int mono = 0;
  for (int i = 0; i < 300; ++i) {
    const auto P = testutil::random_ideal_set(rng, static_cast<std::size_t>(rng.integer(2, 6)));
    const FiniteComplementDomain dom(P);
    const FiniteComplementDomain bigger = dom.with_added({rng.complex(1.5)});
    const Complex x = random_outside(rng, bigger);
    if (!(kp_form(dom, x) <= kp_form(bigger, x) + 1e-10)) ++mono;
  }
  c.require(mono == 0, "monotonicity");
  std::vector<IdealPoint> roots;
  for (int k = 0; k < 3; ++k) roots.emplace_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0));
  const double v1 = kp_form(FiniteComplementDomain({0.0, IdealPoint::infinity()}), 1.0);
  const double v2 = kp_form(FiniteComplementDomain(roots), 0.0);
  c.require(std::abs(v1 - 1.0) <= 1e-8 && std::abs(v2 - 4.0) <= 1e-8, "known values");
  c.detail << "oracle rel err " << worst << " on 100 domains, monotonicity violations " << mono << ", kp(C*,1) = " << v1
           << ", kp(cube roots,0) = " << v2;
}

void height_criterion(Check& c) {
  Rng rng(1004);
  double worst = 0.0;
  int cases = 0;
  while (cases < 100) {
    const auto P = testutil::random_ideal_set(rng, static_cast<std::size_t>(rng.integer(2, 6)));
    const EndOverDomain E{FiniteComplementDomain(P)};
    const HPoint x = testutil::random_point(rng);
    ++cases;
    const double h = end_height(E, x);
    worst = std::max(worst, std::abs(h - oracle::height_sampled_poles(testutil::to_oracle(P), x.vec(), 5000 + cases)));
  }
  c.require(worst <= 1e-4, "sampled-pole oracle");
  const double h = end_height(EndOverDomain(FiniteComplementDomain({0.0, IdealPoint::infinity()})), from_uhs({1.0, 1.0}));
  const double err = std::abs(h - std::acosh(std::sqrt(2.0)));
  c.require(err <= 1e-9, "closed form");
  c.detail << "oracle abs err " << worst << " on 100 cases, closed-form err " << err;
}

void dynamics_criterion(Check& c) {
  Rng rng(1005);
  int rays = 0, not_increasing = 0, not_decaying = 0;
  double worst_final = 0.0;
  while (rays < 100) {
    const auto P = testutil::random_ideal_set(rng, static_cast<std::size_t>(rng.integer(2, 6)));
    const EndOverDomain E{FiniteComplementDomain(P)};
    const HPoint x = testutil::random_point(rng);
    if (end_height(E, x) < 0.05) continue;
    const EndProjection p = end_project(E, x);
    MinkowskiVec v = tangent_unit(x, MinkowskiVec(rng.normal(), rng.normal(), rng.normal(), rng.normal()));
    if (minkowski_inner(v, p.gradient) < 0.0) v = -v;
    if (rays % 4 == 0) v = horizontal(x, p.gradient, rng.uniform(0.0, 3.2));
    ++rays;
    const RayTrace tr = end_trace_geodesic(E, x, v, 12.0, 0.1);
    bool inc = true, dec = true;
    for (std::size_t k = 2; k < tr.samples.size(); ++k)
      if (!(tr.samples[k].height > tr.samples[k - 1].height)) inc = false;
    for (std::size_t k = 1; k < tr.samples.size(); ++k)
      if (tr.samples[k].horizontal_speed > tr.samples[k - 1].horizontal_speed + 1e-12) dec = false;
    const double final_speed = tr.samples.back().horizontal_speed;
    worst_final = std::max(worst_final, final_speed);
    if (final_speed >= 1e-3) dec = false;
    not_increasing += !inc;
    not_decaying += !dec;
  }
  c.require(not_increasing == 0, "height increasing along rays");
  c.require(not_decaying == 0, "horizontal speed decay");
  int outside = 0, checks = 0;
  while (checks < 1000) {
    const auto P = testutil::random_ideal_set(rng, static_cast<std::size_t>(rng.integer(2, 6)));
    const EndOverDomain E{FiniteComplementDomain(P)};
    const HPoint x = testutil::random_point(rng);
    if (end_height(E, x) <= 1e-9) continue;
    ++checks;
    if (!end_horoball_check(E, x).inside) ++outside;
  }
  c.require(outside == 0, "horoball containment");
  c.detail << "rays not increasing " << not_increasing << "/100, not decaying " << not_decaying
           << "/100 (max speed at t=12: " << worst_final << "), horoball failures " << outside << "/1000";
}

void hessian_criterion(Check& c) {
  const double eps = 1e-3;
  Rng rng(1006);
  int points = 0, probes = 0, ridges = 0, out_of_band = 0, no_min = 0;
  while (points < 100) {
    const auto P = testutil::random_ideal_set(rng, static_cast<std::size_t>(rng.integer(2, 6)));
    const EndOverDomain E{FiniteComplementDomain(P)};
    const HPoint x = testutil::random_point(rng);
    const double h = end_height(E, x);
    if (h < 0.05) continue;
    ++points;
    const MinkowskiVec grad = end_project(E, x).gradient;
    double lowest = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 64; ++k) {
      const HessianProbe pr = end_hessian_probe(E, x, horizontal(x, grad, std::numbers::pi * k / 64.0), eps);
      if (pr.ridge) {
        ++ridges;
        continue;
      }
      ++probes;
      if (pr.value < std::tanh(h) - 1e-2 || pr.value > 1.0 / std::tanh(h) + 1e-2) ++out_of_band;
      lowest = std::min(lowest, pr.value);
    }
    if (!(lowest <= std::tanh(h) + 1e-2)) ++no_min;
  }
  c.require(out_of_band == 0, "probe band");
  c.require(no_min == 0, "directional minimum");
  c.detail << probes << " probes at 100 points (" << ridges << " ridge probes excluded), out of band " << out_of_band
           << ", points without a tanh direction " << no_min;
}

void schwarzian_criterion(Check& c) {
  Rng rng(1007);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Jet z = Jet::variable(Complex(rng.uniform(-1.0, 1.0), rng.uniform(-3.2, 3.2)), 10);
    const Jet d = schwarzian_jet(exp(exp(z))) + exp(z) * cosh(z);
    double n2 = 0.0;
    for (const Complex& ck : d.coefficients()) n2 += std::norm(ck);
    worst = std::max(worst, std::sqrt(n2));
  }
  c.require(worst <= 1e-10, "exp(exp z) identity");

  double inv = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Jet phi = testutil::random_polynomial_jet(rng);
    inv = std::max(inv, mobius_invariance_check(phi, testutil::random_mobius_away(rng, phi.value())));
  }
  c.require(inv <= 1e-9, "Moebius invariance");

  const HolomorphicField f = HolomorphicField::from_function([](const Jet& w) { return sin(w) + 0.5 * w * w; });
  const SchwarzianNormalization n{0.0, 0.3, 1.0, 0.2};
  double trip = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Complex w0 = rng.complex(0.4);
    const auto phi = [&](Complex w) { return schwarzian_solve(f, {w0, w}, n).end().phi.value(); };
    const auto cf = oracle::cauchy_coefficients(phi, w0, 0.25, 3, 32);
    const Complex S = 6.0 * cf[3] / cf[1] - 6.0 * cf[2] * cf[2] / (cf[1] * cf[1]);
    trip = std::max(trip, std::abs(S - f.value(w0)));
  }
  c.require(trip <= 1e-6, "round trip");

  const HolomorphicField g = HolomorphicField::from_function([](const Jet& w) { return -exp(w) * cosh(w); });
  const double e = std::numbers::e;
  const SchwarzianNormalization ne{0.0, e, e, 2.0 * e};
  const Complex period(0.0, 2.0 * std::numbers::pi);
  double per = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex z(rng.uniform(-1.0, 0.5), rng.uniform(-2.0, 2.0));
    const Complex a = schwarzian_solve(g, {z}, ne).end().phi.value();
    const Complex b = schwarzian_solve(g, {z, z + period}, ne).end().phi.value();
    per = std::max(per, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  c.require(per <= 1e-6, "periodicity");
  c.detail << "identity residual " << worst << ", invariance " << inv << ", round trip " << trip << ", periodicity "
           << per;
}

void flow_criterion(Check& c) {
  Rng rng(1008);
  double diff = 0.0;
  int trapped_fail = 0, states = 0;
  while (states < 100) {
    Eigen::Matrix2d B;
    B << rng.normal(), rng.normal(), rng.normal(), rng.normal();
    const Eigen::Matrix2d A0 = B * B.transpose() + 0.05 * Eigen::Matrix2d::Identity();
    const double k = A0.determinant();
    if (!(k < 1.0)) continue;
    ++states;
    for (double t = 0.0; t <= 5.0 + 1e-12; t += 0.5) {
      const ShapeFlowResult cf = shape_flow(A0, t), rk = shape_flow(A0, t, FlowMethod::rk4);
      diff = std::max(diff, (cf.A - rk.A).cwiseAbs().maxCoeff());
      if (t > 0.0 && !(k < cf.K && cf.K < 1.0)) ++trapped_fail;
    }
  }
  c.require(diff <= 1e-8, "closed form vs rk4");
  c.require(trapped_fail == 0, "strict trapping");
  double ones = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    Eigen::Matrix2d A0 = Eigen::Matrix2d::Zero();
    A0.diagonal() << std::tanh(r), 1.0 / std::tanh(r);
    for (double t = 0.0; t <= 5.0; t += 0.25) {
      ones = std::max(ones, std::abs(shape_flow(A0, t).K - 1.0));
      ones = std::max(ones, std::abs(shape_flow(A0, t, FlowMethod::rk4).K - 1.0));
    }
  }
  c.require(ones <= 1e-9, "K = 1 family");
  c.detail << "closed vs rk4 " << diff << ", trapping failures " << trapped_fail << ", |K - 1| " << ones;
}

void apriori_criterion(Check& c) {
  const OrientedDisk unit = disk_from_circle(0.0, 1.0);
  AprioriOptions opts;
  opts.tol = 1e-8;
  double gap = 0.0, level = std::numeric_limits<double>::infinity(), excess = -1.0;
  bool detected = true;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const ExplicitSurface S = ExplicitSurface::plane_equidistant(unit, r);
    const auto grid = equidistant_grid(S);
    const AprioriReport rep = surface_apriori_check(S, grid, r, opts);
    c.require(grid.size() == 100, "grid size");
    c.require(rep.horoball_ok && rep.halfspace_ok && rep.curvature_ok, "estimates hold");
    gap = std::max(gap, rep.max_full_disk_gap);
    level = std::min(level, rep.min_horoball_level);
    excess = std::max(excess, rep.max_halfspace_excess);
    const AprioriReport bad = surface_apriori_check(S.offset_by(0.05), grid, r, opts);
    detected = detected && !bad.halfspace_ok && std::abs(bad.max_halfspace_excess - 0.05) < 1e-8;
  }
  c.require(gap <= 1e-8, "equality at the full disk");
  c.require(detected, "negative control");
  c.detail << "max |d - r| " << gap << ", max excess " << excess << ", min horoball level " << level
           << ", negative control " << (detected ? "detected" : "missed");
}

void functional_criterion(Check& c) {
  Rng rng(1010);
  double h = 0.0, cyl = 0.0, eq = 0.0;
  const auto sup = [](const Jet& j, Complex target) {
    double m = std::abs(j[0] - target);
    for (std::size_t k = 1; k <= j.order(); ++k) m = std::max(m, std::abs(j[k]));
    return m;
  };
  for (int i = 0; i < 20; ++i) {
    const Eigen::Vector2d u(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
    const double r = rng.uniform(0.2, 2.0);
    h = std::max(h, sup(surface_schwarzian(ExplicitSurface::horosphere(horoball_make(IdealPoint::infinity(), 1.0)), u), 0.0));
    cyl = std::max(cyl, sup(surface_schwarzian(ExplicitSurface::cylinder(0.0, IdealPoint::infinity(), r), u), -0.5));
    eq = std::max(eq, sup(surface_schwarzian(ExplicitSurface::plane_equidistant(disk_from_circle(0.0, 1.0), r), u), 0.0));
  }
  c.require(h <= 1e-10 && cyl <= 1e-10 && eq <= 1e-10, "Schwarzian values");
  c.detail << "horosphere " << h << ", cylinder " << cyl << ", equidistant " << eq;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"disk/de Sitter correctness", disks_criterion},
      {"horoball calibration", horoball_criterion},
      {"Kulkarni-Pinkall oracle equivalence", kp_criterion},
      {"height function", height_criterion},
      {"end dynamics", dynamics_criterion},
      {"Hessian bounds", hessian_criterion},
      {"Schwarzian", schwarzian_criterion},
      {"tube flow", flow_criterion},
      {"a priori estimates", apriori_criterion},
      {"surface functional values", functional_criterion},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !c.ok;
    std::printf("[%s] %2zu %s: %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, c.detail.str().c_str(),
                secs);
    std::fflush(stdout);
  }
  return failed;
}
