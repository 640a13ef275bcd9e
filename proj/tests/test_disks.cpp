#include "hypend/disks.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hypend;
using testutil::Rng;

namespace {

bool near(const MinkowskiVec& a, const MinkowskiVec& b, double tol) { return (a - b).cwiseAbs().maxCoeff() <= tol; }

oracle::Relation to_oracle(DiskRelation r) {
  switch (r) {
    case DiskRelation::overlap: return oracle::Relation::overlap;
    case DiskRelation::tangent: return oracle::Relation::tangent;
    case DiskRelation::nested: return oracle::Relation::nested;
    case DiskRelation::disjoint: return oracle::Relation::disjoint;
    case DiskRelation::covering: return oracle::Relation::covering;
    case DiskRelation::equal: return oracle::Relation::equal;
    case DiskRelation::opposite: return oracle::Relation::opposite;
  }
  return oracle::Relation::overlap;
}

}  // namespace

TEST_CASE("disk poles") {
  CHECK(near(disk_from_circle(0.0, 1.0).pole(), {0, 0, -1, 0}, 1e-15));
  CHECK(near(disk_from_line(1, 0, 0).pole(), {-1, 0, 0, 0}, 1e-15));
  CHECK(near(disk_from_circle(0.0, 1.0, CircleSide::exterior).pole(), {0, 0, 1, 0}, 1e-15));
  CHECK(near(disk_from_circle(0.0, 3.0).pole(), {0, 0, -5.0 / 3.0, 4.0 / 3.0}, 1e-15));
  CHECK(near(disk_from_line(1, 0, 0, false).pole(), {1, 0, 0, 0}, 1e-15));
  CHECK_THROWS_AS(disk_from_circle(0.0, 0.0), GeometryError);
  CHECK_THROWS_AS(disk_from_line(0, 0, 1), GeometryError);
  CHECK_THROWS_AS(OrientedDisk(MinkowskiVec(0, 0, 0, 1)), GeometryError);

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    oracle::Circle c;
    const OrientedDisk D = testutil::random_disk(rng, &c);
    CHECK(std::abs(minkowski_norm2(D.pole()) - 1.0) < 1e-12);
    for (int k = 0; k < 10; ++k) {
      const Complex z = c.c + std::polar(c.r, rng.uniform(0.0, 2.0 * std::numbers::pi));
      CHECK(std::abs(minkowski_inner(ideal_lift(z), D.pole())) <= 1e-9);
    }
    const CircleDescription d = describe(D);
    CHECK(!d.is_line);
    CHECK(std::abs(d.center - c.c) < 1e-10);
    CHECK(d.radius == doctest::Approx(c.r).epsilon(1e-10));
    CHECK((d.side == CircleSide::interior) == c.interior);
  }
  const CircleDescription l = describe(disk_from_line(2, -1, 0.5));
  CHECK(l.is_line);
  CHECK(l.line[0] / l.line[1] == doctest::Approx(-2.0));
  CHECK(l.line[2] / l.line[0] == doctest::Approx(0.25));
  CHECK(l.line[0] > 0.0);
}

TEST_CASE("disk membership") {
  const OrientedDisk unit = disk_from_circle(0.0, 1.0);
  CHECK(disk_contains(unit, 0.0) == Membership::interior);
  CHECK(disk_contains(unit, 2.0) == Membership::exterior);
  CHECK(disk_contains(unit, Complex(0.0, 1.0)) == Membership::boundary);
  CHECK(disk_contains(unit, IdealPoint::infinity()) == Membership::exterior);
  const OrientedDisk right = disk_from_line(1, 0, 0);
  CHECK(disk_contains(right, IdealPoint::infinity()) == Membership::boundary);
  CHECK(disk_contains(right, 1.0) == Membership::interior);
  CHECK(right.is_half_plane());
  CHECK(!unit.is_half_plane());
  CHECK(disk_contains(unit.reversed(), IdealPoint::infinity()) == Membership::interior);
}

TEST_CASE("disk relations") {
  const OrientedDisk unit = disk_from_circle(0.0, 1.0);
  const OrientedDisk right = disk_from_line(1, 0, 0);
  CHECK(disk_relation(unit, right) == DiskRelation::overlap);
  CHECK(minkowski_inner(unit.pole(), right.pole()) == 0.0);
  CHECK(disk_relation(unit, disk_from_circle(0.0, 3.0)) == DiskRelation::nested);
  CHECK(minkowski_inner(unit.pole(), disk_from_circle(0.0, 3.0).pole()) == doctest::Approx(5.0 / 3.0));
  CHECK(disk_relation(unit, unit.reversed()) == DiskRelation::opposite);
  CHECK(disk_relation(unit, unit) == DiskRelation::equal);
  CHECK(disk_relation(unit, disk_from_circle(2.0, 1.0)) == DiskRelation::tangent);
  CHECK(disk_relation(unit, disk_from_circle(0.5, 0.5)) == DiskRelation::tangent);
  CHECK(disk_relation(unit, disk_from_circle(3.0, 1.0)) == DiskRelation::disjoint);
  CHECK(disk_relation(unit.reversed(), disk_from_circle(3.0, 1.0).reversed()) == DiskRelation::covering);

  Rng rng(12);
  int counts[7] = {};
  for (int i = 0; i < 1000; ++i) {
    oracle::Circle a, b;
    const OrientedDisk D0 = testutil::random_disk(rng, &a);
    const OrientedDisk D1 = testutil::random_disk(rng, &b);
    const DiskRelation r = disk_relation(D0, D1);
    CHECK(to_oracle(r) == oracle::circle_relation(a, b));
    ++counts[static_cast<int>(r)];
  }
  CHECK(counts[static_cast<int>(DiskRelation::overlap)] > 50);
  CHECK(counts[static_cast<int>(DiskRelation::nested)] > 20);
  CHECK(counts[static_cast<int>(DiskRelation::disjoint)] > 20);
}

TEST_CASE("geodesic arcs of disks") {
  const OrientedDisk re = disk_from_line(1, 0, 0);
  const OrientedDisk im = disk_from_line(0, 1, 0);
  CHECK(near(disk_geodesic_arc(re, im, 0.0).pole(), re.pole(), 1e-15));
  CHECK(near(disk_geodesic_arc(re, im, 1.0).pole(), im.pole(), 1e-15));
  CHECK(near(disk_geodesic_arc(re, im, 0.5).pole(), MinkowskiVec(-1, -1, 0, 0) / std::sqrt(2.0), 1e-15));
  CHECK_THROWS_AS(disk_geodesic_arc(re, re.reversed(), 0.5), GeometryError);
  CHECK_THROWS_AS(disk_geodesic_arc(disk_from_circle(0.0, 1.0), disk_from_circle(0.0, 3.0), 0.5), GeometryError);

  // D0 n D1 <= D(s) <= D0 u D1
  Rng rng(13);
  int pairs = 0;
  while (pairs < 200) {
    const OrientedDisk D0 = testutil::random_disk(rng), D1 = testutil::random_disk(rng);
    if (disk_relation(D0, D1) != DiskRelation::overlap) continue;
    ++pairs;
    for (int k = 0; k < 50; ++k) {
      const OrientedDisk Ds = disk_geodesic_arc(D0, D1, rng.uniform());
      const Complex z = rng.complex(2.5);
      const double l0 = disk_level(D0, z), l1 = disk_level(D1, z), ls = disk_level(Ds, z);
      if (l0 < -1e-9 && l1 < -1e-9) CHECK(ls < 0.0);
      if (l0 > 1e-9 && l1 > 1e-9) CHECK(ls > 0.0);
    }
  }
}

TEST_CASE("area form of disks") {
  CHECK(euclidean_disk_area_form(1.0, 0.0) == 4.0);
  CHECK(euclidean_disk_area_form(2.0, 1.0) == doctest::Approx(16.0 / 9.0));
  CHECK(disk_area_form(disk_from_line(0, 1, 0), Complex(0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(disk_area_form(disk_from_circle(0.0, 1.0), 0.0) == doctest::Approx(4.0));
  CHECK(disk_area_form(disk_from_circle(0.0, 2.0), 1.0) == doctest::Approx(16.0 / 9.0));
  CHECK_THROWS_AS(disk_area_form(disk_from_circle(0.0, 1.0), 2.0), GeometryError);
  // exterior of the unit disk at infinity, chart w = 1/z: the unit disk again
  CHECK(disk_area_form(disk_from_circle(0.0, 1.0, CircleSide::exterior), IdealPoint::infinity()) == doctest::Approx(4.0));

  Rng rng(14);
  for (int i = 0; i < 1000; ++i) {
    oracle::Circle c;
    const OrientedDisk D = testutil::random_disk(rng, &c);
    const Complex z = testutil::random_interior_point(rng, D);
    const double direct = disk_area_form(D, z);
    CHECK(disk_area_form_transported(D, z) == doctest::Approx(direct).epsilon(1e-10));
    if (c.interior) CHECK(euclidean_disk_area_form(c.r, std::abs(z - c.c)) == doctest::Approx(direct).epsilon(1e-10));
  }
  // 2-form equivariance
  for (int i = 0; i < 300; ++i) {
    const OrientedDisk D = testutil::random_disk(rng);
    const Complex z = testutil::random_interior_point(rng, D);
    const MobiusMap m = testutil::random_mobius(rng);
    const IdealPoint mz = m(z);
    const double lhs = disk_area_form(D.transformed(mobius_lift(m)), mz) * std::norm(m.chart_derivative(z));
    CHECK(lhs == doctest::Approx(disk_area_form(D, z)).epsilon(1e-8));
  }
}

TEST_CASE("area form along geodesic arcs") {
  // omega^{-1/2} is strictly concave along the arc, i.e. omega is strictly convex.
  Rng rng(15);
  int cases = 0;
  while (cases < 100) {
    const OrientedDisk D0 = testutil::random_disk(rng), D1 = testutil::random_disk(rng);
    if (disk_relation(D0, D1) != DiskRelation::overlap) continue;
    const Complex z = rng.complex(2.0);
    if (!(disk_level(D0, z) < -1e-3 && disk_level(D1, z) < -1e-3)) continue;
    ++cases;
    const double h = 1e-3;
    for (int k = 1; k < 20; ++k) {
      const double s = k / 20.0;
      const auto g = [&](double t) { return 1.0 / std::sqrt(disk_area_form(disk_geodesic_arc(D0, D1, t), z)); };
      const auto w = [&](double t) { return disk_area_form(disk_geodesic_arc(D0, D1, t), z); };
      CHECK(g(s + h) - 2.0 * g(s) + g(s - h) < 0.0);
      CHECK(w(s + h) - 2.0 * w(s) + w(s - h) > 0.0);
    }
  }
}

TEST_CASE("half-space distance") {
  const OrientedDisk unit = disk_from_circle(0.0, 1.0);
  CHECK(halfspace_signed_distance(unit, HPoint()) == 0.0);
  const HPoint inside(MinkowskiVec(0, 0, std::sinh(1.0), std::cosh(1.0)));
  const HPoint outside(MinkowskiVec(0, 0, -std::sinh(1.0), std::cosh(1.0)));
  CHECK(halfspace_signed_distance(unit, inside) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(halfspace_signed_distance(unit, outside) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(in_shrunk_halfspace(unit, inside, 0.5));
  CHECK(!in_shrunk_halfspace(unit, inside, 1.5));
  // the inside point is UHS (0, 0, e^{-1}), below the unit hemisphere
  CHECK(to_uhs(inside).h == doctest::Approx(std::exp(-1.0)));

  Rng rng(16);
  for (int i = 0; i < 300; ++i) {
    const OrientedDisk D = testutil::random_disk(rng);
    const HPoint x = testutil::random_point(rng);
    const LorentzMatrix L = mobius_lift(testutil::random_mobius(rng));
    CHECK(halfspace_signed_distance(D.transformed(L), apply(L, x)) ==
          doctest::Approx(halfspace_signed_distance(D, x)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("interior and exterior points") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const OrientedDisk D = testutil::random_disk(rng);
    CHECK(disk_contains(D, disk_interior_point(D)) == Membership::interior);
    CHECK(disk_contains(D, disk_exterior_point(D)) == Membership::exterior);
  }
}
