#include "hypend/expression.hpp"
#include "hypend/schwarzian.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hypend;
using testutil::Rng;

namespace {

const Complex I(0.0, 1.0);

double max_dev(const Jet& a, const Jet& b) {
  double d = 0.0;
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t k = 0; k <= n; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

HolomorphicField exp_cosh_field() {
  return HolomorphicField::from_function([](const Jet& z) { return -exp(z) * cosh(z); });
}

SchwarzianNormalization exp_exp_normalization() {
  const double e = std::numbers::e;
  return {0.0, e, e, 2.0 * e};
}

Complex solve_at(const HolomorphicField& f, const SchwarzianNormalization& n, std::vector<Complex> path) {
  const SchwarzianSolution s = schwarzian_solve(f, path, n);
  return s.end().phi.value();
}

// The Moebius map sending z1, z2, z3 to w1, w2, w3.
MobiusMap fit_mobius(const Complex z[3], const Complex w[3]) {
  const auto to_01inf = [](const Complex p[3]) {
    return MobiusMap(p[1] - p[2], -p[0] * (p[1] - p[2]), p[1] - p[0], -p[2] * (p[1] - p[0]));
  };
  return to_01inf(w).inverse() * to_01inf(z);
}

}  // namespace

TEST_CASE("jet arithmetic") {
  const Jet z = Jet::variable(0.3, 10);
  const Jet e = exp(z);
  for (std::size_t k = 0; k <= 10; ++k)
    CHECK(std::abs(e[k] - std::exp(0.3) / std::tgamma(static_cast<double>(k) + 1.0)) < 1e-14);
  CHECK(max_dev(log(exp(z)), z) < 1e-13);
  CHECK(max_dev(cosh(z) * cosh(z) - sinh(z) * sinh(z), Jet::constant(0.3, 1.0, 10)) < 1e-13);
  CHECK(max_dev((z * z) / z, z) < 1e-13);
  CHECK(max_dev(pow(z, 3), z * z * z) < 1e-13);
  CHECK(max_dev(compose(exp(Jet::variable(z.value(), 10)), z), e) < 1e-13);
  CHECK(std::abs(sin(z).derivative()[0] - std::cos(0.3)) < 1e-15);
  CHECK_THROWS(log(Jet::variable(0.0, 4)));

  Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const Complex z0 = rng.complex(0.5);
    const Jet w = Jet::variable(z0, 8);
    const Jet f = exp(sin(w)) / (2.0 + cos(w));
    const auto c = oracle::cauchy_coefficients(
        [](Complex x) { return std::exp(std::sin(x)) / (2.0 + std::cos(x)); }, z0, 0.3, 8, 64);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(std::abs(f[k] - c[k]) < 1e-9);
  }
}

TEST_CASE("expressions") {
  const Jet z = Jet::variable(0.2, 6);
  CHECK(max_dev(Expression::parse("-exp(z)*cosh(z)").evaluate(z), -exp(z) * cosh(z)) < 1e-14);
  CHECK(max_dev(Expression::parse("z^2 + 2*z - 1/2").evaluate(z), z * z + 2.0 * z - 0.5) < 1e-14);
  CHECK(max_dev(Expression::parse("EXP(i*pi*z)").evaluate(z), exp(I * std::numbers::pi * z)) < 1e-14);
  CHECK(max_dev(Expression::parse("2^3^2").evaluate(z), Jet::constant(0.2, 512.0, 6)) < 1e-10);
  CHECK(max_dev(Expression::parse("sqrt(z+1)^2").evaluate(z), z + 1.0) < 1e-13);
  CHECK_THROWS_AS(Expression::parse("exp(z"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("w + 1"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("tan(z)"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse(""), std::invalid_argument);
}

TEST_CASE("schwarzian examples") {
  const Jet z = Jet::variable(0.7, 8);
  const Jet s_id = schwarzian_jet(z);
  for (std::size_t k = 0; k <= s_id.order(); ++k) CHECK(std::abs(s_id[k]) < 1e-14);
  const Jet s_exp = schwarzian_jet(exp(z));
  CHECK(s_exp.order() == 5);
  CHECK(std::abs(s_exp[0] + 0.5) < 1e-13);
  for (std::size_t k = 1; k <= s_exp.order(); ++k) CHECK(std::abs(s_exp[k]) < 1e-13);

  for (const Complex z0 : {Complex(0.0), Complex(0.4, -1.1), Complex(-0.8, 2.0)}) {
    const Jet w = Jet::variable(z0, 10);
    CHECK(max_dev(schwarzian_jet(exp(exp(w))), -exp(w) * cosh(w)) < 1e-10);
  }
  CHECK_THROWS_AS(schwarzian_jet(z * z - 1.4 * z), GeometryError);
  CHECK_THROWS(schwarzian_jet(Jet::variable(0.0, 3)));
}

TEST_CASE("schwarzian mobius invariance") {
  const Jet z = Jet::variable(0.1, 8);
  CHECK(mobius_invariance_check(exp(z), MobiusMap::identity()) < 1e-15);
  CHECK_THROWS_AS(mobius_invariance_check(z, MobiusMap(0.0, 1.0, 1.0, -0.1)), GeometryError);
  Rng rng(52);
  for (int i = 0; i < 100; ++i) CHECK(mobius_invariance_check(exp(z), testutil::random_mobius_away(rng, exp(z).value())) <= 1e-10);
  for (int i = 0; i < 500; ++i) {
    const Jet phi = testutil::random_polynomial_jet(rng);
    CHECK(mobius_invariance_check(phi, testutil::random_mobius_away(rng, phi.value())) <= 1e-9);
  }
}

TEST_CASE("schwarzian solve examples") {
  // f = 0 gives the normalized Moebius map itself
  const HolomorphicField zero = HolomorphicField::constant(0.0);
  for (const Complex w : {Complex(1.0, 2.0), Complex(-3.0, 0.5)})
    CHECK(std::abs(solve_at(zero, {0.0, 0.0, 1.0, 0.0}, {w * 0.5, w}) - w) < 1e-9);

  const HolomorphicField half = HolomorphicField::constant(-0.5);
  Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    const Complex w = std::polar(2.0 * std::sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * std::numbers::pi));
    const Complex phi = solve_at(half, {0.0, 1.0, 1.0, 1.0}, {w});
    CHECK(std::abs(phi - std::exp(w)) < 1e-8 * std::max(1.0, std::abs(std::exp(w))));
  }

  const SchwarzianSolution s = schwarzian_solve(exp_cosh_field(), {2.0 * std::numbers::pi * I}, exp_exp_normalization());
  CHECK(std::abs(s.end().phi.value() - std::numbers::e) < 1e-6);
  CHECK(s.end().wronskian_drift < 1e-8);

  CHECK_THROWS_AS(schwarzian_solve(half, {1.0}, {0.0, 0.0, 0.0, 0.0}), GeometryError);
  const HolomorphicField punctured = HolomorphicField::from_function(
      [](const Jet& w) { return 1.0 / w; }, [](Complex w) { return std::abs(w) > 0.1; });
  CHECK_THROWS_AS(schwarzian_solve(punctured, {Complex(-1.0, 0.05)}, {1.0, 0.0, 1.0, 0.0}), GeometryError);
}

TEST_CASE("schwarzian solve periodicity") {
  const HolomorphicField f = exp_cosh_field();
  const SchwarzianNormalization n = exp_exp_normalization();
  Rng rng(54);
  for (int i = 0; i < 20; ++i) {
    const Complex z(rng.uniform(-1.0, 0.5), rng.uniform(-2.0, 2.0));
    const Complex a = solve_at(f, n, {z});
    const Complex b = solve_at(f, n, {z, z + 2.0 * std::numbers::pi * I});
    CHECK(std::abs(a - b) < 1e-6 * std::max(1.0, std::abs(a)));
    CHECK(std::abs(a - std::exp(std::exp(z))) < 1e-6 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("schwarzian round trip") {
  // Taylor coefficients of the solved phi from a Cauchy integral reproduce f.
  Rng rng(55);
  const HolomorphicField f = HolomorphicField::from_function([](const Jet& w) { return sin(w) + 0.5 * w * w; });
  const SchwarzianNormalization n{0.0, 0.3, 1.0, 0.2};
  for (int i = 0; i < 8; ++i) {
    const Complex w0 = rng.complex(0.4);
    const auto phi = [&](Complex w) { return solve_at(f, n, {w0, w}); };
    const auto c = oracle::cauchy_coefficients(phi, w0, 0.25, 3, 32);
    const Complex S = 6.0 * c[3] / c[1] - 6.0 * c[2] * c[2] / (c[1] * c[1]);
    CHECK(std::abs(S - f.value(w0)) < 1e-6);
  }
}

TEST_CASE("schwarzian solve path independence and Moebius freedom") {
  const HolomorphicField f = exp_cosh_field();
  const SchwarzianNormalization n = exp_exp_normalization();
  Rng rng(56);
  for (int i = 0; i < 20; ++i) {
    const Complex target(rng.uniform(-1.0, 0.5), rng.uniform(-1.5, 1.5));
    const Complex a = solve_at(f, n, {Complex(0.3, 1.0), target});
    const Complex b = solve_at(f, n, {Complex(-0.5, -1.2), Complex(0.2, -0.4), target});
    CHECK(std::abs(a - b) < 1e-6 * std::max(1.0, std::abs(a)));
  }

  const HolomorphicField g = HolomorphicField::from_function([](const Jet& w) { return 0.3 * w + Complex(0.1, 0.2); });
  const SchwarzianNormalization n1{0.0, 0.0, 1.0, 0.0}, n2{0.0, Complex(1.0, 1.0), 2.0, Complex(0.5, -0.3)};
  Complex z[3] = {Complex(0.5, 0.0), Complex(0.0, 0.7), Complex(-0.6, -0.2)};
  Complex w1[3], w2[3];
  for (int k = 0; k < 3; ++k) {
    w1[k] = solve_at(g, n1, {z[k]});
    w2[k] = solve_at(g, n2, {z[k]});
  }
  const MobiusMap m = fit_mobius(w1, w2);
  for (int k = 0; k < 20; ++k) {
    const Complex p = rng.complex(0.8);
    const Complex lhs = solve_at(g, n2, {p});
    const Complex rhs = m(solve_at(g, n1, {p})).value();
    CHECK(std::abs(lhs - rhs) < 1e-6);
  }
}
