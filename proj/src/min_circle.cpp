#include "hypend/min_circle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hypend {

namespace {

using Pt = std::complex<double>;

struct Circle {
  Pt c;
  double r = 0.0;
  std::vector<std::size_t> support;
};

Circle from_two(const Pt& a, const Pt& b, std::size_t ia, std::size_t ib) {
  return {0.5 * (a + b), 0.5 * std::abs(a - b), {ia, ib}};
}

// Circumcircle; falls back to the widest pair for (nearly) collinear input.
Circle from_three(const Pt& a, const Pt& b, const Pt& c, std::size_t ia, std::size_t ib, std::size_t ic) {
  const Pt ab = b - a;
  const Pt ac = c - a;
  const double d = 2.0 * (ab.real() * ac.imag() - ab.imag() * ac.real());
  const double scale = std::max(std::norm(ab), std::norm(ac));
  if (std::abs(d) <= 1e-14 * scale) {
    Circle best = from_two(a, b, ia, ib);
    for (const Circle& cand : {from_two(a, c, ia, ic), from_two(b, c, ib, ic)})
      if (cand.r > best.r) best = cand;
    return best;
  }
  const double nb = std::norm(ab);
  const double nc = std::norm(ac);
  const Pt off((ac.imag() * nb - ab.imag() * nc) / d, (ab.real() * nc - ac.real() * nb) / d);
  return {a + off, std::abs(off), {ia, ib, ic}};
}

bool inside(const Circle& C, const Pt& p, double eps) { return std::abs(p - C.c) <= C.r * (1.0 + eps) + eps; }

}  // namespace

EnclosingCircle min_enclosing_circle(std::span<const Pt> points, std::uint64_t seed, double rel_eps) {
  if (points.empty()) throw std::invalid_argument("min_enclosing_circle: empty point set");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  double extent = 0.0;
  for (const Pt& p : points) extent = std::max(extent, std::abs(p - points[0]));
  const double eps = rel_eps * std::max(extent, 1e-300);

  const auto P = [&](std::size_t k) -> const Pt& { return points[order[k]]; };
  Circle C{P(0), 0.0, {order[0]}};
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (inside(C, P(i), eps)) continue;
    C = Circle{P(i), 0.0, {order[i]}};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(C, P(j), eps)) continue;
      C = from_two(P(i), P(j), order[i], order[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (inside(C, P(k), eps)) continue;
        C = from_three(P(i), P(j), P(k), order[i], order[j], order[k]);
      }
    }
  }
  std::sort(C.support.begin(), C.support.end());
  return {C.c, C.r, C.support};
}

}  // namespace hypend
