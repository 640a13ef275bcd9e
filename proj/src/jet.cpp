#include "hypend/jet.hpp"

#include "hypend/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypend {

namespace {

void require_same_base(const Jet& a, const Jet& b) {
  if (std::abs(a.basepoint() - b.basepoint()) > 1e-14 * (1.0 + std::abs(a.basepoint())))
    throw std::invalid_argument("jets at different basepoints");
}

}  // namespace

Jet::Jet(Complex basepoint, std::vector<Complex> coefficients) : z0_(basepoint), c_(std::move(coefficients)) {
  if (c_.empty()) throw std::invalid_argument("jet needs at least one coefficient");
}

Jet Jet::constant(Complex basepoint, Complex c, std::size_t order) {
  std::vector<Complex> k(order + 1);
  k[0] = c;
  return {basepoint, std::move(k)};
}

Jet Jet::variable(Complex basepoint, std::size_t order) {
  std::vector<Complex> k(order + 1);
  k[0] = basepoint;
  if (order >= 1) k[1] = 1.0;
  return {basepoint, std::move(k)};
}

Jet::Complex Jet::derivative_at(std::size_t k) const {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return c_.at(k) * f;
}

Jet Jet::derivative() const {
  if (c_.size() < 2) throw std::invalid_argument("derivative of an order-0 jet");
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t k = 0; k + 1 < c_.size(); ++k) d[k] = static_cast<double>(k + 1) * c_[k + 1];
  return {z0_, std::move(d)};
}

Jet Jet::truncated(std::size_t order) const {
  std::vector<Complex> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return {z0_, std::move(c)};
}

Jet& Jet::operator+=(const Jet& o) {
  require_same_base(*this, o);
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  require_same_base(*this, o);
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_base(a, b);
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  std::vector<Jet::Complex> r(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j) r[k] += a.c_[j] * b.c_[k - j];
  return {a.z0_, std::move(r)};
}

Jet operator/(const Jet& a, const Jet& b) {
  require_same_base(a, b);
  if (b.c_[0] == 0.0) throw GeometryError("jet division by a function vanishing at the basepoint");
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  std::vector<Jet::Complex> q(n);
  for (std::size_t k = 0; k < n; ++k) {
    Jet::Complex s = a.c_[k];
    for (std::size_t j = 1; j <= k; ++j) s -= b.c_[j] * q[k - j];
    q[k] = s / b.c_[0];
  }
  return {a.z0_, std::move(q)};
}

Jet operator+(Jet a, Jet::Complex s) {
  a.c_[0] += s;
  return a;
}

Jet operator*(Jet a, Jet::Complex s) {
  for (auto& c : a.c_) c *= s;
  return a;
}

Jet operator/(Jet::Complex s, const Jet& a) { return Jet::constant(a.basepoint(), s, a.order()) / a; }

Jet exp(const Jet& f) {
  // g = exp f satisfies g' = f' g: k g_k = sum_{j=1}^k j f_j g_{k-j}.
  const auto& c = f.coefficients();
  std::vector<std::complex<double>> g(c.size());
  g[0] = std::exp(c[0]);
  for (std::size_t k = 1; k < c.size(); ++k) {
    std::complex<double> s{};
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * c[j] * g[k - j];
    g[k] = s / static_cast<double>(k);
  }
  return {f.basepoint(), std::move(g)};
}

Jet log(const Jet& f) {
  // f g' = f': k f_0 g_k = k f_k - sum_{j=1}^{k-1} j g_j f_{k-j}.
  const auto& c = f.coefficients();
  if (c[0] == 0.0) throw GeometryError("log of a function vanishing at the basepoint");
  std::vector<std::complex<double>> g(c.size());
  g[0] = std::log(c[0]);
  for (std::size_t k = 1; k < c.size(); ++k) {
    std::complex<double> s = static_cast<double>(k) * c[k];
    for (std::size_t j = 1; j < k; ++j) s -= static_cast<double>(j) * g[j] * c[k - j];
    g[k] = s / (static_cast<double>(k) * c[0]);
  }
  return {f.basepoint(), std::move(g)};
}

Jet sinh(const Jet& f) {
  const Jet e = exp(f);
  const Jet em = exp(-f);
  return (e - em) * 0.5;
}

Jet cosh(const Jet& f) {
  const Jet e = exp(f);
  const Jet em = exp(-f);
  return (e + em) * 0.5;
}

Jet sin(const Jet& f) {
  const std::complex<double> i(0.0, 1.0);
  return (exp(f * i) - exp(f * -i)) * (-0.5 * i);
}

Jet cos(const Jet& f) {
  const std::complex<double> i(0.0, 1.0);
  return (exp(f * i) + exp(f * -i)) * 0.5;
}

Jet pow(const Jet& f, int n) {
  if (n < 0) return 1.0 / pow(f, -n);
  Jet r = Jet::constant(f.basepoint(), 1.0, f.order());
  Jet b = f;
  for (unsigned k = static_cast<unsigned>(n); k > 0; k >>= 1) {
    if (k & 1U) r *= b;
    if (k > 1) b *= b;
  }
  return r;
}

Jet pow(const Jet& f, std::complex<double> a) {
  if (a.imag() == 0.0 && a.real() == std::round(a.real()) && std::abs(a.real()) < 1e6)
    return pow(f, static_cast<int>(a.real()));
  return exp(log(f) * a);
}

Jet compose(const Jet& outer, const Jet& inner) {
  if (std::abs(outer.basepoint() - inner.value()) > 1e-12 * (1.0 + std::abs(inner.value())))
    throw std::invalid_argument("outer jet is not based at the inner value");
  const std::size_t n = std::min(outer.order(), inner.order());
  // Horner in the nilpotent increment h = inner - inner(0).
  std::vector<std::complex<double>> dc = inner.truncated(n).coefficients();
  dc[0] = 0.0;
  const Jet h(inner.basepoint(), std::move(dc));
  Jet r = Jet::constant(inner.basepoint(), outer[n], n);
  for (std::size_t k = n; k-- > 0;) r = r * h + outer[k];
  return r;
}

}  // namespace hypend
