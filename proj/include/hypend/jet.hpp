#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hypend {

/// Truncated Taylor series of a holomorphic function at a basepoint:
/// f(z0 + h) = sum_k c_k h^k + O(h^{N+1}).
///
/// Arithmetic between jets truncates to the smaller order, so every result is
/// exact to its own order.
class Jet {
 public:
  using Complex = std::complex<double>;

  Jet() = default;
  Jet(Complex basepoint, std::vector<Complex> coefficients);

  /// The constant c to the given order.
  static Jet constant(Complex basepoint, Complex c, std::size_t order);
  /// The coordinate function z.
  static Jet variable(Complex basepoint, std::size_t order);

  Complex basepoint() const { return z0_; }
  std::size_t order() const { return c_.size() - 1; }
  const std::vector<Complex>& coefficients() const { return c_; }
  Complex operator[](std::size_t k) const { return c_[k]; }
  Complex value() const { return c_[0]; }
  /// k-th derivative at the basepoint.
  Complex derivative_at(std::size_t k) const;

  /// Jet of f'; one order lower.
  Jet derivative() const;
  Jet truncated(std::size_t order) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet operator-() const;

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, Complex s);
  friend Jet operator+(Complex s, Jet a) { return std::move(a) + s; }
  friend Jet operator-(Jet a, Complex s) { return std::move(a) + (-s); }
  friend Jet operator-(Complex s, const Jet& a) { return -a + s; }
  friend Jet operator*(Jet a, Complex s);
  friend Jet operator*(Complex s, Jet a) { return std::move(a) * s; }
  friend Jet operator/(Jet a, Complex s) { return std::move(a) * (1.0 / s); }
  friend Jet operator/(Complex s, const Jet& a);

 private:
  Complex z0_{};
  std::vector<Complex> c_{Complex{}};
};

Jet exp(const Jet& f);
/// Principal branch at the basepoint value; throws GeometryError at 0.
Jet log(const Jet& f);
Jet sinh(const Jet& f);
Jet cosh(const Jet& f);
Jet sin(const Jet& f);
Jet cos(const Jet& f);
Jet pow(const Jet& f, int n);
/// f^a through exp(a log f).
Jet pow(const Jet& f, std::complex<double> a);

/// Composition g(f) where g is given by its jet at f(basepoint).
Jet compose(const Jet& outer, const Jet& inner);

}  // namespace hypend
