#pragma once

#include "hypend/jet.hpp"

#include <memory>
#include <string>

namespace hypend {

/// A holomorphic expression in one variable z, evaluated on jets.
///
/// Grammar: numbers, `i`, `pi`, `z`, + - * / ^ (right associative), and the
/// functions exp, log, sinh, cosh, sin, cos, sqrt (case-insensitive).
/// Parse errors throw std::invalid_argument.
class Expression {
 public:
  static Expression parse(const std::string& text);

  Jet evaluate(const Jet& z) const;
  Jet jet_at(std::complex<double> z0, std::size_t order) const { return evaluate(Jet::variable(z0, order)); }
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace hypend
