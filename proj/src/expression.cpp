#include "hypend/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hypend {

struct Expression::Node {
  enum class Kind { constant, variable, add, sub, mul, div, pow, neg, call };
  Kind kind = Kind::constant;
  std::complex<double> value;
  std::string function;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind k, std::vector<NodePtr> args = {}, std::complex<double> v = {}, std::string fn = {}) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = k;
  n->args = std::move(args);
  n->value = v;
  n->function = std::move(fn);
  return n;
}

const std::vector<std::string>& functions() {
  static const std::vector<std::string> names = {"exp", "log", "sinh", "cosh", "sin", "cos", "sqrt"};
  return names;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (accept('+')) n = make(Kind::add, {n, term()});
      else if (accept('-')) n = make(Kind::sub, {n, term()});
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*')) n = make(Kind::mul, {n, unary()});
      else if (accept('/')) n = make(Kind::div, {n, unary()});
      else return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Kind::neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Kind::pow, {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (accept('(')) {
      NodePtr n = expr();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s_.substr(pos_), &used);
      } catch (const std::exception&) {
        fail("bad number");
      }
      pos_ += used;
      return make(Kind::constant, {}, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
      std::string word = s_.substr(pos_, end - pos_);
      std::transform(word.begin(), word.end(), word.begin(), [](unsigned char ch) { return std::tolower(ch); });
      pos_ = end;
      if (word == "z") return make(Kind::variable);
      if (word == "i") return make(Kind::constant, {}, {0.0, 1.0});
      if (word == "pi") return make(Kind::constant, {}, std::numbers::pi);
      if (std::find(functions().begin(), functions().end(), word) != functions().end()) {
        if (!accept('(')) fail("expected '(' after " + word);
        NodePtr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return make(Kind::call, {arg}, {}, word);
      }
      fail("unknown identifier '" + word + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

bool is_constant(const NodePtr& n) {
  if (n->kind == Kind::variable) return false;
  return std::all_of(n->args.begin(), n->args.end(), is_constant);
}

Jet eval(const NodePtr& n, const Jet& z) {
  switch (n->kind) {
    case Kind::constant: return Jet::constant(z.basepoint(), n->value, z.order());
    case Kind::variable: return z;
    case Kind::add: return eval(n->args[0], z) + eval(n->args[1], z);
    case Kind::sub: return eval(n->args[0], z) - eval(n->args[1], z);
    case Kind::mul: return eval(n->args[0], z) * eval(n->args[1], z);
    case Kind::div: return eval(n->args[0], z) / eval(n->args[1], z);
    case Kind::neg: return -eval(n->args[0], z);
    case Kind::pow: {
      const Jet base = eval(n->args[0], z);
      if (is_constant(n->args[1])) return pow(base, eval(n->args[1], Jet::variable(z.basepoint(), 0)).value());
      return exp(log(base) * eval(n->args[1], z));
    }
    case Kind::call: {
      const Jet a = eval(n->args[0], z);
      const std::string& f = n->function;
      if (f == "exp") return exp(a);
      if (f == "log") return log(a);
      if (f == "sinh") return sinh(a);
      if (f == "cosh") return cosh(a);
      if (f == "sin") return sin(a);
      if (f == "cos") return cos(a);
      if (f == "sqrt") return pow(a, std::complex<double>(0.5, 0.0));
      break;
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text).parse();
  return e;
}

Jet Expression::evaluate(const Jet& z) const { return eval(root_, z); }

}  // namespace hypend
