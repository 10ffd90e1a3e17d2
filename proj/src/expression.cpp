#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "hughes/network.hpp"

namespace hughes {

struct DensityExpr::Node {
  enum class Op { Const, X1, X2, Neg, Add, Sub, Mul, Pow, Max, Min };
  Op op = Op::Const;
  double value = 0.0;
  int exponent = 0;
  std::vector<std::shared_ptr<const Node>> args;

  double eval(double x1, double x2) const {
    switch (op) {
      case Op::Const: return value;
      case Op::X1: return x1;
      case Op::X2: return x2;
      case Op::Neg: return -args[0]->eval(x1, x2);
      case Op::Add: return args[0]->eval(x1, x2) + args[1]->eval(x1, x2);
      case Op::Sub: return args[0]->eval(x1, x2) - args[1]->eval(x1, x2);
      case Op::Mul: return args[0]->eval(x1, x2) * args[1]->eval(x1, x2);
      case Op::Pow: {
        const double base = args[0]->eval(x1, x2);
        double r = 1.0;
        for (int i = 0; i < exponent; ++i) r *= base;
        return r;
      }
      case Op::Max:
      case Op::Min: {
        double r = args[0]->eval(x1, x2);
        for (std::size_t i = 1; i < args.size(); ++i) {
          const double v = args[i]->eval(x1, x2);
          r = op == Op::Max ? std::max(r, v) : std::min(r, v);
        }
        return r;
      }
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const DensityExpr::Node>;
using Op = DensityExpr::Node::Op;

NodePtr make(Op op, std::vector<NodePtr> args = {}, double value = 0.0, int exponent = 0) {
  auto n = std::make_shared<DensityExpr::Node>();
  n->op = op;
  n->args = std::move(args);
  n->value = value;
  n->exponent = exponent;
  return n;
}

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := number | x1 | x2 | x | y | '(' expr ')' | (max | min) '(' expr (',' expr)* ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, "density expression column " + std::to_string(pos_ + 1) +
                                           ": " + what + " in '" + std::string(s_) + "'");
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::Add, {lhs, term()});
      } else if (accept('-')) {
        lhs = make(Op::Sub, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (accept('*')) lhs = make(Op::Mul, {lhs, unary()});
    return lhs;
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::Neg, {unary()});
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept('^')) return base;
    skip();
    int exponent = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), exponent);
    if (ec != std::errc() || exponent < 0 || exponent > 16) {
      fail("exponent must be an integer in [0, 16]");
    }
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return make(Op::Pow, {base}, 0.0, exponent);
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
      if (ec != std::errc()) fail("malformed number");
      pos_ = static_cast<std::size_t>(ptr - s_.data());
      return make(Op::Const, {}, value);
    }
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    std::string word;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
      word += s_[pos_++];
    }
    if (word == "x" || word == "x1") return make(Op::X1);
    if (word == "y" || word == "x2") return make(Op::X2);
    if (word == "max" || word == "min") {
      expect('(');
      std::vector<NodePtr> args{expr()};
      while (accept(',')) args.push_back(expr());
      expect(')');
      return make(word == "max" ? Op::Max : Op::Min, std::move(args));
    }
    fail(word.empty() ? "unexpected '" + std::string(1, c) + "'" : "unknown name '" + word + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DensityExpr DensityExpr::parse(std::string_view text) {
  return DensityExpr(std::string(text), Parser(text).parse());
}

double DensityExpr::operator()(double x1, double x2) const { return root_->eval(x1, x2); }

}  // namespace hughes
