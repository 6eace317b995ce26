#include "setopt/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <string_view>

#include "setopt/types.hpp"

namespace setopt {

struct Expr::Node {
  enum class Op {
    Constant, Variable, Neg, Not, Add, Sub, Mul, Div, Pow,
    Lt, Le, Gt, Ge, Eq, Ne, And, Or,
    Abs, Sqrt, Exp, Log, Sin, Cos, Min, Max, If
  };
  Op op = Op::Constant;
  double value = 0.0;
  std::size_t index = 0;
  std::vector<std::shared_ptr<const Node>> args;

  double eval(std::span<const double> x) const {
    auto a = [&](std::size_t i) { return args[i]->eval(x); };
    switch (op) {
      case Op::Constant: return value;
      case Op::Variable: return x[index];
      case Op::Neg: return -a(0);
      case Op::Not: return a(0) == 0.0 ? 1.0 : 0.0;
      case Op::Add: return a(0) + a(1);
      case Op::Sub: return a(0) - a(1);
      case Op::Mul: return a(0) * a(1);
      case Op::Div: return a(0) / a(1);
      case Op::Pow: return std::pow(a(0), a(1));
      case Op::Lt: return a(0) < a(1) ? 1.0 : 0.0;
      case Op::Le: return a(0) <= a(1) ? 1.0 : 0.0;
      case Op::Gt: return a(0) > a(1) ? 1.0 : 0.0;
      case Op::Ge: return a(0) >= a(1) ? 1.0 : 0.0;
      case Op::Eq: return a(0) == a(1) ? 1.0 : 0.0;
      case Op::Ne: return a(0) != a(1) ? 1.0 : 0.0;
      case Op::And: return (a(0) != 0.0 && a(1) != 0.0) ? 1.0 : 0.0;
      case Op::Or: return (a(0) != 0.0 || a(1) != 0.0) ? 1.0 : 0.0;
      case Op::Abs: return std::abs(a(0));
      case Op::Sqrt: return std::sqrt(a(0));
      case Op::Exp: return std::exp(a(0));
      case Op::Log: return std::log(a(0));
      case Op::Sin: return std::sin(a(0));
      case Op::Cos: return std::cos(a(0));
      case Op::Min: return std::min(a(0), a(1));
      case Op::Max: return std::max(a(0), a(1));
      case Op::If: return a(0) != 0.0 ? a(1) : a(2);
    }
    return 0.0;
  }
};

namespace {

using Op = Expr::Node::Op;
using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, std::vector<NodePtr> args) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

  NodePtr parse() {
    NodePtr root = parse_or();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("expression \"" + std::string(src_) + "\": " + msg + " at offset " +
                          std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (src_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  NodePtr parse_or() {
    NodePtr lhs = parse_and();
    while (accept("||")) lhs = make(Op::Or, {lhs, parse_and()});
    return lhs;
  }

  NodePtr parse_and() {
    NodePtr lhs = parse_cmp();
    while (accept("&&")) lhs = make(Op::And, {lhs, parse_cmp()});
    return lhs;
  }

  NodePtr parse_cmp() {
    NodePtr lhs = parse_add();
    // Two-character operators first so "<=" is not read as "<".
    static constexpr std::pair<std::string_view, Op> ops[] = {
        {"<=", Op::Le}, {">=", Op::Ge}, {"==", Op::Eq}, {"!=", Op::Ne}, {"<", Op::Lt}, {">", Op::Gt}};
    for (const auto& [tok, op] : ops) {
      if (accept(tok)) return make(op, {lhs, parse_add()});
    }
    return lhs;
  }

  NodePtr parse_add() {
    NodePtr lhs = parse_mul();
    for (;;) {
      if (accept("+")) lhs = make(Op::Add, {lhs, parse_mul()});
      else if (accept("-")) lhs = make(Op::Sub, {lhs, parse_mul()});
      else return lhs;
    }
  }

  NodePtr parse_mul() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept("*")) lhs = make(Op::Mul, {lhs, parse_unary()});
      else if (accept("/")) lhs = make(Op::Div, {lhs, parse_unary()});
      else return lhs;
    }
  }

  NodePtr parse_unary() {
    if (accept("-")) return make(Op::Neg, {parse_unary()});
    if (accept("+")) return parse_unary();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '!' && src_.substr(pos_, 2) != "!=") {
      ++pos_;
      return make(Op::Not, {parse_unary()});
    }
    return parse_pow();
  }

  NodePtr parse_pow() {
    NodePtr base = parse_primary();
    if (accept("^")) return make(Op::Pow, {base, parse_unary()});
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_or();
      expect(")");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr parse_number() {
    const std::string rest(src_.substr(pos_));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail("malformed number");
    }
    pos_ += used;
    auto n = std::make_shared<Expr::Node>();
    n->op = Op::Constant;
    n->value = v;
    return n;
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(src_.substr(start, pos_ - start));

    struct Fn {
      std::string_view name;
      Op op;
      std::size_t arity;
    };
    static constexpr Fn fns[] = {{"abs", Op::Abs, 1}, {"sqrt", Op::Sqrt, 1}, {"exp", Op::Exp, 1},
                                 {"log", Op::Log, 1}, {"sin", Op::Sin, 1},   {"cos", Op::Cos, 1},
                                 {"min", Op::Min, 2}, {"max", Op::Max, 2},   {"if", Op::If, 3}};
    for (const auto& fn : fns) {
      if (fn.name != name) continue;
      expect("(");
      std::vector<NodePtr> args;
      args.push_back(parse_or());
      while (accept(",")) args.push_back(parse_or());
      expect(")");
      if (args.size() != fn.arity) {
        fail(name + " takes " + std::to_string(fn.arity) + " argument(s)");
      }
      return make(fn.op, std::move(args));
    }
    if (name == "pi") {
      auto n = std::make_shared<Expr::Node>();
      n->value = std::numbers::pi;
      return n;
    }
    // In one dimension "x" is accepted for "x1".
    const bool alias = name == "x" && vars_.size() == 1 && vars_.front() == "x1";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name || alias) {
        auto n = std::make_shared<Expr::Node>();
        n->op = Op::Variable;
        n->index = i;
        return n;
      }
    }
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(const std::string& source, const std::vector<std::string>& variables) {
  Expr e;
  e.source_ = source;
  e.root_ = Parser(source, variables).parse();
  return e;
}

std::vector<std::string> Expr::domain_variables(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

double Expr::eval(std::span<const double> values) const { return root_->eval(values); }

}  // namespace setopt
