#ifndef SETOPT_EXPR_HPP
#define SETOPT_EXPR_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace setopt {

/// A compiled real-valued formula over named variables, e.g.
/// "if(x < 1, abs(x), 2*x)" or "x1 == 1 && x2 == 0".
///
/// Supports + - * / ^, comparisons (< <= > >= == !=), && || !, parentheses,
/// numeric literals, the constant pi and the functions abs sqrt exp log sin
/// cos min max if(cond, then, else). Comparisons and logic yield 1 or 0.
class Expr {
 public:
  /// Throws ValidationError on syntax errors or unknown identifiers.
  /// A variable's position in `variables` is its index in eval's argument.
  static Expr parse(const std::string& source, const std::vector<std::string>& variables);

  /// Variable names for an n-dimensional domain: x1..xn. When the only
  /// variable is x1, the parser also accepts x for it.
  static std::vector<std::string> domain_variables(std::size_t n);

  double eval(std::span<const double> values) const;
  const std::string& source() const { return source_; }

  struct Node;

 private:
  std::string source_;
  std::shared_ptr<const Node> root_;
};

}  // namespace setopt

#endif
