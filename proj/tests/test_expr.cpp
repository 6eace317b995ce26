#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "setopt/expr.hpp"
#include "setopt/types.hpp"

using namespace setopt;

namespace {

double eval(const char* src, std::vector<double> x) {
  return Expr::parse(src, Expr::domain_variables(x.size())).eval(x);
}

}  // namespace

TEST_CASE("arithmetic and precedence") {
  CHECK(eval("1 + 2 * 3", {0.0}) == 7.0);
  CHECK(eval("(1 + 2) * 3", {0.0}) == 9.0);
  CHECK(eval("-x^2", {3.0}) == -9.0);
  CHECK(eval("2^3^2", {0.0}) == 512.0);
  CHECK(eval("0.75*x + 0.875", {-0.5}) == 0.5);
  CHECK(Expr::parse("1/t", {"t"}).eval(std::vector<double>{4.0}) == 0.25);
}

TEST_CASE("variables") {
  CHECK(eval("x1 - x2", {5.0, 2.0}) == 3.0);
  CHECK(eval("x", {4.0}) == 4.0);
  CHECK_THROWS_AS(eval("x", {4.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(eval("y", {4.0}), ValidationError);
  CHECK(Expr::parse("t*t", {"t"}).eval(std::vector<double>{3.0}) == 9.0);
}

TEST_CASE("functions and comparisons") {
  CHECK(eval("abs(x)", {-2.5}) == 2.5);
  CHECK(eval("sqrt(x)", {9.0}) == 3.0);
  CHECK(eval("min(x, 2)", {3.0}) == 2.0);
  CHECK(eval("max(x, 2)", {3.0}) == 3.0);
  CHECK(eval("exp(log(x))", {2.0}) == doctest::Approx(2.0));
  CHECK(eval("cos(pi)", {0.0}) == -1.0);
  CHECK(eval("if(x < 1, abs(x), 2*x)", {-0.5}) == 0.5);
  CHECK(eval("if(x < 1, abs(x), 2*x)", {1.0}) == 2.0);
  CHECK(eval("x >= 0 && x <= 1", {0.5}) == 1.0);
  CHECK(eval("x >= 0 && x <= 1", {1.5}) == 0.0);
  CHECK(eval("x < 0 || x > 1", {1.5}) == 1.0);
  CHECK(eval("x == 0", {0.0}) == 1.0);
  CHECK(eval("x != 0", {0.0}) == 0.0);
  CHECK(eval("!(x == 0)", {0.0}) == 0.0);
}

TEST_CASE("syntax errors are validation errors") {
  CHECK_THROWS_AS(eval("1 +", {0.0}), ValidationError);
  CHECK_THROWS_AS(eval("(1", {0.0}), ValidationError);
  CHECK_THROWS_AS(eval("foo(1)", {0.0}), ValidationError);
  CHECK_THROWS_AS(eval("min(1)", {0.0}), ValidationError);
  CHECK_THROWS_AS(eval("1 2", {0.0}), ValidationError);
  CHECK_THROWS_AS(eval("", {0.0}), ValidationError);
}

TEST_CASE("source text is kept verbatim") {
  CHECK(Expr::parse("abs(x1)", {"x1", "x2"}).source() == "abs(x1)");
}
