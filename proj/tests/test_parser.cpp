#include <doctest.h>

#include "helpers.hpp"
#include "symclass/parser.hpp"

using namespace symclass;
using namespace symclass::test;

namespace {

std::size_t error_offset(std::string_view text, std::size_t n) {
  try {
    (void)parse_operator(text, n);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_operator lowers to (j, alpha) coefficients") {
  SUBCASE("wave operator") {
    OperatorSpec op = parse_operator("dt^2 - dx1^2 - dx2^2", 2);
    CHECK(op.m() == 2);
    CHECK(constant_symbol(op) == box(2));
  }
  SUBCASE("complex coefficient and constant term") {
    OperatorSpec op = parse_operator("(3/2)*i*dx1 + 7", 1);
    CHECK(op.m() == 1);
    CHECK(constant_symbol(op) == cst(1, Scalar(Rational(0), Rational(3, 2))) * xi(1, 1) + cst(1, 7));
  }
  SUBCASE("variable coefficient") {
    OperatorSpec op = parse_operator("t*dx1", 1);
    REQUIRE(op.coeffs().size() == 1);
    CHECK(op.coeffs().begin()->first == Monomial({0, 1}));
    CHECK(op.coeffs().begin()->second == Polynomial::variable(Layout::spacetime, 1, 0));
  }
  SUBCASE("whitespace and grouping") {
    CHECK(parse_operator("  ( dt + dx1 ) * ( dt - dx1 )", 1) == parse_operator("dt^2-dx1^2", 1));
    CHECK(parse_operator("-dx1^2 + dt^2", 1) == parse_operator("dt^2 - dx1^2", 1));
    CHECK(parse_operator("(1 + t)*dx1", 1) == parse_operator("dx1 + t*dx1", 1));
    CHECK(parse_operator("dx1*(dx2 + 3)", 2) == parse_operator("dx1*dx2 + 3*dx1", 2));
    CHECK(parse_operator("2 / 4 * dt", 1) == parse_operator("1/2*dt", 1));
  }
}

TEST_CASE("parse errors") {
  CHECK(error_offset("dt^2 - dx5", 3) == 7);
  CHECK(error_offset("dx1*t", 1) == 4);
  CHECK(error_offset("dx1*(t + 1)", 1) == 5);
  CHECK(error_offset("(t*dx1)^2", 1) == 0);
  CHECK(error_offset("0.5*dt", 1) == 0);
  CHECK(error_offset("dt + ", 1) == 5);
  CHECK(error_offset("dt^x", 1) == 3);
  CHECK(error_offset("dt ^ 2 )", 1) == 7);
  CHECK(error_offset("dy1", 1) == 0);
  CHECK(error_offset("1/0*dt", 1) == 0);
  CHECK_THROWS_WITH_AS(parse_operator("dx1*t", 1), doctest::Contains("non-commutative placement"), ParseError);
  CHECK_THROWS_WITH_AS(parse_operator("0.5", 1), doctest::Contains("1/2"), ParseError);
  CHECK_THROWS_AS(parse_operator("dx1 - dx1", 1), InvalidOperator);
}

TEST_CASE("parse_symbol") {
  CHECK(parse_symbol("tau^2 - xi1^2", 1) == box(1));
  CHECK(parse_symbol("i*tau*xi2", 2) == cst(2, Scalar::i()) * tau(2) * xi(2, 2));
  CHECK_THROWS_AS(parse_symbol("dt", 1), ParseError);
  CHECK_THROWS_AS(parse_operator("tau", 1), ParseError);
}

TEST_CASE("printer output is parseable and stable") {
  OperatorSpec op = parse_operator("(2 + 3*i)*dt^2 - 5/2*t*x1*dx1 + t*dx1 - i*7 + dx1*dx2", 2);
  std::string printed = print_operator(op);
  CHECK(printed == "(2 + 3*i)*dt^2 + dx1*dx2 - 5/2*t*x1*dx1 + t*dx1 - 7*i");
  CHECK(parse_operator(printed, 2) == op);
}

TEST_CASE("ast shape") {
  auto node = parse_ast("dt^2 - 3*x1*dx1", 1, ExprMode::op);
  REQUIRE(std::holds_alternative<ast::Sum>(node->kind));
  const auto& sum = std::get<ast::Sum>(node->kind);
  REQUIRE(sum.terms.size() == 2);
  CHECK_FALSE(sum.terms[0].first);
  CHECK(sum.terms[1].first);
  CHECK(std::holds_alternative<ast::Power>(sum.terms[0].second->kind));
  const auto& prod = std::get<ast::Product>(sum.terms[1].second->kind);
  CHECK(prod.factors.size() == 3);
  CHECK(std::holds_alternative<ast::BaseVariable>(prod.factors[1]->kind));
  CHECK(sum.terms[1].second->offset == 7);
}
