#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "symclass/errors.hpp"
#include "symclass/polynomial.hpp"

using namespace symclass;
using namespace symclass::test;

TEST_CASE("scalar arithmetic stays reduced") {
  Scalar a(make_rational(2, 4), make_rational(-3, 6));
  CHECK(a.re() == make_rational(1, 2));
  CHECK(a.re().get_den() == 2);
  CHECK(a * a.conj() == frac(1, 2));
  CHECK(a / a == Scalar(1));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(pow(Scalar::i(), 4) == Scalar(1));
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
  CHECK(Scalar(make_rational(3, 2), Rational(2)).str() == "3/2 + 2*i");
  CHECK(Scalar(Rational(0), Rational(-1)).str() == "-i");
}

TEST_CASE("poly_arith") {
  const std::size_t n = 1;
  SUBCASE("cancellation to canonical form") {
    Polynomial a = tau(n) * tau(n) - xi(n, 1) * xi(n, 1);
    Polynomial b = xi(n, 1) * xi(n, 1);
    Polynomial sum = poly_arith(a, b, ArithOp::add);
    CHECK(sum == tau(n).pow(2));
    CHECK(sum.terms().size() == 1);
  }
  SUBCASE("difference of squares") {
    Polynomial prod = poly_arith(tau(n) - xi(n, 1), tau(n) + xi(n, 1), ArithOp::mul);
    CHECK(prod == box(n));
    CHECK(prod.str() == "tau^2 - xi1^2");
  }
  SUBCASE("square of the two-dimensional quadratic form") {
    Polynomial q = box(2);
    Polynomial t = tau(2), a = xi(2, 1), b = xi(2, 2);
    // tau^4 - 2 tau^2 xi1^2 - 2 tau^2 xi2^2 + xi1^4 + 2 xi1^2 xi2^2 + xi2^4
    Polynomial expected = t.pow(4) - cst(2, 2) * t.pow(2) * a.pow(2) - cst(2, 2) * t.pow(2) * b.pow(2) + a.pow(4) +
                          cst(2, 2) * a.pow(2) * b.pow(2) + b.pow(4);
    CHECK(poly_arith(q, q, ArithOp::mul) == expected);
    CHECK(expected.terms().size() == 6);
    CHECK(expected.str() == "tau^4 - 2*tau^2*xi1^2 - 2*tau^2*xi2^2 + xi1^4 + 2*xi1^2*xi2^2 + xi2^4");
  }
  SUBCASE("dimension mismatch reports both sides") {
    try {
      (void)poly_arith(tau(1), tau(2), ArithOp::add);
      FAIL("expected DimensionMismatch");
    } catch (const DimensionMismatch& e) {
      CHECK(e.lhs() == 1);
      CHECK(e.rhs() == 2);
    }
    CHECK_THROWS_AS((void)(cst(2, 1, Layout::spatial) * tau(2)), DimensionMismatch);
  }
}

TEST_CASE("substitute_linear") {
  SUBCASE("identity") {
    Polynomial p = box(1);
    CHECK(substitute_linear(p, Matrix::identity(2)) == p);
  }
  SUBCASE("spatial relabel") {
    Matrix swap{{0, 1}, {1, 0}};
    CHECK(substitute_linear(sxi(2, 1), swap) == sxi(2, 2));
  }
  SUBCASE("boost rows acting on tau^2 + xi1^2") {
    Matrix m{{Rational(5, 3), Rational(4, 3)}, {Rational(4, 3), Rational(5, 3)}};
    Polynomial p = tau(1).pow(2) + xi(1, 1).pow(2);
    Polynomial expected = (cst(1, 41) * tau(1).pow(2) + cst(1, 80) * tau(1) * xi(1, 1) + cst(1, 41) * xi(1, 1).pow(2)) *
                          frac(1, 9);
    CHECK(substitute_linear(p, m) == expected);
  }
  SUBCASE("size mismatch") {
    CHECK_THROWS_AS(substitute_linear(box(2), Matrix::identity(2)), DimensionMismatch);
    CHECK_THROWS_AS(substitute_linear(box(1), Matrix(2, 3)), DimensionMismatch);
  }
}

TEST_CASE("decompose_homogeneous") {
  Polynomial q = box(2);
  auto parts = decompose_homogeneous(q + cst(2, 1));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 0);
  CHECK(parts[0].second == cst(2, 1));
  CHECK(parts[1].first == 2);
  CHECK(parts[1].second == q);

  CHECK(decompose_homogeneous(Polynomial(Layout::spacetime, 2)).empty());

  Polynomial t = tau(1), x = xi(1, 1);
  auto odd = decompose_homogeneous(t.pow(3) + t * x.pow(2) + t);
  REQUIRE(odd.size() == 2);
  CHECK(odd[0] == std::pair<unsigned, Polynomial>{1, t});
  CHECK(odd[1] == std::pair<unsigned, Polynomial>{3, t.pow(3) + t * x.pow(2)});
}

TEST_CASE("partial_derivative") {
  Polynomial q = box(1);
  CHECK(partial_derivative(q, 0) == cst(1, 2) * tau(1));
  CHECK(partial_derivative(q, 1) == cst(1, -2) * xi(1, 1));
  CHECK(partial_derivative(xi(2, 1).pow(3), 2).is_zero());
  CHECK_THROWS_AS(partial_derivative(q, 2), DimensionMismatch);
}

TEST_CASE("eval_at") {
  Polynomial q = box(2);
  std::vector<Scalar> e0{1, 0, 0}, e1{0, 1, 0};
  CHECK(eval_at(q, e0) == Scalar(1));
  CHECK(eval_at(q, e1) == Scalar(-1));
  std::vector<Scalar> pt{2, 5};
  CHECK(eval_at(tau(1).pow(2) + cst(1, 3), pt) == Scalar(7));
  std::vector<Scalar> bad{1, 2};
  CHECK_THROWS_AS(eval_at(q, bad), DimensionMismatch);
}

TEST_CASE("grlex order and printing") {
  Polynomial p = xi(1, 1).pow(2) + tau(1) * xi(1, 1) + tau(1).pow(2) + cst(1, -7) + xi(1, 1);
  CHECK(p.str() == "tau^2 + tau*xi1 + xi1^2 + xi1 - 7");
  CHECK(p.str(Naming::base) == "t^2 + t*x1 + x1^2 + x1 - 7");
  CHECK((cst(1, Scalar(Rational(2), Rational(3))) * tau(1)).str() == "(2 + 3*i)*tau");
  CHECK((cst(1, Scalar(Rational(0), Rational(-3, 2))) * tau(1) + cst(1, 1)).str() == "-3/2*i*tau + 1");
  CHECK(Polynomial(Layout::spatial, 3).str() == "0");
}

TEST_CASE("find_nonvanishing_point") {
  CHECK_THROWS_AS(find_nonvanishing_point(Polynomial(Layout::spacetime, 1)), std::invalid_argument);
  // Vanishes on every unit vector and on the axes: xi1 * xi2 * (xi1 - xi2).
  Polynomial p = xi(2, 1) * xi(2, 2) * (xi(2, 1) - xi(2, 2)) * tau(2);
  auto pt = find_nonvanishing_point(p);
  CHECK_FALSE(eval_at(p, pt).is_zero());
  Polynomial c = cst(3, 5);
  CHECK(find_nonvanishing_point(c) == std::vector<Scalar>(4));
}

TEST_CASE("matrix rank") {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(m.rank() == 2);
  CHECK(Matrix::identity(4).rank() == 4);
  CHECK(Matrix(3, 3).rank() == 0);
}

TEST_CASE("layout conversion") {
  Polynomial s = norm2(2);
  CHECK(to_spatial(to_spacetime(s)) == s);
  CHECK(to_spacetime(s) == tau(2).pow(2) - box(2));
  CHECK_THROWS_AS(to_spatial(box(2)), Error);
}
