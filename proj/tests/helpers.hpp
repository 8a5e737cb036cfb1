#pragma once

#include "symclass/polynomial.hpp"

namespace symclass::test {

inline Polynomial tau(std::size_t n) { return Polynomial::variable(Layout::spacetime, n, 0); }
inline Polynomial xi(std::size_t n, std::size_t k) { return Polynomial::variable(Layout::spacetime, n, k); }
inline Polynomial sxi(std::size_t n, std::size_t k) { return Polynomial::variable(Layout::spatial, n, k - 1); }
inline Polynomial cst(std::size_t n, const Scalar& c, Layout layout = Layout::spacetime) {
  return Polynomial::constant(layout, n, c);
}
inline Scalar frac(long num, long den = 1) { return Scalar(make_rational(num, den)); }
inline Polynomial box(std::size_t n) { return Polynomial::quadratic_form(Layout::spacetime, n); }
inline Polynomial norm2(std::size_t n) { return Polynomial::quadratic_form(Layout::spatial, n); }

}  // namespace symclass::test
