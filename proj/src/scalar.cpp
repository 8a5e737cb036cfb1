#include "symclass/scalar.hpp"

#include <stdexcept>

namespace symclass {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Scalar Scalar::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero scalar");
  return {re_ / norm, -im_ / norm};
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::str() const {
  if (is_real()) return to_string(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = to_string(im_) + "*i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) < 0) {
    Rational a = -im_;
    return to_string(re_) + " - " + (a == 1 ? std::string("i") : to_string(a) + "*i");
  }
  return to_string(re_) + " + " + imag;
}

Scalar pow(Scalar base, unsigned exp) {
  Scalar acc(1);
  while (exp) {
    if (exp & 1u) acc *= base;
    exp >>= 1u;
    if (exp) base *= base;
  }
  return acc;
}

}  // namespace symclass
