#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace symclass {

using Rational = mpq_class;

/// Builds a reduced fraction num/den. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Total order on reduced fractions, used only to give containers a
/// deterministic ordering (not a field order on the complex numbers).
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Exact Gaussian rational re + im*i. Both parts are kept reduced by GMP, so
/// equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    auto c = compare(a.re_, b.re_);
    return c != 0 ? c : compare(a.im_, b.im_);
  }

  /// Human form: "3/2", "-i", "(2 + 3*i)" style without outer parentheses,
  /// e.g. "2 + 3*i".
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

Scalar pow(Scalar base, unsigned exp);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace symclass
