#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symclass/matrix.hpp"
#include "symclass/scalar.hpp"

namespace symclass {

/// Space-time polynomials have variables (tau, xi_1..xi_n) or (t, x^1..x^n);
/// spatial ones only (xi_1..xi_n). Variable index 0 is time for space-time.
enum class Layout { spacetime, spatial };

/// Which surface names to print variables with.
enum class Naming { covariable, base };

/// Exponent vector; for space-time layout index 0 is the tau exponent j and
/// indices 1..n form the multi-index alpha.
struct Monomial {
  std::vector<unsigned> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  unsigned degree() const;
  bool is_constant() const { return degree() == 0; }
  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, leading term first: higher total degree
/// precedes lower; ties are broken lexicographically with the larger exponent
/// of the earliest variable first (tau^2 before tau*xi1 before xi1^2).
struct GrlexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with Gaussian-rational coefficients. Zero coefficients
/// are never stored, so equality of term maps is equality of polynomials.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexFirst>;

  Polynomial() = default;
  Polynomial(Layout layout, std::size_t n) : layout_(layout), n_(n) {}

  static Polynomial constant(Layout layout, std::size_t n, const Scalar& c);
  static Polynomial variable(Layout layout, std::size_t n, std::size_t var);
  /// q = tau^2 - |xi|^2 (space-time) or |xi|^2 (spatial).
  static Polynomial quadratic_form(Layout layout, std::size_t n);

  Layout layout() const { return layout_; }
  /// Spatial dimension.
  std::size_t n() const { return n_; }
  std::size_t nvars() const { return layout_ == Layout::spacetime ? n_ + 1 : n_; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;
  Scalar coeff(const Monomial& m) const;

  /// Adds c*m in place, pruning the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.layout_ == b.layout_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;

  std::string str(Naming naming = Naming::covariable) const;

 private:
  void check_compatible(const Polynomial& o, const char* what) const;

  Layout layout_ = Layout::spacetime;
  std::size_t n_ = 0;
  Terms terms_;
};

enum class ArithOp { add, sub, mul };

/// Ring operation; rejects operands of different dimension or layout.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// p(M v): variable i is replaced by sum_k M(i,k) v_k. M must be nvars x nvars.
Polynomial substitute_linear(const Polynomial& p, const Matrix& m);

/// p(images[0], ..., images[nvars-1]); all images share one target ring.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Homogeneous parts keyed by degree, zero parts omitted, ascending degree.
std::vector<std::pair<unsigned, Polynomial>> decompose_homogeneous(const Polynomial& p);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

Scalar eval_at(const Polynomial& p, std::span<const Scalar> point);

/// Drops the time variable of a space-time polynomial that does not use it.
/// Throws Error if tau (or t) occurs.
Polynomial to_spatial(const Polynomial& p);
/// Embeds a spatial polynomial into space-time with time exponent 0.
Polynomial to_spacetime(const Polynomial& p);

/// First point, in a fixed order, at which a nonzero polynomial does not
/// vanish: unit vectors e_0, e_1, ... first, then integer grids of growing
/// height h (coordinates ordered 0, 1, -1, 2, -2, ...). Terminates because a
/// nonzero polynomial of degree d cannot vanish on a grid with d+1 values per
/// coordinate. Throws std::invalid_argument on the zero polynomial.
std::vector<Scalar> find_nonvanishing_point(const Polynomial& p);

/// Name of variable `var` under the given naming ("tau", "xi2", "t", "x2").
std::string variable_name(Layout layout, Naming naming, std::size_t var);

}  // namespace symclass
