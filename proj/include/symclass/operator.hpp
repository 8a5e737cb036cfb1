#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symclass/errors.hpp"
#include "symclass/polynomial.hpp"

namespace symclass {

class InvalidOperator : public Error {
 public:
  using Error::Error;
};

/// Linear differential operator sum_{j+|alpha|<=m} a_{j,alpha}(t,x) dt^j d^alpha.
///
/// Keys are space-time monomials (exps[0] = j, exps[1..n] = alpha); values are
/// coefficient polynomials in the base variables (t, x^1..x^n). The declared
/// order m is validated, not inferred: every key satisfies j+|alpha| <= m and
/// at least one coefficient of order exactly m is nonzero.
class OperatorSpec {
 public:
  using Coefficients = std::map<Monomial, Polynomial, GrlexFirst>;

  /// Validates and canonicalizes (zero coefficients are dropped). Throws
  /// InvalidOperator.
  OperatorSpec(std::size_t n, unsigned m, Coefficients coeffs);

  std::size_t n() const { return n_; }
  unsigned m() const { return m_; }
  const Coefficients& coeffs() const { return coeffs_; }

  bool has_constant_coefficients() const;
  bool uses_time_derivative() const;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;

 private:
  std::size_t n_;
  unsigned m_;
  Coefficients coeffs_;
};

/// p(x, xi) = sum a_{j,alpha}(x) tau^j xi^alpha, stored as pairs
/// (base monomial, covariable monomial).
class FullSymbol {
 public:
  struct KeyLess {
    bool operator()(const std::pair<Monomial, Monomial>& a, const std::pair<Monomial, Monomial>& b) const {
      GrlexFirst lt;
      if (lt(a.second, b.second)) return true;
      if (lt(b.second, a.second)) return false;
      return lt(a.first, b.first);
    }
  };
  using Terms = std::map<std::pair<Monomial, Monomial>, Scalar, KeyLess>;

  explicit FullSymbol(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  void add_term(const Monomial& base, const Monomial& covar, const Scalar& c);

  /// The covariable polynomial p(x0, .) at a base point x0 of length 1+n.
  Polynomial at_base_point(std::span<const Scalar> x0) const;

  friend bool operator==(const FullSymbol&, const FullSymbol&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

FullSymbol full_symbol(const OperatorSpec& op);

struct TranslationWitness {
  Monomial key;                // offending (j, alpha)
  std::vector<Scalar> point;   // y with a(y) != a(0)
  Scalar value_at_point;
  Scalar value_at_origin;
};

struct TranslationVerdict {
  bool invariant = true;
  std::optional<TranslationWitness> witness;
};

/// Translation invariance holds iff every coefficient has base-degree 0.
TranslationVerdict is_translation_invariant(const OperatorSpec& op);

/// Symbol p(xi) = p(0, xi). Throws InvalidOperator on variable coefficients.
Polynomial constant_symbol(const OperatorSpec& op);

/// Inverse of constant_symbol; the order is the degree of p. Throws
/// InvalidOperator on the zero polynomial or a spatial-layout symbol.
OperatorSpec operator_of(const Polynomial& symbol);

/// Composition of constant-coefficient operators (symbol product).
OperatorSpec compose(const OperatorSpec& a, const OperatorSpec& b);

}  // namespace symclass
