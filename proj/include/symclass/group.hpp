#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "symclass/errors.hpp"
#include "symclass/matrix.hpp"
#include "symclass/polynomial.hpp"

namespace symclass {

/// Which bilinear form a group element preserves: the identity (O(n)) or
/// g = diag(1, -1, ..., -1) (O(1,n)).
enum class Metric { euclidean, minkowski };

std::string to_string(Metric m);

/// Axis labels used throughout: for minkowski elements 0 is time and 1..n are
/// space; for euclidean elements 1..n are space (matrix row k-1).

namespace detail {
struct ElementFactory;
}

/// Exact element of O(n) or O(1,n). Instances exist only after the defining
/// relation has been checked exactly.
class GroupElement {
 public:
  const Matrix& matrix() const { return matrix_; }
  Metric metric() const { return metric_; }
  /// Spatial dimension n.
  std::size_t n() const { return metric_ == Metric::minkowski ? matrix_.rows() - 1 : matrix_.rows(); }
  const std::string& label() const { return label_; }

  /// Group product (this * other); tags and sizes must agree.
  GroupElement operator*(const GroupElement& other) const;
  GroupElement transpose() const;
  GroupElement relabeled(std::string label) const {
    GroupElement out(*this);
    out.label_ = std::move(label);
    return out;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.metric_ == b.metric_ && a.matrix_ == b.matrix_;
  }

 private:
  friend struct detail::ElementFactory;
  GroupElement(Matrix m, Metric metric, std::string label)
      : matrix_(std::move(m)), metric_(metric), label_(std::move(label)) {}

  Matrix matrix_;
  Metric metric_;
  std::string label_;
};

struct MembershipViolation {
  std::size_t row;
  std::size_t col;
  Rational residual;  // entry of tMgM - g (or tMM - I), or of MgtM - g
  bool transposed_relation = false;
};

using Membership = std::variant<GroupElement, MembershipViolation>;

/// Checks tMgM = MgtM = g exactly. Rejects a non-square matrix.
Membership verify_membership(const Matrix& m, Metric metric, std::string label = "matrix");

/// Like verify_membership but throws Error on a violation.
GroupElement make_element(const Matrix& m, Metric metric, std::string label = "matrix");

/// Rotation in the (i, j) plane with c = (1-t^2)/(1+t^2), s = 2t/(1+t^2).
GroupElement rational_rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& t);

/// Boost in the (0, i) plane with c = (1+t^2)/(1-t^2), s = 2t/(1-t^2).
/// Rejects |t| = 1 (light-like).
GroupElement rational_boost(std::size_t n, std::size_t i, const Rational& t);

namespace reflection {
struct NegateAxis {
  std::size_t axis;
};
struct NegateAll {};
struct SwapAxes {
  std::size_t a;
  std::size_t b;
};
/// 1 (+) R: a spatial O(n) element acting on the space block of O(1,n).
struct EmbedSpatial {
  Matrix spatial;
};
using Spec = std::variant<NegateAxis, NegateAll, SwapAxes, EmbedSpatial>;
}  // namespace reflection

/// Signed permutations and block embeddings, membership-verified.
GroupElement reflection_or_permutation(std::size_t n, Metric metric, const reflection::Spec& spec);

/// xi -> p(tLambda xi). The symbol must have nvars equal to the element size.
Polynomial pullback_symbol(const Polynomial& p, const GroupElement& g);

/// x -> scale * (linear x) - shift: a Lorentz/orthogonal map, then a
/// dilation by `scale`, then the translation T_shift.
struct AffineMotion {
  GroupElement linear;
  std::vector<Rational> shift;
  Rational scale{1};

  static AffineMotion translation(std::size_t n, std::vector<Rational> shift);
  static AffineMotion dilation(std::size_t n, const Rational& scale);

  std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

/// f -> f o motion for a function polynomial in the base variables.
Polynomial pullback_function(const Polynomial& f, const AffineMotion& motion);

/// Infinitesimal generators acting on symbols as first-order derivations:
/// rotation L_ij = xi_i d/dxi_j - xi_j d/dxi_i, boost K_i = tau d/dxi_i + xi_i d/dtau.
struct LieGenerator {
  enum class Kind { rotation, boost } kind;
  std::size_t i;
  std::size_t j;  // unused for boosts

  static LieGenerator rotation(std::size_t i, std::size_t j) { return {Kind::rotation, i, j}; }
  static LieGenerator boost(std::size_t i) { return {Kind::boost, i, 0}; }
  std::string name() const;
};

/// Rotations for both layouts, plus boosts for space-time symbols, lex order.
std::vector<LieGenerator> lie_generators(Layout layout, std::size_t n);

Polynomial lie_derivative(const Polynomial& p, const LieGenerator& gen);

}  // namespace symclass
