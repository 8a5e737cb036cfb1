#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symclass/group.hpp"
#include "symclass/operator.hpp"
#include "symclass/polynomial.hpp"

namespace symclass {

inline constexpr std::size_t kDefaultWitnessBudget = 10000;

/// An invariant symbol written as sum_j b_j g^j with g = q = tau^2 - |xi|^2
/// (minkowski) or g = |xi|^2 (euclidean). The zero symbol has no coefficients.
struct CanonicalForm {
  Metric space = Metric::minkowski;
  std::vector<Scalar> coeffs;

  bool zero_symbol() const { return coeffs.empty(); }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Re-expands a canonical form into a symbol of spatial dimension n.
Polynomial expand(const CanonicalForm& cf, std::size_t n);

/// p(tLambda covector) = lhs != rhs = p(covector).
struct GroupWitness {
  GroupElement element;
  std::vector<Scalar> covector;
  Scalar lhs;
  Scalar rhs;
};

/// Fallback when the enumeration budget runs out: a generator whose Lie
/// derivative of p is the nonzero polynomial `derivative`.
struct AlgebraicWitness {
  LieGenerator generator;
  Polynomial derivative;
};

using Witness = std::variant<GroupWitness, AlgebraicWitness>;

/// Recomputes the witness from scratch against p.
bool verify_witness(const Polynomial& p, const Witness& w);

using SymbolClassification = std::variant<CanonicalForm, Witness>;

inline bool is_invariant(const SymbolClassification& c) { return std::holds_alternative<CanonicalForm>(c); }

/// O(n) invariance of a spatial symbol; canonical form in |xi|^2.
SymbolClassification classify_rotation(const Polynomial& p, std::size_t budget = kDefaultWitnessBudget);

/// O(1,n) invariance of a space-time symbol; canonical form in q.
SymbolClassification classify_lorentz(const Polynomial& p, std::size_t budget = kDefaultWitnessBudget);

/// Independent decider: every rotation (and, for minkowski, boost) generator
/// annihilates p, and p is fixed by the reflections that reach the other
/// connected components.
bool lie_decider(const Polynomial& p, Metric space);

/// Sampling oracle: p is fixed by `count` pseudorandom products of rational
/// generators and reflections drawn from `seed`.
bool sampling_oracle(const Polynomial& p, Metric space, std::size_t count = 20, std::uint64_t seed = 0x5eed);

/// Enumerates group elements in a fixed order (single-axis reflections, -I,
/// axis swaps, rational rotations then boosts with t in kWitnessParameters and
/// index pairs in lex order, then pairwise products) and returns a verified
/// witness for the first element that moves p. When `budget` elements have
/// been tried without success, returns an algebraic witness instead. Throws
/// Error if p is invariant.
Witness witness_search(const Polynomial& p, Metric space, std::size_t budget = kDefaultWitnessBudget);

/// Parameters t tried by witness_search, in order.
std::vector<Rational> witness_parameters();

struct DilationCertificate {
  Rational scale{2};
  std::size_t low = 0;   // smallest j with b_j != 0
  std::size_t high = 0;  // largest j with b_j != 0
  /// (scale^(2(high-low)) - 1) * b_low; for L = box + gamma this is
  /// (lambda^2 - 1) * gamma.
  Scalar residual;
};

struct DilationVerdict {
  bool invariant = false;
  std::optional<DilationCertificate> certificate;
  /// Informational: degree 2j of the single term b_j g^j when invariant.
  std::optional<unsigned> homogeneity_degree;
};

/// Invariant iff exactly one b_j is nonzero. Throws Error on an all-zero form.
DilationVerdict classify_dilation(const CanonicalForm& cf);

bool verify_dilation_certificate(const CanonicalForm& cf, const DilationCertificate& cert);

struct ClassificationReport {
  Metric space = Metric::minkowski;
  std::size_t n = 0;
  unsigned m = 0;
  std::string input;
  TranslationVerdict translation;
  /// Absent when the translation check failed.
  std::optional<SymbolClassification> group;
  /// Absent unless the group check produced a canonical form.
  std::optional<DilationVerdict> dilation;
  /// translation and group invariance together.
  bool poincare = false;
  /// The symbol that was classified, when translation invariant.
  std::optional<Polynomial> symbol;
};

/// Full pipeline: translation, then Lorentz (or rotation for euclidean space),
/// then dilation. Euclidean classification rejects operators with dt.
ClassificationReport classify_operator(const OperatorSpec& op, Metric space,
                                       std::size_t budget = kDefaultWitnessBudget, std::string input = {});

/// Dimension of the space of degree-j homogeneous polynomials in n variables
/// annihilated by every rotation generator and fixed by xi_1 -> -xi_1,
/// computed by exact linear algebra on coefficient vectors.
std::size_t rotation_invariant_dimension(std::size_t n, unsigned j);

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace symclass
