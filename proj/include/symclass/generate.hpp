#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "symclass/decider.hpp"
#include "symclass/operator.hpp"

namespace symclass {

/// Seeded source of exact random values. Only the raw mt19937_64 stream is
/// used (no std distributions), so sequences are identical across standard
/// libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) { return lo + rng_() % (hi - lo + 1); }
  bool coin() { return rng_() & 1u; }
  /// num/den with |num| <= 9, 1 <= den <= 9.
  Rational rational();
  Rational nonzero_rational();
  /// Real part always drawn, imaginary part nonzero half of the time.
  Scalar gaussian_rational();
  Scalar nonzero_gaussian_rational();

 private:
  std::mt19937_64 rng_;
};

enum class InstanceKind {
  invariant,  // sum_j b_j g^j with b_{m/2} != 0
  perturbed,  // invariant instance plus one non-constant monomial
  variable,   // perturbed or invariant instance with one coefficient made t,x-dependent
};

/// Reproducible test corpus. Rejects n outside 1..6, m above 10, odd m for
/// the invariant kind (no invariant operator has odd order), and m = 0 for
/// the perturbed and variable kinds (every constant symbol is invariant).
std::vector<OperatorSpec> gen_instances(std::uint64_t seed, Metric space, std::size_t n, unsigned m,
                                        std::size_t count, InstanceKind kind);

/// Random canonical form of exactly `length` coefficients with a nonzero top.
CanonicalForm random_canonical_form(RandomSource& rng, Metric space, std::size_t length);

}  // namespace symclass
