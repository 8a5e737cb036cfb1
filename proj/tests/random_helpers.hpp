#pragma once

#include "symclass/generate.hpp"
#include "symclass/group.hpp"

namespace symclass::test {

inline Polynomial random_polynomial(RandomSource& rng, Layout layout, std::size_t n, unsigned max_degree,
                                    std::size_t max_terms = 5) {
  Polynomial p(layout, n);
  const std::size_t terms = rng.uniform(0, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(p.nvars());
    unsigned budget = unsigned(rng.uniform(0, max_degree));
    for (unsigned d = 0; d < budget; ++d) ++m.exps[rng.uniform(0, p.nvars() - 1)];
    p.add_term(m, rng.gaussian_rational());
  }
  return p;
}

inline Rational random_parameter(RandomSource& rng) {
  // boosts need |t| != 1
  Rational t;
  do t = make_rational(long(rng.uniform(0, 9)) - 4, long(rng.uniform(1, 5)));
  while (abs(t) == 1);
  return t;
}

// one rotation, boost or reflection; rotations are embedded for minkowski
inline GroupElement random_generator_element(RandomSource& rng, Metric space, std::size_t n) {
  const bool minkowski = space == Metric::minkowski;
  for (;;) {
    switch (rng.uniform(0, 3)) {
      case 0:
        if (n >= 2) {
          std::size_t i = rng.uniform(1, n - 1);
          std::size_t j = rng.uniform(i + 1, n);
          GroupElement r = rational_rotation(n, i, j, random_parameter(rng));
          if (!minkowski) return r;
          return reflection_or_permutation(n, space, reflection::EmbedSpatial{r.matrix()});
        }
        break;
      case 1:
        if (minkowski) return rational_boost(n, rng.uniform(1, n), random_parameter(rng));
        break;
      case 2:
        return reflection_or_permutation(n, space, reflection::NegateAxis{rng.uniform(minkowski ? 0 : 1, n)});
      default:
        if (n >= 2) {
          std::size_t a = rng.uniform(1, n - 1);
          return reflection_or_permutation(n, space, reflection::SwapAxes{a, rng.uniform(a + 1, n)});
        }
        return reflection_or_permutation(n, space, reflection::NegateAll{});
    }
  }
}

inline GroupElement random_element(RandomSource& rng, Metric space, std::size_t n, std::size_t max_length = 5) {
  GroupElement g = random_generator_element(rng, space, n);
  const std::size_t length = rng.uniform(1, max_length);
  for (std::size_t k = 1; k < length; ++k) g = g * random_generator_element(rng, space, n);
  return g;
}

}  // namespace symclass::test
