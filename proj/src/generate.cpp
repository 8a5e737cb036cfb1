#include "symclass/generate.hpp"

#include <string>

namespace symclass {

Rational RandomSource::rational() {
  long num = static_cast<long>(uniform(0, 18)) - 9;
  long den = static_cast<long>(uniform(1, 9));
  return make_rational(num, den);
}

Rational RandomSource::nonzero_rational() {
  for (;;) {
    Rational q = rational();
    if (sgn(q) != 0) return q;
  }
}

Scalar RandomSource::gaussian_rational() {
  Rational re = rational();
  Rational im = coin() ? rational() : Rational(0);
  return {re, im};
}

Scalar RandomSource::nonzero_gaussian_rational() {
  for (;;) {
    Scalar s = gaussian_rational();
    if (!s.is_zero()) return s;
  }
}

CanonicalForm random_canonical_form(RandomSource& rng, Metric space, std::size_t length) {
  CanonicalForm cf{space, {}};
  for (std::size_t j = 0; j < length; ++j)
    cf.coeffs.push_back(j + 1 == length ? rng.nonzero_gaussian_rational() : rng.gaussian_rational());
  return cf;
}

namespace {

Polynomial invariant_symbol(RandomSource& rng, Metric space, std::size_t n, unsigned m) {
  Polynomial p = expand(random_canonical_form(rng, space, m / 2 + 1), n);
  return space == Metric::minkowski ? p : to_spacetime(p);
}

Polynomial perturbed_symbol(RandomSource& rng, Metric space, std::size_t n, unsigned m) {
  Polynomial p = invariant_symbol(rng, space, n, m - m % 2);
  const std::size_t nvars = space == Metric::minkowski ? n + 1 : n;
  std::vector<Monomial> pool;
  // Odd m needs the monomial to carry the order; for euclidean n = 1 even powers are invariant.
  const bool odd_only = space == Metric::euclidean && n == 1;
  for (unsigned d = m % 2 ? m : 1; d <= m; ++d) {
    if (odd_only && d % 2 == 0) continue;
    for (auto& mono : monomials_of_degree(nvars, d)) pool.push_back(std::move(mono));
  }
  Monomial chosen = pool[rng.uniform(0, pool.size() - 1)];
  if (space == Metric::euclidean) chosen.exps.insert(chosen.exps.begin(), 0u);
  p.add_term(chosen, rng.nonzero_gaussian_rational());
  return p;
}

}  // namespace

std::vector<OperatorSpec> gen_instances(std::uint64_t seed, Metric space, std::size_t n, unsigned m,
                                        std::size_t count, InstanceKind kind) {
  if (n < 1 || n > 6) throw Error("gen: dimension n must be in 1..6, got " + std::to_string(n));
  if (m > 10) throw Error("gen: order m must be at most 10, got " + std::to_string(m));
  if (kind == InstanceKind::invariant && m % 2)
    throw Error("gen: no invariant operator has odd order " + std::to_string(m));
  if (kind != InstanceKind::invariant && m == 0)
    throw Error("gen: every order-0 symbol is invariant, so no perturbed instance exists");

  RandomSource rng(seed);
  std::vector<OperatorSpec> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (kind == InstanceKind::invariant) {
      out.push_back(operator_of(invariant_symbol(rng, space, n, m)));
      continue;
    }
    const bool keep_invariant = kind == InstanceKind::variable && m % 2 == 0 && rng.coin();
    Polynomial p = keep_invariant ? invariant_symbol(rng, space, n, m) : perturbed_symbol(rng, space, n, m);
    if (kind == InstanceKind::perturbed) {
      out.push_back(operator_of(p));
      continue;
    }
    // Multiply one coefficient by (1 + c * base monomial of degree 1..2).
    OperatorSpec base = operator_of(p);
    auto coeffs = base.coeffs();
    auto it = coeffs.begin();
    std::advance(it, static_cast<long>(rng.uniform(0, coeffs.size() - 1)));
    Monomial shift(n + 1);
    const unsigned degree = static_cast<unsigned>(rng.uniform(1, 2));
    for (unsigned d = 0; d < degree; ++d) ++shift.exps[rng.uniform(0, n)];
    Polynomial factor = Polynomial::constant(Layout::spacetime, n, Scalar(1));
    factor.add_term(shift, rng.nonzero_gaussian_rational());
    it->second = it->second * factor;
    out.emplace_back(n, base.m(), std::move(coeffs));
  }
  return out;
}

}  // namespace symclass
