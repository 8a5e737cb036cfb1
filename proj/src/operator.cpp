#include "symclass/operator.hpp"

#include <string>

namespace symclass {

OperatorSpec::OperatorSpec(std::size_t n, unsigned m, Coefficients coeffs) : n_(n), m_(m) {
  bool top_present = false;
  for (auto& [key, poly] : coeffs) {
    if (key.size() != n + 1)
      throw InvalidOperator("coefficient key has " + std::to_string(key.size()) + " exponents, expected " +
                            std::to_string(n + 1));
    if (poly.layout() != Layout::spacetime || poly.n() != n)
      throw InvalidOperator("coefficient polynomial must be in (t, x^1..x^" + std::to_string(n) + ")");
    if (key.degree() > m)
      throw InvalidOperator("coefficient of order " + std::to_string(key.degree()) + " exceeds declared order " +
                            std::to_string(m));
    if (poly.is_zero()) continue;
    if (key.degree() == m) top_present = true;
    coeffs_.emplace(key, std::move(poly));
  }
  if (!top_present)
    throw InvalidOperator("no nonzero coefficient of declared order " + std::to_string(m));
}

bool OperatorSpec::has_constant_coefficients() const {
  for (const auto& [key, poly] : coeffs_)
    if (poly.degree() > 0) return false;
  return true;
}

bool OperatorSpec::uses_time_derivative() const {
  for (const auto& [key, poly] : coeffs_)
    if (key.exps[0] > 0) return true;
  return false;
}

void FullSymbol::add_term(const Monomial& base, const Monomial& covar, const Scalar& c) {
  if (base.size() != n_ + 1 || covar.size() != n_ + 1)
    throw DimensionMismatch("full symbol monomial length", base.size(), n_ + 1);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({base, covar}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial FullSymbol::at_base_point(std::span<const Scalar> x0) const {
  if (x0.size() != n_ + 1) throw DimensionMismatch("base point length", x0.size(), n_ + 1);
  Polynomial out(Layout::spacetime, n_);
  for (const auto& [key, c] : terms_) {
    Scalar v = c;
    for (std::size_t k = 0; k < key.first.exps.size(); ++k)
      if (key.first.exps[k]) v *= pow(x0[k], key.first.exps[k]);
    out.add_term(key.second, v);
  }
  return out;
}

FullSymbol full_symbol(const OperatorSpec& op) {
  FullSymbol out(op.n());
  for (const auto& [key, poly] : op.coeffs())
    for (const auto& [base, c] : poly.terms()) out.add_term(base, key, c);
  return out;
}

TranslationVerdict is_translation_invariant(const OperatorSpec& op) {
  for (const auto& [key, poly] : op.coeffs()) {
    if (poly.degree() == 0) continue;
    std::vector<Scalar> origin(op.n() + 1);
    Scalar at_origin = eval_at(poly, origin);
    Polynomial shifted = poly - Polynomial::constant(Layout::spacetime, op.n(), at_origin);
    std::vector<Scalar> y = find_nonvanishing_point(shifted);
    Scalar at_y = eval_at(poly, y);
    return {false, TranslationWitness{key, std::move(y), std::move(at_y), std::move(at_origin)}};
  }
  return {};
}

Polynomial constant_symbol(const OperatorSpec& op) {
  if (!op.has_constant_coefficients())
    throw InvalidOperator("constant symbol requested for a variable-coefficient operator");
  Polynomial out(Layout::spacetime, op.n());
  Monomial base(op.n() + 1);
  for (const auto& [key, poly] : op.coeffs()) out.add_term(key, poly.coeff(base));
  return out;
}

OperatorSpec operator_of(const Polynomial& symbol) {
  if (symbol.layout() != Layout::spacetime) throw InvalidOperator("operator_of needs a space-time symbol");
  if (symbol.is_zero()) throw InvalidOperator("the zero symbol is not an operator of any order");
  OperatorSpec::Coefficients coeffs;
  for (const auto& [mono, c] : symbol.terms())
    coeffs.emplace(mono, Polynomial::constant(Layout::spacetime, symbol.n(), c));
  return OperatorSpec(symbol.n(), symbol.degree(), std::move(coeffs));
}

OperatorSpec compose(const OperatorSpec& a, const OperatorSpec& b) {
  if (a.n() != b.n()) throw DimensionMismatch("compose: dimension mismatch", a.n(), b.n());
  if (!a.has_constant_coefficients() || !b.has_constant_coefficients())
    throw InvalidOperator("compose is defined for constant-coefficient operators only");
  return operator_of(constant_symbol(a) * constant_symbol(b));
}

}  // namespace symclass
