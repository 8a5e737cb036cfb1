#include "symclass/decider.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace symclass {

namespace {

Layout layout_for(Metric space) { return space == Metric::minkowski ? Layout::spacetime : Layout::spatial; }

void require_layout(const Polynomial& p, Metric space, const char* who) {
  if (p.layout() != layout_for(space))
    throw Error(std::string(who) + ": " + (space == Metric::minkowski ? "expected a space-time symbol in (tau, xi)"
                                                                       : "expected a spatial symbol in xi only"));
}

/// The odd-degree homogeneous parts of every invariant symbol vanish.
void assert_parity(const Polynomial& p) {
  for (const auto& [m, c] : p.terms())
    if (m.degree() % 2) throw std::logic_error("invariant symbol with odd-degree part: " + p.str());
}

std::optional<GroupWitness> try_element(const Polynomial& p, const GroupElement& g) {
  Polynomial moved = pullback_symbol(p, g);
  Polynomial diff = moved - p;
  if (diff.is_zero()) return std::nullopt;
  std::vector<Scalar> covector = find_nonvanishing_point(diff);
  Scalar lhs = eval_at(moved, covector);
  Scalar rhs = eval_at(p, covector);
  return GroupWitness{g, std::move(covector), std::move(lhs), std::move(rhs)};
}

GroupElement embed(const GroupElement& spatial) {
  return reflection_or_permutation(spatial.n(), Metric::minkowski, reflection::EmbedSpatial{spatial.matrix()})
      .relabeled("embed(" + spatial.label() + ")");
}

std::vector<GroupElement> base_candidates(Metric space, std::size_t n) {
  std::vector<GroupElement> out;
  const std::size_t first_axis = space == Metric::minkowski ? 0 : 1;
  for (std::size_t k = first_axis; k <= n; ++k)
    out.push_back(reflection_or_permutation(n, space, reflection::NegateAxis{k}));
  out.push_back(reflection_or_permutation(n, space, reflection::NegateAll{}));
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t l = k + 1; l <= n; ++l)
      out.push_back(reflection_or_permutation(n, space, reflection::SwapAxes{k, l}));
  const auto params = witness_parameters();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (const auto& t : params) {
        GroupElement r = rational_rotation(n, i, j, t);
        out.push_back(space == Metric::minkowski ? embed(r) : r);
      }
  if (space == Metric::minkowski)
    for (std::size_t i = 1; i <= n; ++i)
      for (const auto& t : params) out.push_back(rational_boost(n, i, t));
  return out;
}

/// Reflections fixing all but one connected component: time and xi_1 for
/// minkowski, xi_1 for euclidean.
std::vector<GroupElement> component_reflections(Metric space, std::size_t n) {
  std::vector<GroupElement> out;
  if (space == Metric::minkowski) out.push_back(reflection_or_permutation(n, space, reflection::NegateAxis{0}));
  if (n >= 1) out.push_back(reflection_or_permutation(n, space, reflection::NegateAxis{1}));
  return out;
}

/// Splits a space-time symbol as sum_j p_j(xi) tau^j.
std::map<unsigned, Polynomial> split_by_time_degree(const Polynomial& p) {
  std::map<unsigned, Polynomial> out;
  for (const auto& [m, c] : p.terms()) {
    auto [it, _] = out.try_emplace(m.exps[0], Layout::spatial, p.n());
    it->second.add_term(Monomial(std::vector<unsigned>(m.exps.begin() + 1, m.exps.end())), c);
  }
  return out;
}

void cross_check(const Polynomial& p, Metric space, bool verdict) {
  if (lie_decider(p, space) != verdict)
    throw std::logic_error("proof-following and Lie-derivative deciders disagree on " + p.str());
}

}  // namespace

Polynomial expand(const CanonicalForm& cf, std::size_t n) {
  Layout layout = layout_for(cf.space);
  Polynomial g = Polynomial::quadratic_form(layout, n);
  Polynomial out(layout, n);
  Polynomial power = Polynomial::constant(layout, n, Scalar(1));
  for (std::size_t j = 0; j < cf.coeffs.size(); ++j) {
    if (j) power = power * g;
    out += power * cf.coeffs[j];
  }
  return out;
}

bool verify_witness(const Polynomial& p, const Witness& w) {
  if (const auto* gw = std::get_if<GroupWitness>(&w)) {
    // Re-derive tLambda xi directly rather than through pullback_symbol.
    const Matrix& m = gw->element.matrix();
    if (m.rows() != p.nvars() || gw->covector.size() != p.nvars()) return false;
    if (std::holds_alternative<MembershipViolation>(verify_membership(m, gw->element.metric()))) return false;
    std::vector<Scalar> moved(p.nvars());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) moved[r] += Scalar(m(c, r)) * gw->covector[c];
    Scalar lhs = eval_at(p, moved);
    Scalar rhs = eval_at(p, gw->covector);
    return lhs == gw->lhs && rhs == gw->rhs && lhs != rhs;
  }
  const auto& aw = std::get<AlgebraicWitness>(w);
  Polynomial d = lie_derivative(p, aw.generator);
  return !d.is_zero() && d == aw.derivative;
}

bool lie_decider(const Polynomial& p, Metric space) {
  require_layout(p, space, "lie_decider");
  for (const auto& gen : lie_generators(p.layout(), p.n()))
    if (!lie_derivative(p, gen).is_zero()) return false;
  for (const auto& r : component_reflections(space, p.n()))
    if (pullback_symbol(p, r) != p) return false;
  return true;
}

bool sampling_oracle(const Polynomial& p, Metric space, std::size_t count, std::uint64_t seed) {
  require_layout(p, space, "sampling_oracle");
  const std::size_t n = p.n();
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  auto random_t = [&](bool avoid_unit) {
    for (;;) {
      long num = static_cast<long>(uniform(0, 10)) - 5;
      long den = static_cast<long>(uniform(1, 5));
      Rational t = make_rational(num, den);
      if (sgn(t) != 0 && !(avoid_unit && abs(t) == 1)) return t;
    }
  };
  const std::size_t size = space == Metric::minkowski ? n + 1 : n;
  for (std::size_t s = 0; s < count; ++s) {
    GroupElement g = make_element(Matrix::identity(size), space, "identity");
    const std::size_t length = uniform(1, 5);
    for (std::size_t k = 0; k < length; ++k) {
      const std::uint64_t kind = uniform(0, 2);
      if (kind == 0 || (kind == 1 && n < 2) || (kind == 2 && space == Metric::euclidean && n < 2)) {
        std::size_t axis = uniform(space == Metric::minkowski ? 0 : 1, n);
        g = g * reflection_or_permutation(n, space, reflection::NegateAxis{axis});
      } else if (kind == 1 || space == Metric::euclidean) {
        std::size_t i = uniform(1, n - 1);
        std::size_t j = uniform(i + 1, n);
        GroupElement r = rational_rotation(n, i, j, random_t(false));
        g = g * (space == Metric::minkowski ? embed(r) : r);
      } else {
        g = g * rational_boost(n, uniform(1, n), random_t(true));
      }
    }
    if (pullback_symbol(p, g) != p) return false;
  }
  return true;
}

std::vector<Rational> witness_parameters() {
  return {make_rational(1, 2), make_rational(1, 3), make_rational(2, 3), make_rational(2), make_rational(3),
          make_rational(1, 4), make_rational(3, 4), make_rational(3, 2), make_rational(4), make_rational(1, 5)};
}

Witness witness_search(const Polynomial& p, Metric space, std::size_t budget) {
  require_layout(p, space, "witness_search");
  const std::size_t n = p.n();
  const auto base = base_candidates(space, n);
  std::size_t tried = 0;
  auto enumerate = [&]() -> std::optional<GroupWitness> {
    for (const auto& g : base) {
      if (tried++ >= budget) return std::nullopt;
      if (auto w = try_element(p, g)) return w;
    }
    for (const auto& a : base)
      for (const auto& b : base) {
        if (tried++ >= budget) return std::nullopt;
        if (auto w = try_element(p, a * b)) return w;
      }
    return std::nullopt;
  };
  if (auto w = enumerate()) return *w;

  // Budget exhausted (or every candidate fixes p): fall back to algebra.
  for (const auto& gen : lie_generators(p.layout(), n)) {
    Polynomial d = lie_derivative(p, gen);
    if (!d.is_zero()) return AlgebraicWitness{gen, std::move(d)};
  }
  for (const auto& r : component_reflections(space, n))
    if (auto w = try_element(p, r)) return *w;
  throw Error("witness_search: symbol is invariant, no witness exists: " + p.str());
}

SymbolClassification classify_rotation(const Polynomial& p, std::size_t budget) {
  if (p.layout() != Layout::spatial) throw Error("classify_rotation: symbol mentions tau");
  const Polynomial norm2 = Polynomial::quadratic_form(Layout::spatial, p.n());
  std::vector<Scalar> e1(p.n());
  if (p.n() >= 1) e1[0] = Scalar(1);

  CanonicalForm cf{Metric::euclidean, {}};
  bool invariant = true;
  for (const auto& [degree, part] : decompose_homogeneous(p)) {
    if (degree % 2) {
      invariant = false;
      break;
    }
    // A rotation-invariant homogeneous part is its value at e_1 times |xi|^degree.
    Scalar b = p.n() >= 1 ? eval_at(part, e1) : part.coeff(Monomial(0));
    if (part != norm2.pow(degree / 2) * b) {
      invariant = false;
      break;
    }
    cf.coeffs.resize(degree / 2 + 1);
    cf.coeffs[degree / 2] = b;
  }
  cross_check(p, Metric::euclidean, invariant);
  if (!invariant) return witness_search(p, Metric::euclidean, budget);
  assert_parity(p);
  return cf;
}

SymbolClassification classify_lorentz(const Polynomial& p, std::size_t budget) {
  if (p.layout() != Layout::spacetime) throw Error("classify_lorentz: expected a space-time symbol");
  const std::size_t n = p.n();
  auto finish_not_invariant = [&](Witness w) -> SymbolClassification {
    cross_check(p, Metric::minkowski, false);
    return w;
  };

  // Each tau^j coefficient must be rotation invariant.
  for (const auto& [j, pj] : split_by_time_degree(p)) {
    if (n == 0) break;
    auto rot = classify_rotation(pj, budget);
    if (is_invariant(rot)) continue;
    const auto& w = std::get<Witness>(rot);
    if (const auto* gw = std::get_if<GroupWitness>(&w)) {
      auto lifted = try_element(p, embed(gw->element));
      if (!lifted) throw std::logic_error("spatial witness does not lift to the space-time symbol");
      return finish_not_invariant(*lifted);
    }
    const auto& aw = std::get<AlgebraicWitness>(w);
    return finish_not_invariant(AlgebraicWitness{aw.generator, lie_derivative(p, aw.generator)});
  }

  // Homogeneous parts: odd ones must vanish, even ones are b * q^(l/2).
  const Polynomial q = Polynomial::quadratic_form(Layout::spacetime, n);
  CanonicalForm cf{Metric::minkowski, {}};
  const auto parts = decompose_homogeneous(p);
  for (const auto& [degree, part] : parts) {
    if (degree % 2 == 0) continue;
    auto w = try_element(p, reflection_or_permutation(n, Metric::minkowski, reflection::NegateAll{}));
    if (!w) throw std::logic_error("odd part survives but -I fixes the symbol");
    return finish_not_invariant(*w);
  }
  for (const auto& [degree, part] : parts) {
    Monomial time_power(n + 1);
    time_power.exps[0] = degree;
    Scalar b = part.coeff(time_power);
    if (part != q.pow(degree / 2) * b) return finish_not_invariant(witness_search(p, Metric::minkowski, budget));
    cf.coeffs.resize(degree / 2 + 1);
    cf.coeffs[degree / 2] = b;
  }
  cross_check(p, Metric::minkowski, true);
  assert_parity(p);
  return cf;
}

DilationVerdict classify_dilation(const CanonicalForm& cf) {
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < cf.coeffs.size(); ++j)
    if (!cf.coeffs[j].is_zero()) nonzero.push_back(j);
  if (nonzero.empty()) throw Error("classify_dilation: all coefficients are zero");
  DilationVerdict v;
  if (nonzero.size() == 1) {
    v.invariant = true;
    v.homogeneity_degree = static_cast<unsigned>(2 * nonzero.front());
    return v;
  }
  DilationCertificate cert;
  cert.low = nonzero.front();
  cert.high = nonzero.back();
  Rational factor = 1;
  for (std::size_t k = 0; k < 2 * (cert.high - cert.low); ++k) factor *= cert.scale;
  cert.residual = Scalar(factor - 1) * cf.coeffs[cert.low];
  v.certificate = std::move(cert);
  return v;
}

bool verify_dilation_certificate(const CanonicalForm& cf, const DilationCertificate& cert) {
  if (cert.scale == 1 || sgn(cert.scale) <= 0) return false;
  if (cert.low >= cert.high || cert.high >= cf.coeffs.size()) return false;
  if (cf.coeffs[cert.low].is_zero() || cf.coeffs[cert.high].is_zero()) return false;
  Rational lambda2 = cert.scale * cert.scale;
  Rational factor = 1;
  for (std::size_t k = cert.low; k < cert.high; ++k) factor *= lambda2;
  Scalar expected = Scalar(factor - 1) * cf.coeffs[cert.low];
  return !expected.is_zero() && expected == cert.residual;
}

ClassificationReport classify_operator(const OperatorSpec& op, Metric space, std::size_t budget,
                                       std::string input) {
  if (space == Metric::euclidean && op.uses_time_derivative())
    throw Error("euclidean classification requested but the operator contains dt");
  ClassificationReport report;
  report.space = space;
  report.n = op.n();
  report.m = op.m();
  report.input = std::move(input);
  report.translation = is_translation_invariant(op);
  if (!report.translation.invariant) return report;

  Polynomial symbol = constant_symbol(op);
  if (space == Metric::euclidean) symbol = to_spatial(symbol);
  report.group = space == Metric::minkowski ? classify_lorentz(symbol, budget) : classify_rotation(symbol, budget);
  report.symbol = symbol;
  if (const auto* cf = std::get_if<CanonicalForm>(&*report.group)) {
    // Invariant operators have even order m and top coefficient b_{m/2} != 0.
    if (op.m() % 2 || cf->coeffs.size() != op.m() / 2 + 1 || cf->coeffs.back().is_zero())
      throw std::logic_error("canonical form inconsistent with the declared order");
    report.dilation = classify_dilation(*cf);
    report.poincare = true;
  }
  return report;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (nvars == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (v + 1 == nvars) {
      cur.exps[v] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur.exps[v] = e;
      rec(v + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

std::size_t rotation_invariant_dimension(std::size_t n, unsigned j) {
  const auto basis = monomials_of_degree(n, j);
  std::map<Monomial, std::size_t, GrlexFirst> index;
  for (std::size_t c = 0; c < basis.size(); ++c) index.emplace(basis[c], c);

  std::vector<std::function<Polynomial(const Polynomial&)>> maps;
  for (const auto& gen : lie_generators(Layout::spatial, n))
    maps.emplace_back([gen](const Polynomial& x) { return lie_derivative(x, gen); });
  if (n >= 1) {
    GroupElement r = reflection_or_permutation(n, Metric::euclidean, reflection::NegateAxis{1});
    maps.emplace_back([r](const Polynomial& x) { return pullback_symbol(x, r) - x; });
  }

  Matrix system(maps.size() * basis.size(), basis.size());
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Polynomial x(Layout::spatial, n);
      x.add_term(basis[c], Scalar(1));
      const Polynomial image = maps[k](x);
      for (const auto& [mono, coeff] : image.terms()) {
        if (!coeff.is_real()) throw std::logic_error("rational map produced a complex coefficient");
        system(k * basis.size() + index.at(mono), c) = coeff.re();
      }
    }
  return basis.size() - system.rank();
}

}  // namespace symclass
