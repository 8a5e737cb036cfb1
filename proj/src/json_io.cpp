#include "symclass/json_io.hpp"

#include "symclass/errors.hpp"

namespace symclass::io {

namespace {

Json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error("malformed integer string in JSON");
    return z;
  }
  throw Error("expected an integer in JSON, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
    throw Error(std::string("JSON field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Metric metric_from_string(const std::string& s) {
  if (s == "euclidean") return Metric::euclidean;
  if (s == "minkowski") return Metric::minkowski;
  throw Error("unknown metric tag '" + s + "'");
}

Json scalars(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return Json::array({integer(q.get_num()), integer(q.get_den())}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("rational must be [num, den], got " + j.dump());
  mpz_class num = integer_from_json(j[0]);
  mpz_class den = integer_from_json(j[1]);
  if (sgn(den) == 0) throw Error("zero denominator in JSON rational");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json to_json(const Scalar& s) { return Json{{"re", to_json(s.re())}, {"im", to_json(s.im())}}; }

Scalar scalar_from_json(const Json& j) {
  Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
  return {rational_from_json(field(j, "re")), im};
}

Json to_json(const Polynomial& p) {
  Json out{{"n", p.n()}};
  if (p.layout() == Layout::spatial) out["layout"] = "spatial";
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json{{"coeff", to_json(c)}, {"exps", m.exps}});
  out["terms"] = std::move(terms);
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  std::size_t n = size_field(j, "n");
  Layout layout = Layout::spacetime;
  if (j.contains("layout")) {
    std::string l = j.at("layout").get<std::string>();
    if (l == "spatial")
      layout = Layout::spatial;
    else if (l != "spacetime")
      throw Error("unknown polynomial layout '" + l + "'");
  }
  Polynomial p(layout, n);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw Error("'terms' must be an array");
  for (const auto& t : terms) {
    Scalar c = scalar_from_json(field(t, "coeff"));
    if (c.is_zero()) throw Error("zero coefficients are not allowed in polynomial JSON");
    auto exps = field(t, "exps").get<std::vector<unsigned>>();
    if (exps.size() != p.nvars()) throw DimensionMismatch("exponent vector length", exps.size(), p.nvars());
    Monomial m(std::move(exps));
    if (!p.coeff(m).is_zero()) throw Error("duplicate monomial in polynomial JSON");
    p.add_term(m, c);
  }
  return p;
}

Json to_json(const OperatorSpec& op) {
  Json coeffs = Json::array();
  for (const auto& [key, poly] : op.coeffs())
    coeffs.push_back(Json{{"j", key.exps[0]},
                          {"alpha", std::vector<unsigned>(key.exps.begin() + 1, key.exps.end())},
                          {"coeff_poly", to_json(poly)}});
  return Json{{"n", op.n()}, {"m", op.m()}, {"coeffs", std::move(coeffs)}};
}

OperatorSpec operator_from_json(const Json& j) {
  std::size_t n = size_field(j, "n");
  auto m = static_cast<unsigned>(size_field(j, "m"));
  OperatorSpec::Coefficients coeffs;
  for (const auto& c : field(j, "coeffs")) {
    std::vector<unsigned> exps{static_cast<unsigned>(size_field(c, "j"))};
    auto alpha = field(c, "alpha").get<std::vector<unsigned>>();
    if (alpha.size() != n) throw DimensionMismatch("alpha length", alpha.size(), n);
    exps.insert(exps.end(), alpha.begin(), alpha.end());
    Polynomial poly = polynomial_from_json(field(c, "coeff_poly"));
    Monomial key(std::move(exps));
    if (coeffs.contains(key)) throw Error("duplicate (j, alpha) key in operator JSON");
    coeffs.emplace(std::move(key), std::move(poly));
  }
  return OperatorSpec(n, m, std::move(coeffs));
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error("matrix entries must be an array of rows");
  Matrix m(j.size(), j.empty() ? 0 : j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw Error("ragged matrix in JSON");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const GroupElement& g) {
  return Json{{"tag", to_string(g.metric())}, {"label", g.label()}, {"entries", to_json(g.matrix())}};
}

GroupElement element_from_json(const Json& j) {
  Metric metric = metric_from_string(field(j, "tag").get<std::string>());
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : "matrix";
  return make_element(matrix_from_json(field(j, "entries")), metric, label);
}

Json to_json(const CanonicalForm& cf) {
  Json out{{"space", to_string(cf.space)}, {"b", scalars(cf.coeffs)}};
  if (cf.zero_symbol()) out["zero_symbol"] = true;
  return out;
}

Json to_json(const Witness& w) {
  if (const auto* gw = std::get_if<GroupWitness>(&w))
    return Json{{"kind", "group"},
                {"element", to_json(gw->element)},
                {"covector", scalars(gw->covector)},
                {"lhs", to_json(gw->lhs)},
                {"rhs", to_json(gw->rhs)}};
  const auto& aw = std::get<AlgebraicWitness>(w);
  return Json{{"kind", "algebraic"}, {"generator", aw.generator.name()}, {"derivative", to_json(aw.derivative)}};
}

Json to_json(const TranslationWitness& w) {
  return Json{{"j", w.key.exps[0]},
              {"alpha", std::vector<unsigned>(w.key.exps.begin() + 1, w.key.exps.end())},
              {"point", scalars(w.point)},
              {"value_at_point", to_json(w.value_at_point)},
              {"value_at_origin", to_json(w.value_at_origin)}};
}

Json to_json(const DilationVerdict& v) {
  Json out{{"invariant", v.invariant}};
  if (v.homogeneity_degree) out["homogeneity_degree"] = *v.homogeneity_degree;
  if (v.certificate)
    out["certificate"] = Json{{"lambda", to_json(v.certificate->scale)},
                              {"indices", {v.certificate->low, v.certificate->high}},
                              {"residual", to_json(v.certificate->residual)}};
  return out;
}

Json to_json(const ClassificationReport& r) {
  const bool mink = r.space == Metric::minkowski;
  Json out{{"space", to_string(r.space)}, {"n", r.n}, {"m", r.m}};
  if (!r.input.empty()) out["input"] = r.input;
  out["translation"] = r.translation.invariant ? "yes" : "no";
  if (r.translation.witness) out["translation_witness"] = to_json(*r.translation.witness);
  const char* group_key = mink ? "lorentz" : "rotation";
  if (!r.group) {
    out[group_key] = "not_checked";
  } else if (const auto* cf = std::get_if<CanonicalForm>(&*r.group)) {
    Json g{{"invariant", true}, {"b", scalars(cf->coeffs)}};
    if (cf->zero_symbol()) g["zero_symbol"] = true;
    out[group_key] = std::move(g);
  } else {
    out[group_key] = Json{{"invariant", false}, {"witness", to_json(std::get<Witness>(*r.group))}};
  }
  if (r.dilation)
    out["dilation"] = to_json(*r.dilation);
  else
    out["dilation"] = "not_checked";
  out[mink ? "poincare" : "euclidean_motion"] = r.poincare ? "yes" : "no";
  if (r.symbol) out["symbol"] = r.symbol->str();
  return out;
}

}  // namespace symclass::io
