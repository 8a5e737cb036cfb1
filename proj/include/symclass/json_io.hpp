#pragma once

#include <json.hpp>

#include "symclass/decider.hpp"
#include "symclass/group.hpp"
#include "symclass/operator.hpp"
#include "symclass/polynomial.hpp"

namespace symclass::io {

using Json = nlohmann::ordered_json;

/// Rationals are [num, den]; an entry that does not fit in 64 bits is written
/// as a decimal string.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"re": [num, den], "im": [num, den]}
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"n": n, "terms": [{"coeff": ..., "exps": [...]}]}, terms in graded-lex
/// order. Spatial polynomials additionally carry "layout": "spatial" and
/// exponent vectors of length n.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"n": n, "m": m, "coeffs": [{"j": j, "alpha": [...], "coeff_poly": ...}]}
Json to_json(const OperatorSpec& op);
OperatorSpec operator_from_json(const Json& j);

/// {"tag": "euclidean"|"minkowski", "entries": [[[num, den], ...], ...]}
Json to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const CanonicalForm& cf);
Json to_json(const Witness& w);
Json to_json(const TranslationWitness& w);
Json to_json(const DilationVerdict& v);
Json to_json(const ClassificationReport& r);

}  // namespace symclass::io
