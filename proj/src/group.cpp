#include "symclass/group.hpp"

#include <stdexcept>

namespace symclass {

namespace detail {
struct ElementFactory {
  static GroupElement make(Matrix m, Metric metric, std::string label) {
    return GroupElement(std::move(m), metric, std::move(label));
  }
};
}  // namespace detail

std::string to_string(Metric m) { return m == Metric::euclidean ? "euclidean" : "minkowski"; }

namespace {

Matrix metric_matrix(Metric metric, std::size_t size) {
  if (metric == Metric::euclidean) return Matrix::identity(size);
  if (size == 0) throw Error("minkowski matrices have size 1+n >= 1");
  return Matrix::minkowski_metric(size - 1);
}

std::size_t row_of(Metric metric, std::size_t n, std::size_t axis) {
  if (metric == Metric::minkowski) {
    if (axis > n) throw Error("axis " + std::to_string(axis) + " out of range 0.." + std::to_string(n));
    return axis;
  }
  if (axis < 1 || axis > n) throw Error("axis " + std::to_string(axis) + " out of range 1.." + std::to_string(n));
  return axis - 1;
}

std::size_t size_of(Metric metric, std::size_t n) { return metric == Metric::minkowski ? n + 1 : n; }

std::string rat(const Rational& q) { return q.get_str(); }

}  // namespace

Membership verify_membership(const Matrix& m, Metric metric, std::string label) {
  if (!m.square()) throw DimensionMismatch("group element must be square", m.rows(), m.cols());
  Matrix g = metric_matrix(metric, m.rows());
  Matrix left = m.transpose() * g * m - g;
  Matrix right = m * g * m.transpose() - g;
  for (int pass = 0; pass < 2; ++pass) {
    const Matrix& r = pass == 0 ? left : right;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        if (sgn(r(i, j)) != 0) return MembershipViolation{i, j, r(i, j), pass == 1};
  }
  return detail::ElementFactory::make(m, metric, std::move(label));
}

GroupElement make_element(const Matrix& m, Metric metric, std::string label) {
  auto result = verify_membership(m, metric, label);
  if (auto* v = std::get_if<MembershipViolation>(&result))
    throw Error(label + " is not in the " + to_string(metric) + " group: residual " + rat(v->residual) +
                " at (" + std::to_string(v->row) + "," + std::to_string(v->col) + ")");
  return std::get<GroupElement>(std::move(result));
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (metric_ != other.metric_ || matrix_.rows() != other.matrix_.rows())
    throw DimensionMismatch("group product of incompatible elements", matrix_.rows(), other.matrix_.rows());
  return make_element(matrix_ * other.matrix_, metric_, label_ + "*" + other.label_);
}

GroupElement GroupElement::transpose() const {
  return make_element(matrix_.transpose(), metric_, "transpose(" + label_ + ")");
}

GroupElement rational_rotation(std::size_t n, std::size_t i, std::size_t j, const Rational& t) {
  if (!(1 <= i && i < j && j <= n))
    throw Error("rotation plane (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for n=" +
                std::to_string(n));
  Rational den = 1 + t * t;
  Rational c = (1 - t * t) / den;
  Rational s = 2 * t / den;
  Matrix m = Matrix::identity(n);
  std::size_t a = i - 1, b = j - 1;
  m(a, a) = c;
  m(a, b) = -s;
  m(b, a) = s;
  m(b, b) = c;
  return make_element(m, Metric::euclidean,
                      "rotation(" + std::to_string(i) + "," + std::to_string(j) + "," + rat(t) + ")");
}

GroupElement rational_boost(std::size_t n, std::size_t i, const Rational& t) {
  if (i < 1 || i > n) throw Error("boost axis " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  if (abs(t) == 1) throw Error("boost parameter |t| = 1 is light-like, not a Lorentz transformation");
  Rational den = 1 - t * t;
  Rational c = (1 + t * t) / den;
  Rational s = 2 * t / den;
  Matrix m = Matrix::identity(n + 1);
  m(0, 0) = c;
  m(0, i) = s;
  m(i, 0) = s;
  m(i, i) = c;
  return make_element(m, Metric::minkowski, "boost(" + std::to_string(i) + "," + rat(t) + ")");
}

GroupElement reflection_or_permutation(std::size_t n, Metric metric, const reflection::Spec& spec) {
  const std::size_t size = size_of(metric, n);
  Matrix m = Matrix::identity(size);
  std::string label;
  if (auto* s = std::get_if<reflection::NegateAxis>(&spec)) {
    std::size_t r = row_of(metric, n, s->axis);
    m(r, r) = -1;
    label = "negate(" + std::to_string(s->axis) + ")";
  } else if (std::holds_alternative<reflection::NegateAll>(spec)) {
    m = -m;
    label = "negate_all";
  } else if (auto* s = std::get_if<reflection::SwapAxes>(&spec)) {
    std::size_t a = row_of(metric, n, s->a), b = row_of(metric, n, s->b);
    if (a == b) throw Error("swap needs two distinct axes");
    m(a, a) = 0;
    m(b, b) = 0;
    m(a, b) = 1;
    m(b, a) = 1;
    label = "swap(" + std::to_string(s->a) + "," + std::to_string(s->b) + ")";
  } else {
    const Matrix& r = std::get<reflection::EmbedSpatial>(spec).spatial;
    if (metric != Metric::minkowski) throw Error("spatial embedding targets the minkowski group");
    if (r.rows() != n || r.cols() != n) throw DimensionMismatch("embedded spatial block", r.rows(), n);
    make_element(r, Metric::euclidean, "spatial block");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a + 1, b + 1) = r(a, b);
    label = "embed(" + r.str() + ")";
  }
  return make_element(m, metric, label);
}

Polynomial pullback_symbol(const Polynomial& p, const GroupElement& g) {
  if (g.matrix().rows() != p.nvars())
    throw DimensionMismatch("pullback: element size vs symbol variables", g.matrix().rows(), p.nvars());
  return substitute_linear(p, g.matrix().transpose());
}

AffineMotion AffineMotion::translation(std::size_t n, std::vector<Rational> shift) {
  if (shift.size() != n + 1) throw DimensionMismatch("translation vector length", shift.size(), n + 1);
  return {make_element(Matrix::identity(n + 1), Metric::minkowski, "identity"), std::move(shift), Rational(1)};
}

AffineMotion AffineMotion::dilation(std::size_t n, const Rational& scale) {
  if (sgn(scale) <= 0) throw Error("dilation scale must be positive");
  return {make_element(Matrix::identity(n + 1), Metric::minkowski, "identity"),
          std::vector<Rational>(n + 1, Rational(0)), scale};
}

std::vector<Rational> AffineMotion::apply(const std::vector<Rational>& x) const {
  const Matrix& m = linear.matrix();
  if (x.size() != m.rows()) throw DimensionMismatch("point length", x.size(), m.rows());
  if (sgn(scale) <= 0) throw Error("dilation scale must be positive");
  std::vector<Rational> out(x.size(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
    out[r] = scale * out[r] - shift[r];
  }
  return out;
}

Polynomial pullback_function(const Polynomial& f, const AffineMotion& motion) {
  const Matrix& m = motion.linear.matrix();
  if (m.rows() != f.nvars()) throw DimensionMismatch("motion size vs function variables", m.rows(), f.nvars());
  std::vector<Polynomial> images;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Polynomial img = Polynomial::constant(f.layout(), f.n(), Scalar(-motion.shift[r]));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      Monomial mono(f.nvars());
      mono.exps[c] = 1;
      img.add_term(mono, Scalar(motion.scale * m(r, c)));
    }
    images.push_back(std::move(img));
  }
  return substitute(f, images);
}

std::string LieGenerator::name() const {
  if (kind == Kind::rotation) return "L" + std::to_string(i) + std::to_string(j);
  return "K" + std::to_string(i);
}

std::vector<LieGenerator> lie_generators(Layout layout, std::size_t n) {
  std::vector<LieGenerator> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) out.push_back(LieGenerator::rotation(i, j));
  if (layout == Layout::spacetime)
    for (std::size_t i = 1; i <= n; ++i) out.push_back(LieGenerator::boost(i));
  return out;
}

Polynomial lie_derivative(const Polynomial& p, const LieGenerator& gen) {
  const std::size_t n = p.n();
  const std::size_t offset = p.layout() == Layout::spacetime ? 0 : 1;  // axis k -> variable k - offset
  auto var = [&](std::size_t axis) { return Polynomial::variable(p.layout(), n, axis - offset); };
  auto d = [&](std::size_t axis) { return partial_derivative(p, axis - offset); };
  if (gen.kind == LieGenerator::Kind::rotation) {
    if (!(1 <= gen.i && gen.i < gen.j && gen.j <= n)) throw Error("invalid rotation generator " + gen.name());
    return var(gen.i) * d(gen.j) - var(gen.j) * d(gen.i);
  }
  if (p.layout() != Layout::spacetime) throw Error("boost generators act on space-time symbols only");
  if (gen.i < 1 || gen.i > n) throw Error("invalid boost generator " + gen.name());
  return var(0) * d(gen.i) + var(gen.i) * d(0);
}

}  // namespace symclass
