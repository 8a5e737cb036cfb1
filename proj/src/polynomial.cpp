#include "symclass/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "symclass/errors.hpp"

namespace symclass {

unsigned Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0u); }

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] += o.exps[i];
  return out;
}

bool GrlexFirst::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(), a.exps.end());
}

Polynomial Polynomial::constant(Layout layout, std::size_t n, const Scalar& c) {
  Polynomial p(layout, n);
  p.add_term(Monomial(p.nvars()), c);
  return p;
}

Polynomial Polynomial::variable(Layout layout, std::size_t n, std::size_t var) {
  Polynomial p(layout, n);
  if (var >= p.nvars()) throw DimensionMismatch("variable index out of range", var, p.nvars());
  Monomial m(p.nvars());
  m.exps[var] = 1;
  p.add_term(m, Scalar(1));
  return p;
}

Polynomial Polynomial::quadratic_form(Layout layout, std::size_t n) {
  Polynomial q(layout, n);
  std::size_t first_spatial = layout == Layout::spacetime ? 1 : 0;
  if (layout == Layout::spacetime) {
    Monomial m(q.nvars());
    m.exps[0] = 2;
    q.add_term(m, Scalar(1));
  }
  Scalar sign = layout == Layout::spacetime ? Scalar(-1) : Scalar(1);
  for (std::size_t k = first_spatial; k < q.nvars(); ++k) {
    Monomial m(q.nvars());
    m.exps[k] = 2;
    q.add_term(m, sign);
  }
  return q;
}

unsigned Polynomial::degree() const {
  // Leading term first under GrlexFirst.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Scalar Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != nvars()) throw DimensionMismatch("monomial length", m.size(), nvars());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& o, const char* what) const {
  if (n_ != o.n_) throw DimensionMismatch(std::string(what) + ": dimension mismatch", n_, o.n_);
  if (layout_ != o.layout_)
    throw DimensionMismatch(std::string(what) + ": layout mismatch (variable count)", nvars(), o.nvars());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o, "sub");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b, "mul");
  Polynomial out(a.layout_, a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial acc = constant(layout_, n_, Scalar(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) acc = acc * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return acc;
}

std::string variable_name(Layout layout, Naming naming, std::size_t var) {
  const char* time = naming == Naming::covariable ? "tau" : "t";
  const char* space = naming == Naming::covariable ? "xi" : "x";
  if (layout == Layout::spacetime) return var == 0 ? time : space + std::to_string(var);
  return space + std::to_string(var + 1);
}

namespace {

std::string monomial_str(const Polynomial& p, const Monomial& m, Naming naming) {
  std::string out;
  for (std::size_t v = 0; v < m.exps.size(); ++v) {
    if (m.exps[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(p.layout(), naming, v);
    if (m.exps[v] > 1) out += '^' + std::to_string(m.exps[v]);
  }
  return out;
}

}  // namespace

std::string Polynomial::str(Naming naming) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    // Pull a sign out of real or purely imaginary coefficients.
    bool negative = false;
    Scalar mag = c;
    if (c.is_real() || sgn(c.re()) == 0) {
      negative = c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
      if (negative) mag = -c;
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string ms = monomial_str(*this, m, naming);
    std::string cs = mag.is_real() || sgn(mag.re()) == 0 ? mag.str() : "(" + mag.str() + ")";
    if (ms.empty())
      out += cs;
    else if (mag.is_one())
      out += ms;
    else
      out += cs + "*" + ms;
  }
  return out;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw std::logic_error("unknown ArithOp");
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  if (images.size() != p.nvars()) throw DimensionMismatch("substitution arity", images.size(), p.nvars());
  if (images.empty()) return p;
  const Polynomial& proto = images.front();
  for (const auto& img : images)
    if (img.n() != proto.n() || img.layout() != proto.layout())
      throw DimensionMismatch("substitution images disagree on ring", img.nvars(), proto.nvars());

  // Cache powers of each image; degrees are small so a flat table suffices.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t v = 0; v < images.size(); ++v)
    powers[v].push_back(Polynomial::constant(proto.layout(), proto.n(), Scalar(1)));
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    while (powers[v].size() <= e) powers[v].push_back(powers[v].back() * images[v]);
    return powers[v][e];
  };

  Polynomial out(proto.layout(), proto.n());
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(proto.layout(), proto.n(), c);
    for (std::size_t v = 0; v < m.exps.size(); ++v)
      if (m.exps[v]) term = term * power(v, m.exps[v]);
    out += term;
  }
  return out;
}

Polynomial substitute_linear(const Polynomial& p, const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("substitution matrix is not square", m.rows(), m.cols());
  if (m.rows() != p.nvars()) throw DimensionMismatch("substitution matrix size", m.rows(), p.nvars());
  std::vector<Polynomial> images;
  images.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    Polynomial row(p.layout(), p.n());
    for (std::size_t k = 0; k < p.nvars(); ++k) {
      if (sgn(m(i, k)) == 0) continue;
      Monomial mono(p.nvars());
      mono.exps[k] = 1;
      row.add_term(mono, Scalar(m(i, k)));
    }
    images.push_back(std::move(row));
  }
  return substitute(p, images);
}

std::vector<std::pair<unsigned, Polynomial>> decompose_homogeneous(const Polynomial& p) {
  std::map<unsigned, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    auto [it, _] = parts.try_emplace(m.degree(), p.layout(), p.n());
    it->second.add_term(m, c);
  }
  return {parts.begin(), parts.end()};
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw DimensionMismatch("derivative variable out of range", var, p.nvars());
  Polynomial out(p.layout(), p.n());
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exps[var];
    if (e == 0) continue;
    Monomial d = m;
    d.exps[var] = e - 1;
    out.add_term(d, c * Scalar(static_cast<long>(e)));
  }
  return out;
}

Scalar eval_at(const Polynomial& p, std::span<const Scalar> point) {
  if (point.size() != p.nvars()) throw DimensionMismatch("evaluation point length", point.size(), p.nvars());
  Scalar acc;
  for (const auto& [m, c] : p.terms()) {
    Scalar term = c;
    for (std::size_t v = 0; v < m.exps.size(); ++v)
      if (m.exps[v]) term *= pow(point[v], m.exps[v]);
    acc += term;
  }
  return acc;
}

}  // namespace symclass

namespace symclass {

std::vector<Scalar> find_nonvanishing_point(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial vanishes everywhere");
  const std::size_t nv = p.nvars();
  std::vector<Scalar> point(nv);
  if (!eval_at(p, point).is_zero()) return point;
  for (std::size_t v = 0; v < nv; ++v) {
    std::fill(point.begin(), point.end(), Scalar());
    point[v] = Scalar(1);
    if (!eval_at(p, point).is_zero()) return point;
  }
  auto value = [](std::size_t idx) -> long {
    long k = static_cast<long>((idx + 1) / 2);
    return idx % 2 ? k : -k;
  };
  for (std::size_t h = 1;; ++h) {
    const std::size_t radix = 2 * h + 1;
    std::vector<std::size_t> digits(nv, 0);
    for (;;) {
      std::size_t top = *std::max_element(digits.begin(), digits.end());
      if (top + 2 >= radix) {  // at least one coordinate at height h
        for (std::size_t v = 0; v < nv; ++v) point[v] = Scalar(value(digits[v]));
        if (!eval_at(p, point).is_zero()) return point;
      }
      std::size_t pos = nv;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < radix) break;
        digits[pos] = 0;
        if (pos == 0) {
          pos = nv + 1;
          break;
        }
      }
      if (pos == nv + 1 || nv == 0) break;
    }
    if (h > p.degree() + 1) throw std::logic_error("grid search exceeded the degree bound");
  }
}

}  // namespace symclass

namespace symclass {

Polynomial to_spatial(const Polynomial& p) {
  if (p.layout() == Layout::spatial) return p;
  Polynomial out(Layout::spatial, p.n());
  for (const auto& [m, c] : p.terms()) {
    if (m.exps[0] != 0) throw Error("polynomial depends on the time variable");
    out.add_term(Monomial(std::vector<unsigned>(m.exps.begin() + 1, m.exps.end())), c);
  }
  return out;
}

Polynomial to_spacetime(const Polynomial& p) {
  if (p.layout() == Layout::spacetime) return p;
  Polynomial out(Layout::spacetime, p.n());
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> e{0};
    e.insert(e.end(), m.exps.begin(), m.exps.end());
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

}  // namespace symclass
