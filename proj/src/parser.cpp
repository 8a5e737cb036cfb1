#include "symclass/parser.hpp"

#include <cctype>
#include <limits>

namespace symclass {

namespace {

using ast::Node;
using ast::NodePtr;

class Parser {
 public:
  Parser(std::string_view text, std::size_t n, ExprMode mode) : text_(text), n_(n), mode_(mode) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr make(std::size_t at, auto kind) { return std::make_unique<Node>(Node{at, std::move(kind)}); }

  NodePtr expr() {
    skip_ws();
    std::size_t at = pos_;
    ast::Sum sum;
    bool negated = false;
    if (accept('-'))
      negated = true;
    else
      accept('+');
    sum.terms.emplace_back(negated, term());
    for (;;) {
      if (accept('+'))
        sum.terms.emplace_back(false, term());
      else if (accept('-'))
        sum.terms.emplace_back(true, term());
      else
        break;
    }
    if (sum.terms.size() == 1 && !sum.terms.front().first) return std::move(sum.terms.front().second);
    return make(at, std::move(sum));
  }

  NodePtr term() {
    skip_ws();
    std::size_t at = pos_;
    ast::Product prod;
    prod.factors.push_back(factor());
    while (accept('*')) prod.factors.push_back(factor());
    if (prod.factors.size() == 1) return std::move(prod.factors.front());
    return make(at, std::move(prod));
  }

  NodePtr factor() {
    skip_ws();
    std::size_t at = pos_;
    NodePtr base = atom();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a non-negative integer literal");
    unsigned long e = uint_literal();
    if (e > 64) fail_at("exponent too large", at);
    return make(at, ast::Power{std::move(base), static_cast<unsigned>(e)});
  }

  unsigned long uint_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) fail_at("integer literal too long", start);
    return std::stoul(digits);
  }

  std::size_t axis_index(std::size_t at, const std::string& name) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail_at("'" + name + "' needs an index 1.." + std::to_string(n_), at);
    unsigned long k = uint_literal();
    if (k < 1 || k > n_)
      fail_at("index " + std::to_string(k) + " of '" + name + "' out of range 1.." + std::to_string(n_), at);
    return k;
  }

  NodePtr atom() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (word == "i") return make(at, ast::Literal{Scalar::i()});
    if (mode_ == ExprMode::op) {
      if (word == "dt") return make(at, ast::Derivative{0});
      if (word == "t") return make(at, ast::BaseVariable{0});
      if (word == "dx") return make(at, ast::Derivative{axis_index(at, word)});
      if (word == "x") return make(at, ast::BaseVariable{axis_index(at, word)});
    } else {
      if (word == "tau") return make(at, ast::Derivative{0});
      if (word == "xi") return make(at, ast::Derivative{axis_index(at, word)});
    }
    fail_at("unknown identifier '" + word + "'", at);
  }

  NodePtr number() {
    std::size_t at = pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.')
      fail_at("decimal literals are not exact; write a fraction such as 1/2 instead of 0.5", at);
    std::string lit(text_.substr(start, pos_ - start));
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t den_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den_start == pos_) fail("expected a denominator after '/'");
      lit += "/" + std::string(text_.substr(den_start, pos_ - den_start));
    } else {
      pos_ = save;
    }
    Rational q;
    try {
      q = parse_rational(lit);
    } catch (const std::invalid_argument& e) {
      fail_at(e.what(), at);
    }
    return make(at, ast::Literal{Scalar(q)});
  }

  std::string_view text_;
  std::size_t n_;
  ExprMode mode_;
  std::size_t pos_ = 0;
};

/// Lowered value: sum of scalar * base monomial * derivative monomial.
class Lowering {
 public:
  explicit Lowering(std::size_t n) : n_(n) {}

  FullSymbol lower(const Node& node) {
    return std::visit([&](const auto& k) { return lower_kind(node, k); }, node.kind);
  }

 private:
  FullSymbol unit(const Scalar& c) const {
    FullSymbol out(n_);
    out.add_term(Monomial(n_ + 1), Monomial(n_ + 1), c);
    return out;
  }

  static bool has_derivatives(const FullSymbol& v) {
    for (const auto& [key, c] : v.terms())
      if (!key.second.is_constant()) return true;
    return false;
  }
  static bool has_base_variables(const FullSymbol& v) {
    for (const auto& [key, c] : v.terms())
      if (!key.first.is_constant()) return true;
    return false;
  }

  FullSymbol multiply(const FullSymbol& a, const FullSymbol& b, std::size_t offset) const {
    if (has_derivatives(a) && has_base_variables(b))
      throw ParseError("non-commutative placement: coefficient to the right of a derivative", offset);
    FullSymbol out(n_);
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) out.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
    return out;
  }

  FullSymbol lower_kind(const Node&, const ast::Sum& s) {
    FullSymbol out(n_);
    for (const auto& [negated, term] : s.terms) {
      FullSymbol value = lower(*term);
      for (const auto& [key, c] : value.terms()) out.add_term(key.first, key.second, negated ? -c : c);
    }
    return out;
  }
  FullSymbol lower_kind(const Node&, const ast::Product& p) {
    FullSymbol acc = unit(Scalar(1));
    for (const auto& f : p.factors) acc = multiply(acc, lower(*f), f->offset);
    return acc;
  }
  FullSymbol lower_kind(const Node& node, const ast::Power& p) {
    FullSymbol base = lower(*p.base);
    FullSymbol acc = unit(Scalar(1));
    for (unsigned k = 0; k < p.exponent; ++k) acc = multiply(acc, base, node.offset);
    return acc;
  }
  FullSymbol lower_kind(const Node&, const ast::Derivative& d) {
    FullSymbol out(n_);
    Monomial m(n_ + 1);
    m.exps[d.axis] = 1;
    out.add_term(Monomial(n_ + 1), m, Scalar(1));
    return out;
  }
  FullSymbol lower_kind(const Node&, const ast::BaseVariable& v) {
    FullSymbol out(n_);
    Monomial m(n_ + 1);
    m.exps[v.axis] = 1;
    out.add_term(m, Monomial(n_ + 1), Scalar(1));
    return out;
  }
  FullSymbol lower_kind(const Node&, const ast::Literal& l) { return unit(l.value); }

  std::size_t n_;
};

std::string scalar_factor(const Scalar& mag) {
  return mag.is_real() || sgn(mag.re()) == 0 ? mag.str() : "(" + mag.str() + ")";
}

}  // namespace

ast::NodePtr parse_ast(std::string_view text, std::size_t n, ExprMode mode) {
  return Parser(text, n, mode).parse();
}

OperatorSpec parse_operator(std::string_view text, std::size_t n) {
  FullSymbol lowered = Lowering(n).lower(*parse_ast(text, n, ExprMode::op));
  OperatorSpec::Coefficients coeffs;
  unsigned order = 0;
  for (const auto& [key, c] : lowered.terms()) {
    auto [it, _] = coeffs.try_emplace(key.second, Layout::spacetime, n);
    it->second.add_term(key.first, c);
    order = std::max(order, key.second.degree());
  }
  if (lowered.terms().empty()) throw InvalidOperator("expression lowers to the zero operator");
  return OperatorSpec(n, order, std::move(coeffs));
}

Polynomial parse_symbol(std::string_view text, std::size_t n) {
  FullSymbol lowered = Lowering(n).lower(*parse_ast(text, n, ExprMode::symbol));
  Polynomial out(Layout::spacetime, n);
  for (const auto& [key, c] : lowered.terms()) out.add_term(key.second, c);
  return out;
}

std::string print_operator(const OperatorSpec& op) {
  FullSymbol sym = full_symbol(op);
  std::string out;
  for (const auto& [key, c] : sym.terms()) {
    bool negative = false;
    Scalar mag = c;
    if (c.is_real() || sgn(c.re()) == 0) {
      negative = c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
      if (negative) mag = -c;
    }
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::vector<std::string> factors;
    if (!mag.is_one()) factors.push_back(scalar_factor(mag));
    for (std::size_t v = 0; v <= op.n(); ++v) {
      unsigned e = key.first.exps[v];
      if (!e) continue;
      std::string name = v == 0 ? "t" : "x" + std::to_string(v);
      factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    }
    for (std::size_t v = 0; v <= op.n(); ++v) {
      unsigned e = key.second.exps[v];
      if (!e) continue;
      std::string name = v == 0 ? "dt" : "dx" + std::to_string(v);
      factors.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

}  // namespace symclass
