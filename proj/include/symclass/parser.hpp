#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symclass/operator.hpp"
#include "symclass/polynomial.hpp"

namespace symclass {

/// Surface syntax:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := 'dt' | 'dx' uint | 't' | 'x' uint | number | 'i' | '(' expr ')'
///   number := int ('/' uint)?
///
/// Symbols (for `act`) use 'tau' and 'xi' uint instead of the operator atoms.
/// Coefficients multiply derivatives from the left only.
namespace ast {

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Sum {
  std::vector<std::pair<bool, NodePtr>> terms;  // (negated, term)
};
struct Product {
  std::vector<NodePtr> factors;
};
struct Power {
  NodePtr base;
  unsigned exponent;
};
/// dt (axis 0) or dxK; tau / xiK in symbol mode.
struct Derivative {
  std::size_t axis;
};
/// t (axis 0) or xK.
struct BaseVariable {
  std::size_t axis;
};
struct Literal {
  Scalar value;
};

struct Node {
  std::size_t offset;
  std::variant<Sum, Product, Power, Derivative, BaseVariable, Literal> kind;
};

}  // namespace ast

enum class ExprMode { op, symbol };

ast::NodePtr parse_ast(std::string_view text, std::size_t n, ExprMode mode);

/// Parses and lowers an operator expression. Throws ParseError (syntax,
/// index or placement errors, with byte offset) or InvalidOperator.
OperatorSpec parse_operator(std::string_view text, std::size_t n);

/// Parses a space-time symbol in tau, xi1..xin.
Polynomial parse_symbol(std::string_view text, std::size_t n);

/// Prints an operator in the same surface syntax; parse_operator inverts it.
std::string print_operator(const OperatorSpec& op);

}  // namespace symclass
