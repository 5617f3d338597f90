#ifndef CYCLOTRIG_PARSE_HPP
#define CYCLOTRIG_PARSE_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotrig/verify.hpp"

namespace cyclotrig {

struct ParseError : std::runtime_error {
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error("at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
  size_t position;
};

struct LowerError : std::runtime_error {
  explicit LowerError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ExprNode {
  enum class Kind {
    Number, Pi, Sqrt, Sin, Cos, Tan, Add, Sub, Mul, Div, Negate
  };
  Kind kind;
  Rational value;  // Number only
  std::unique_ptr<ExprNode> a, b;
};

using ExprPtr = std::unique_ptr<ExprNode>;

// expr := term (('+'|'-') term)*
// term := factor ('*'? factor | '/' factor)*
// factor := number | 'pi' | func '(' expr ')' | '(' expr ')' | '-' factor
// Implicit multiplication ("4 sin(x)", "3pi") is part of the grammar.
ExprPtr parse(const std::string& text);

// constant + pi_coeff * pi + trig terms + surd coefficients. Anything the
// identity language cannot express (products of trig terms, sqrt of a
// non-rational, ...) raises LowerError.
struct LinearForm {
  Rational constant;
  Rational pi_coeff;
  std::vector<TrigTerm> terms;
  std::map<unsigned, Rational> surds;  // squarefree m > 1 -> coefficient

  bool is_rational() const {
    return pi_coeff.is_zero() && terms.empty() && surds.empty();
  }
};

LinearForm lower(const ExprNode& ast);

// lhs - rhs folded into the canonical Identity shape; at most one surd
// may survive the subtraction.
Identity make_identity(const LinearForm& lhs, const LinearForm& rhs);

// Double-precision evaluation of the raw AST (diagnostic only).
double eval_numeric(const ExprNode& ast);

}  // namespace cyclotrig

#endif
