#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chebpv/errors.hpp"

namespace chebpv::expr {

// Grammar for integrand formulas in the single free variable x:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?          right-associative; "-x^2" = -(x^2)
//   atom   := number | 'x' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
//
// Numbers are decimal with optional fraction and exponent (2, 2.5, 1e-3).
// "pi" and "e" parse as numeric literals. Whitespace is insignificant.
// Allowed function names: sin cos tan exp log sqrt abs sinh cosh atan.

struct ParseError : Error {
  ParseError(std::size_t at, const std::string& message)
      : Error(message + " at position " + std::to_string(at)), position(at) {}
  std::size_t position;  // 0-based offset of the first offending token
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, variable, negate, binary, call };

  Kind kind = Kind::number;
  double value = 0.0;             // number
  char op = 0;                    // binary: + - * / ^
  std::string callee;             // call
  double (*fn)(double) = nullptr; // call target, bound at parse time
  ExprPtr lhs, rhs;               // binary children; negate/call operand in lhs
};

/// Throws ParseError with the 0-based position of the offending token.
ExprPtr parse(std::string_view text);

/// Standard real semantics. Division by zero, log of a non-positive
/// value, sqrt of a negative, and overflow yield IEEE non-finite results
/// that simply propagate; eval itself never throws.
double eval(const Expr& e, double x) noexcept;

/// Fully parenthesized canonical form; parse(to_string(e)) rebuilds a
/// structurally equal tree for any parseable expression.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// Names accepted in call position, sorted.
const std::vector<std::string>& builtin_functions();

}  // namespace chebpv::expr
