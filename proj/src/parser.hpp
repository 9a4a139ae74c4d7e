#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "engine.hpp"

namespace prb {

// Surface syntax:
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := rational | primary
//   primary := ident | OP '(' expr ')' | '[' expr ',' expr ']' | '(' expr ')'
// OP is the operator symbol R or N; rationals are 'p' or 'p/q'. Generators
// are plain identifiers; R and N are reserved.
struct Expr {
  enum class Kind { Num, Var, Add, Sub, Neg, Mul, Bracket, Op };
  Kind kind;
  Rational num;
  std::string var;
  std::unique_ptr<Expr> a, b;
  char opsym = 0;     // for Kind::Op
  std::size_t pos = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr parse_expr(std::string_view text);  // throws parse_error

// Generators appearing in the expression, in order of first appearance.
std::vector<std::string> collect_generators(const Expr& e);

// Evaluate into canonical form in the given engine. Unknown generators and
// operator-symbol mismatches raise domain_error; a nonzero constant term
// raises domain_error because the algebras are non-unital.
LinComb evaluate(Engine& eng, const Expr& e);

}  // namespace prb
