#pragma once

// Recursive-descent parser for polynomial input.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := rational | var | '(' expr ')'
//
// Multiplication is explicit: "xy" is an unknown variable, not x*y, and the
// exponent must be a bare natural number ("x^(2)" is a syntax error).

#include <memory>
#include <string>
#include <vector>

#include "monolab/mpoly.hpp"
#include "monolab/rat.hpp"

namespace monolab {

struct PolyExpr {
  enum class Kind { Num, Var, Add, Sub, Mul, Pow } kind;
  Rat value;                  // Num
  std::string name;           // Var
  unsigned exponent = 0;      // Pow
  std::vector<PolyExpr> kids; // Add/Sub/Mul: two, Pow: one

  static PolyExpr num(Rat v);
  static PolyExpr var(std::string n);
};

// Parse against an allowlist of variable names (default {x, y}).
// Throws error(SyntaxError) / error(UnknownVariable) with input position.
PolyExpr parse_expr(const std::string& src,
                    const std::vector<std::string>& allowed = {"x", "y"});

MPoly to_mpoly(const PolyExpr& e);

// Convenience: parse_expr followed by to_mpoly.
MPoly parse_poly(const std::string& src,
                 const std::vector<std::string>& allowed = {"x", "y"});

}  // namespace monolab
