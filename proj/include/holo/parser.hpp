#pragma once
#include <string>

#include "holo/expr.hpp"
#include "holo/operator_eq.hpp"

namespace holo {

struct ParseOptions {
  bool rewrite_tan = true;  // tan(u) -> sin(u)/cos(u)
};

// Throws Error(Syntax) with the byte position, or Error(UnknownPrimitive).
Expr parse(const std::string& text, const ParseOptions& opt = {});

// An ordinary equation in var from either notation:
//   printed form   "F' + 3*x*F'' = 0", "F^(4)", "(n+1)*a(n+1) - a(n) = 0"
//   operator form  "(x^2-1)*D^2 - (1+x)*D + 1 - n^2" (coefficients left of the operator, read commutatively)
// fname defaults to F (D) or a (N); op defaults to D or N.
LinearOperatorEq parse_equation(const std::string& text, const std::string& var, OpKind kind,
                                const std::string& fname = "", const std::string& op = "");

}  // namespace holo
