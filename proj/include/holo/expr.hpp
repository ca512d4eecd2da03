#pragma once
// Closed-form expression trees.
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holo/arith.hpp"

namespace holo {

enum class ExprKind { Number, Infinity, Symbol, Add, Mul, Pow, Call, Sum, Integral };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  Rat value;            // Number
  int sign = 1;         // Infinity
  std::string name;     // Symbol, Call
  std::vector<Expr> args;  // Add/Mul: operands; Pow: base, exponent; Call: arguments;
                           // Sum/Integral: body, bound variable, lower, upper
};

namespace ex {
Expr num(const Rat& r);
Expr num(long v);
Expr infinity(int sign);
Expr sym(const std::string& name);
Expr add(std::vector<Expr> xs);
Expr mul(std::vector<Expr> xs);
Expr pow(const Expr& b, const Expr& e);
Expr call(const std::string& name, std::vector<Expr> args);
Expr sum(const Expr& body, const std::string& var, const Expr& lo, const Expr& hi);
Expr integral(const Expr& body, const std::string& var, const Expr& lo, const Expr& hi);

Expr add(const Expr& a, const Expr& b);
Expr sub(const Expr& a, const Expr& b);
Expr mul(const Expr& a, const Expr& b);
Expr div(const Expr& a, const Expr& b);
Expr neg(const Expr& a);
}  // namespace ex

// Total structural order; equal iff structurally identical.
int compare(const Expr& a, const Expr& b);
inline bool equal(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

std::string to_string(const Expr& e);

bool is_number(const Expr& e);
bool depends_on(const Expr& e, const std::string& v);
std::set<std::string> free_symbols(const Expr& e);
Expr substitute(const Expr& e, const std::string& v, const Expr& val);

// Exact value of a rational expression in symbols, as a rational function; nullopt otherwise.
std::optional<RatFun> to_ratfun(const Expr& e);
Expr from_poly(const Poly& p);
Expr from_ratfun(const RatFun& r);

// Name of the commutative indeterminate standing for a constant subexpression.
std::string constant_symbol_name(const Expr& e);
// Inverse lookup for names produced by constant_symbol_name.
std::optional<Expr> constant_symbol_expr(const std::string& name);

}  // namespace holo
