#pragma once
// Right factors of single-operator equations, compatibility with a function, normal forms.
#include <optional>
#include <string>
#include <vector>

#include "holo/expr.hpp"
#include "holo/ore.hpp"

namespace holo {

// multiplier * p = quotient * q + remainder, order(remainder) < order(q). The multiplier is 1
// whenever the division works over polynomials.
struct NcDivision {
  OrePoly quotient, remainder;
  Poly multiplier;
};
NcDivision nc_divide_right(const OrePoly& p, const OrePoly& q);

// p = content * (left ∘ right) exactly; left has primitive polynomial coefficients.
struct Factorization {
  RatFun content;
  LinearOperatorEq left, right;
};
std::optional<Factorization> factor_with(const LinearOperatorEq& p, const LinearOperatorEq& right);

struct FactorOptions {
  int degree_bound = -1;  // -1: max coefficient degree of p plus the factor order
  size_t max_candidates = 4096;
};

// Right factors of order r, canonical (primitive polynomial coefficients), sorted by their text.
// Order 1: hypergeometric / exponential-times-algebraic solutions; higher orders through the
// exterior power. Empty when nothing is found within the bound.
std::vector<LinearOperatorEq> right_factors(const LinearOperatorEq& p, int r, const FactorOptions& opt = {});
std::vector<OrePoly> right_factors(const OrePoly& p, int r, const FactorOptions& opt = {});

// First-order operators Op - s whose solutions solve p (s = y'/y or y(n+1)/y(n)).
std::vector<RatFun> hyper_solutions(const LinearOperatorEq& p, int degree_bound, size_t max_candidates = 4096);

struct CompatOptions {
  std::optional<Rat> point;  // expansion point (D) or first index (N); automatic when absent
  int depth = 30;
};
struct Compatibility {
  bool ok = false;
  bool conclusive = true;  // false when only residuals with transcendental constants were seen
  Rat point = 0;
  std::vector<std::string> notes;
};
Compatibility check_compatible(const LinearOperatorEq& q, const Expr& f, const CompatOptions& opt = {});
inline bool compatible(const LinearOperatorEq& q, const Expr& f, const CompatOptions& opt = {}) {
  return check_compatible(q, f, opt).ok;
}

struct NormalForm {
  LinearOperatorEq eq;
  bool certified_minimal = false;  // no lower order exists within the degree bound
  int degree_bound = 0;
  Rat point = 0;
  std::vector<std::string> notes;
};
// Lowest-order right factor of p that annihilates f.
NormalForm normal_form(const LinearOperatorEq& p, const Expr& f, const FactorOptions& opt = {});

// c_0 a(n) + c_j a(n+j) = 0 solved per residue class: a(j*n + s) = value[s] as an expression in n.
struct TwoTermSolution {
  int gap = 0;
  long start = 0;
  std::vector<Expr> branches;  // index s - start
  std::vector<std::string> display;
};
TwoTermSolution solve_two_term(const LinearOperatorEq& p, long start, const std::vector<Expr>& initial);

}  // namespace holo
