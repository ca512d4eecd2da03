#pragma once
// Ordinary holonomic equations sum_i c_i Op^i f = 0 with Op = D (d/dx) or N (shift in n).
#include <string>
#include <utility>
#include <vector>

#include "holo/arith.hpp"

namespace holo {

enum class OpKind { D, N };

struct LinearOperatorEq {
  VarId var = -1;
  OpKind kind = OpKind::D;
  std::vector<RatFun> coeffs;  // c_0 .. c_r

  LinearOperatorEq() = default;
  LinearOperatorEq(VarId v, OpKind k, std::vector<RatFun> c);

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  const RatFun& lead() const { return coeffs.back(); }

  // Polynomial coefficients, no common factor, positive leading coefficient of c_r.
  LinearOperatorEq canonical() const;
  // Denominators cleared and rational content removed, common polynomial factors kept.
  LinearOperatorEq normalized() const;
  std::vector<Poly> poly_coeffs() const;
  // Equal up to a rational-function left factor (in the operator variable's field).
  bool same_as(const LinearOperatorEq& o) const;
  // Shift-kind: also equal after a shift n -> n + j of the whole equation.
  bool same_up_to_shift(const LinearOperatorEq& o) const;

  // Action on a rational function of var.
  RatFun apply(const RatFun& f) const;

  // D: "F' + 3*x*F'' = 0", N: "(n+1)*a(n+1) - a(n) = 0".
  std::string str(const std::string& fname = "") const;
};

// Composition a∘b (apply b first), left multiplication by a rational function, addition.
LinearOperatorEq compose(const LinearOperatorEq& a, const LinearOperatorEq& b);
LinearOperatorEq operator+(const LinearOperatorEq& a, const LinearOperatorEq& b);
LinearOperatorEq scale_left(const RatFun& r, const LinearOperatorEq& a);
// Right division over the rational-function field: p = q*b + r with order(r) < order(b).
std::pair<LinearOperatorEq, LinearOperatorEq> divide_right(const LinearOperatorEq& p, const LinearOperatorEq& b);
bool right_divides(const LinearOperatorEq& b, const LinearOperatorEq& p);
// Replace var by var + h (D) or n by n + h (N).
LinearOperatorEq shift_equation(const LinearOperatorEq& p, const Rat& h);

// Closure constructions.
LinearOperatorEq closure_sum(const LinearOperatorEq& p, const LinearOperatorEq& q);
LinearOperatorEq closure_product(const LinearOperatorEq& p, const LinearOperatorEq& q);
// f(r) where f satisfies p (in p.var) and r is a rational function of x.
LinearOperatorEq substitute_rational(const LinearOperatorEq& p, const RatFun& r, VarId x);

// Recurrence for Taylor coefficients at 0, and generating-function equation.
LinearOperatorEq de_to_re(const LinearOperatorEq& p, VarId n);
LinearOperatorEq re_to_de(const LinearOperatorEq& p, VarId x);
// L f = g with polynomial g: returns an operator annihilating f.
LinearOperatorEq homogenize(const LinearOperatorEq& p, const RatFun& rhs);

}  // namespace holo
