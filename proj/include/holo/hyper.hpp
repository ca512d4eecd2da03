#pragma once
// Hypergeometric terms, Gosper's algorithm and Zeilberger's creative telescoping.
#include <optional>
#include <string>
#include <vector>

#include "holo/expr.hpp"
#include "holo/operator_eq.hpp"

namespace holo {

// f(v+1)/f(v) as a rational function; throws NotHypergeometric.
RatFun term_ratio(const Expr& f, const std::string& v);

struct HyperTerm {
  Expr f;
  VarId n = -1, k = -1;
  RatFun ratio_n;  // F(n+1,k)/F(n,k)
  RatFun ratio_k;  // F(n,k+1)/F(n,k)
};
HyperTerm hyper_term(const Expr& f, const std::string& n, const std::string& k);

struct GosperResult {
  bool summable = false;
  RatFun certificate;  // R with G = R*F, G(k+1) - G(k) = F(k)
  // Gosper form ratio = a(k)/b(k) * c(k+1)/c(k) and the equation a x(k+1) - b(k-1) x(k) = c.
  Poly a, b, c;
  long degree_bound = -1;
  std::string reason;  // why no solution exists
};
GosperResult gosper(const RatFun& ratio, VarId k);
// R(k+1)*ratio - R(k) == 1
bool gosper_check(const RatFun& ratio, const RatFun& R, VarId k);

struct TelescopeResult {
  LinearOperatorEq recurrence;
  std::optional<RatFun> certificate;
  int order = 0;
  bool certified = false;
  std::vector<std::string> notes;
};

constexpr int kDefaultOrderMax = 6;
TelescopeResult zeilberger(const HyperTerm& t, int max_order = kDefaultOrderMax);
// sum_j c_j F(n+j,k) == G(n,k+1) - G(n,k) with G = R F, checked as a rational-function identity.
bool zeilberger_check(const HyperTerm& t, const LinearOperatorEq& rec, const RatFun& R);

// s(n0), ..., s(n0+count-1) for s(n) = sum over all integers k.
std::vector<RatFun> sum_initial_values(const Expr& f, const std::string& n, const std::string& k, long n0, int count);

}  // namespace holo
