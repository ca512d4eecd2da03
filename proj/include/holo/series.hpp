#pragma once
// Independent verification channel: exact Taylor prefixes and sequence values computed
// directly from the expression, never from a derived equation.
#include <string>
#include <vector>

#include "holo/expr.hpp"
#include "holo/operator_eq.hpp"

namespace holo {

struct SeriesPrefix {
  VarId var = -1;
  bool discrete = false;
  Rat point = 0;   // expansion point (continuous)
  long start = 0;  // first index (discrete)
  std::vector<RatFun> a;  // Taylor coefficients at point, or values a(start), a(start+1), ...
  int depth() const { return static_cast<int>(a.size()) - 1; }
};

constexpr int kDefaultDepth = 30;
constexpr int kVerifyMargin = 10;

// Taylor coefficients a_0..a_depth of f around x = point. Symbols other than x are parameters;
// transcendental constants such as sin(y) become indeterminates named by constant_symbol_name.
SeriesPrefix series_oracle(const Expr& f, const std::string& x, int depth = kDefaultDepth, const Rat& point = 0);
// Values f(start), ..., f(start + count - 1) in the discrete variable n.
SeriesPrefix sequence_oracle(const Expr& f, const std::string& n, long start, int count);
// Exact value of f with the given integer assignments (1/(negative integer)! = 0 convention).
RatFun sequence_value(const Expr& f, const std::vector<std::pair<std::string, long>>& at);

// Residual of the equation on the prefix over the checkable range.
std::vector<RatFun> residual(const LinearOperatorEq& p, const SeriesPrefix& s);
// Requires depth >= order + margin; throws InsufficientDepth otherwise.
bool check_annihilates(const LinearOperatorEq& p, const SeriesPrefix& s, int margin = kVerifyMargin);

// Truncated power series helpers shared with other modules.
using Series = std::vector<RatFun>;
Series series_mul(const Series& a, const Series& b);
Series series_pow(const Series& a, const RatFun& e);  // a_0 must be nonzero unless e is a nonnegative integer
// Taylor coefficients of the primitive fn(params..., c + s) in s.
Series primitive_series(const std::string& fn, const std::vector<RatFun>& params, const RatFun& c, int depth);
// Coefficients of g(x) = p(point + t) expanded in t.
Series poly_taylor(const Poly& p, VarId x, const RatFun& point, int depth);

}  // namespace holo
