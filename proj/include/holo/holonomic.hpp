#pragma once
// Holonomic equations of closed-form expressions by recursive descent.
#include <string>
#include <vector>

#include "holo/expr.hpp"
#include "holo/operator_eq.hpp"

namespace holo {

struct Derivation {
  LinearOperatorEq eq;
  bool verified = false;
  Rat point = 0;   // expansion point used for the check (continuous)
  long start = 0;  // first index checked (discrete)
  std::vector<std::string> notes;
};

struct DeriveOptions {
  int depth = 30;
  bool verify = true;
  int order_max = 6;  // Zeilberger order limit for sums
};

Derivation derive_de(const Expr& f, const std::string& x, const DeriveOptions& opt = {});
Derivation derive_re(const Expr& a, const std::string& n, const DeriveOptions& opt = {});

inline LinearOperatorEq holonomic_de(const Expr& f, const std::string& x) { return derive_de(f, x).eq; }
inline LinearOperatorEq holonomic_re(const Expr& a, const std::string& n) { return derive_re(a, n).eq; }

// Pick an expansion point / start index where the oracle is defined and check p against f.
Derivation verify_equation(const LinearOperatorEq& p, const Expr& f, const std::string& v, int depth = 30);

}  // namespace holo

namespace holo {

// Sums and integrals whose summand is holonomic but not a hypergeometric term:
// annihilators of the summand are lifted to an Ore algebra and eliminated.
LinearOperatorEq telescope_sum_expr(const Expr& body, const std::string& n, const std::string& k,
                                    std::vector<std::string>* notes = nullptr);
LinearOperatorEq telescope_integral_expr(const Expr& body, const std::string& y, bool y_discrete, const std::string& x,
                                         std::vector<std::string>* notes = nullptr);

}  // namespace holo
