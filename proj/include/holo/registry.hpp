#pragma once
// Table of primitive functions with their defining equations.
#include <functional>
#include <string>
#include <vector>

#include "holo/operator_eq.hpp"

namespace holo {

struct PrimitiveEntry {
  std::string name;  // lower case, as stored in Call nodes
  std::string display;
  size_t arity = 1;
  // Differential equation in the last argument; the leading arguments enter as parameters.
  std::function<LinearOperatorEq(const std::vector<RatFun>& params, VarId u)> de;
  // Recurrence in the first argument (the index); the remaining arguments enter as parameters.
  std::function<LinearOperatorEq(const std::vector<RatFun>& rest, VarId nu)> re;
  // Hypergeometric term in its argument: ratio f(u+1)/f(u).
  std::function<RatFun(const RatFun& u)> term_ratio;
  // Leading arguments are parameters that only the extended summation algorithm can shift.
  bool parameters_need_extended = false;
};

const std::vector<PrimitiveEntry>& registry_default();
const PrimitiveEntry* find_primitive(const std::string& lower_name);
std::string display_name(const std::string& name);

}  // namespace holo
