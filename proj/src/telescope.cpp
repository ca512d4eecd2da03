#include <set>

#include "holo/groebner.hpp"
#include "holo/holonomic.hpp"

namespace holo {

namespace {

void collect(const LinearOperatorEq& e, std::set<std::string>& out) {
  for (auto& c : e.poly_coeffs())
    for (VarId v : c.variables()) out.insert(var_name(v));
}

std::string fresh(const std::string& want, const std::set<std::string>& taken) {
  std::string s = want;
  while (taken.count(s)) s += "_";
  return s;
}

struct Setup {
  RingPtr ring;
  std::vector<OrePoly> ann;
  std::string inner_op, outer_op;
};

// Ring with base variables {inner, outer, parameters} and one operator for each of inner and outer.
Setup setup(const LinearOperatorEq& inner, const LinearOperatorEq& outer, const std::string& in_name,
            const std::string& out_name, const std::string& in_op, const std::string& out_op) {
  std::set<std::string> vars{in_name, out_name};
  collect(inner, vars);
  collect(outer, vars);
  std::vector<std::string> base{in_name, out_name};
  for (auto& v : vars)
    if (v != in_name && v != out_name) base.push_back(v);
  Setup s;
  s.inner_op = fresh(in_op, vars);
  vars.insert(s.inner_op);
  s.outer_op = fresh(out_op, vars);
  s.ring = make_ring(base, {{s.inner_op, inner.kind, in_name}, {s.outer_op, outer.kind, out_name}});
  s.ann = {lift_to_ore(outer, s.ring), lift_to_ore(inner, s.ring)};
  return s;
}

DeriveOptions quiet() {
  DeriveOptions o;
  o.verify = false;
  return o;
}

void append(std::vector<std::string>* notes, const std::vector<std::string>& add) {
  if (notes) notes->insert(notes->end(), add.begin(), add.end());
}

}  // namespace

LinearOperatorEq telescope_sum_expr(const Expr& body, const std::string& n, const std::string& k,
                                    std::vector<std::string>* notes) {
  auto an = derive_re(body, n, quiet()).eq;
  auto ak = derive_re(body, k, quiet()).eq;
  Setup s = setup(ak, an, k, n, "K", "N");
  auto t = telescope_sum(s.ann, k, s.inner_op, s.outer_op, default_sum_order(*s.ring, k, s.inner_op, s.outer_op));
  append(notes, t.notes);
  return t.recurrence;
}

LinearOperatorEq telescope_integral_expr(const Expr& body, const std::string& y, bool y_discrete, const std::string& x,
                                         std::vector<std::string>* notes) {
  auto ax = derive_de(body, x, quiet()).eq;
  auto ay = y_discrete ? derive_re(body, y, quiet()).eq : derive_de(body, y, quiet()).eq;
  Setup s = setup(ax, ay, x, y, "D" + x, y_discrete ? "N" : "D" + y);
  auto t = telescope_integral(s.ann, x, s.inner_op, s.outer_op,
                              default_integral_order(*s.ring, x, s.inner_op, s.outer_op));
  append(notes, t.notes);
  return t.recurrence;
}

}  // namespace holo
