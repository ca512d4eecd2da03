#include "holo/registry.hpp"

namespace holo {

namespace {

RatFun U(VarId u) { return RatFun(Poly::variable(u)); }

LinearOperatorEq de(VarId u, std::vector<RatFun> c) { return LinearOperatorEq(u, OpKind::D, std::move(c)); }
LinearOperatorEq re(VarId n, std::vector<RatFun> c) { return LinearOperatorEq(n, OpKind::N, std::move(c)); }

std::vector<PrimitiveEntry> build() {
  std::vector<PrimitiveEntry> t;
  auto add = [&](PrimitiveEntry e) { t.push_back(std::move(e)); };

  add({"exp", "exp", 1, [](auto&, VarId u) { return de(u, {RatFun(-1), RatFun(1)}); }, nullptr, nullptr});
  add({"sin", "sin", 1, [](auto&, VarId u) { return de(u, {RatFun(1), RatFun(), RatFun(1)}); }, nullptr, nullptr});
  add({"cos", "cos", 1, [](auto&, VarId u) { return de(u, {RatFun(1), RatFun(), RatFun(1)}); }, nullptr, nullptr});
  add({"arcsin", "arcsin", 1,
       [](auto&, VarId u) { return de(u, {RatFun(), U(u), U(u) * U(u) - RatFun(1)}); }, nullptr, nullptr});
  add({"arctan", "arctan", 1,
       [](auto&, VarId u) { return de(u, {RatFun(), U(u) * RatFun(2), U(u) * U(u) + RatFun(1)}); }, nullptr, nullptr});
  add({"airyai", "AiryAi", 1, [](auto&, VarId u) { return de(u, {-U(u), RatFun(), RatFun(1)}); }, nullptr, nullptr});
  add({"legendrep", "LegendreP", 2,
       [](const std::vector<RatFun>& p, VarId u) {
         const RatFun& n = p[0];
         return de(u, {-n * (n + RatFun(1)), U(u) * RatFun(2), U(u) * U(u) - RatFun(1)});
       },
       [](const std::vector<RatFun>& p, VarId nu) {
         RatFun n = U(nu), x = p[0];
         return re(nu, {n + RatFun(1), -(n * RatFun(2) + RatFun(3)) * x, n + RatFun(2)});
       },
       nullptr});
  add({"hermiteh", "HermiteH", 2,
       [](const std::vector<RatFun>& p, VarId u) { return de(u, {p[0] * RatFun(2), U(u) * RatFun(-2), RatFun(1)}); },
       [](const std::vector<RatFun>& p, VarId nu) {
         return re(nu, {(U(nu) + RatFun(1)) * RatFun(2), p[0] * RatFun(-2), RatFun(1)});
       },
       nullptr});
  add({"gegenbauerc", "GegenbauerC", 3,
       [](const std::vector<RatFun>& p, VarId u) {
         const RatFun &n = p[0], &l = p[1];
         return de(u, {-n * (n + l * RatFun(2)), (l * RatFun(2) + RatFun(1)) * U(u), U(u) * U(u) - RatFun(1)});
       },
       [](const std::vector<RatFun>& p, VarId nu) {
         RatFun n = U(nu);
         const RatFun &l = p[0], &x = p[1];
         return re(nu, {n + l * RatFun(2), -(n + l + RatFun(1)) * x * RatFun(2), n + RatFun(2)});
       },
       nullptr});
  add({"factorial", "factorial", 1, nullptr,
       [](auto&, VarId nu) { return re(nu, {-(U(nu) + RatFun(1)), RatFun(1)}); },
       [](const RatFun& u) { return u + RatFun(1); }});
  add({"hypergeometric1f1", "Hypergeometric1F1", 3,
       [](const std::vector<RatFun>& p, VarId u) { return de(u, {-p[0], p[1] - U(u), U(u)}); }, nullptr, nullptr,
       true});
  add({"hypergeometric2f1", "Hypergeometric2F1", 4,
       [](const std::vector<RatFun>& p, VarId u) {
         return de(u, {-p[0] * p[1], p[2] - (p[0] + p[1] + RatFun(1)) * U(u), U(u) * (RatFun(1) - U(u))});
       },
       nullptr, nullptr, true});
  add({"besselj", "BesselJ", 2,
       [](const std::vector<RatFun>& p, VarId u) { return de(u, {U(u) * U(u) - p[0] * p[0], U(u), U(u) * U(u)}); },
       nullptr, nullptr, true});
  // Rational powers u^alpha: u f' = alpha f. Written with ^ in expressions.
  add({"pow", "pow", 2, [](const std::vector<RatFun>& p, VarId u) { return de(u, {-p[0], U(u)}); }, nullptr, nullptr});
  return t;
}

}  // namespace

const std::vector<PrimitiveEntry>& registry_default() {
  static const std::vector<PrimitiveEntry> t = build();
  return t;
}

const PrimitiveEntry* find_primitive(const std::string& name) {
  for (auto& e : registry_default())
    if (e.name == name) return &e;
  return nullptr;
}

std::string display_name(const std::string& name) {
  if (auto* e = find_primitive(name)) return e->display;
  return name;
}

}  // namespace holo
