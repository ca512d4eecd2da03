#include "holo/factor.hpp"

#include <algorithm>

#include "holo/linalg.hpp"
#include "holo/series.hpp"

namespace holo {

namespace {

// The single operator generator used by p, or -1 when p is free of operators.
int operator_used(const OrePoly& p) {
  const OreRing& r = *p.ring();
  int op = -1;
  for (size_t i = r.num_base(); i < r.size(); ++i)
    if (p.involves(i)) {
      if (op >= 0) throw Error(ErrorKind::Usage, "expected a polynomial in a single operator");
      op = static_cast<int>(i);
    }
  return op;
}

OrePoly ore_from_eq(const LinearOperatorEq& e, const RingPtr& ring, size_t op) {
  OrePoly out(ring);
  for (size_t i = 0; i < e.coeffs.size(); ++i) {
    const RatFun& c = e.coeffs[i];
    if (c.is_zero()) continue;
    if (!c.den().is_constant()) throw Error(ErrorKind::Internal, "non-polynomial coefficient");
    Rat d = c.den().constant_value();
    for (auto& [m, k] : c.num().terms()) {
      Exps ex(ring->size(), 0);
      for (auto& [v, pw] : m.powers()) {
        int j = ring->index(var_name(v));
        if (j < 0 || ring->is_operator(j)) throw Error(ErrorKind::RingMismatch, "ring lacks variable " + var_name(v));
        ex[j] = pw;
      }
      ex[op] = static_cast<int>(i);
      out.add_term(ex, k / d);
    }
  }
  return out;
}

LinearOperatorEq eq_of(const OrePoly& p, int op) {
  if (op < 0) return LinearOperatorEq();
  return to_operator_eq(p, p.ring()->name(op));
}

bool has_constant_symbols(const RatFun& r) {
  for (const Poly* p : {&r.num(), &r.den()})
    for (VarId v : p->variables())
      if (!var_name(v).empty() && var_name(v)[0] == '$') return true;
  return false;
}

const Rat kPoints[] = {0, 1, -1, 2, Rat(1, 2), -2, 3, Rat(-1, 2)};

bool lead_vanishes(const LinearOperatorEq& q, const Rat& at) {
  return q.canonical().lead().eval(q.var, at).is_zero();
}

SeriesPrefix data(const LinearOperatorEq& q, const Expr& f, const Rat& at, int count) {
  const std::string& v = var_name(q.var);
  if (q.kind == OpKind::D) return series_oracle(f, v, count, at);
  return sequence_oracle(f, v, static_cast<long>(at.get_num().get_si()), count + 1);
}

// Oracle-capable points, regular ones for q first.
std::vector<Rat> candidate_points(const LinearOperatorEq& q) {
  std::vector<Rat> pts, sing;
  if (q.kind == OpKind::D) {
    for (const Rat& p : kPoints) (lead_vanishes(q, p) ? sing : pts).push_back(p);
  } else {
    for (long s = 0; s <= 4; ++s) (lead_vanishes(q, Rat(s)) ? sing : pts).push_back(Rat(s));
  }
  pts.insert(pts.end(), sing.begin(), sing.end());
  return pts;
}

}  // namespace

NcDivision nc_divide_right(const OrePoly& p, const OrePoly& q) {
  if (!(*p.ring() == *q.ring())) throw Error(ErrorKind::RingMismatch, "division of polynomials from different rings");
  if (q.is_zero()) throw Error(ErrorKind::Usage, "division by zero");
  int op = operator_used(q), opp = operator_used(p);
  if (op >= 0 && opp >= 0 && op != opp) throw Error(ErrorKind::Usage, "dividend and divisor use different operators");
  if (op < 0) op = opp;
  const RingPtr& ring = p.ring();
  if (op < 0) {
    // both free of operators
    op = static_cast<int>(ring->num_base());
    if (op >= static_cast<int>(ring->size())) throw Error(ErrorKind::Usage, "ring has no operator");
  }
  auto [Q, R] = divide_right(eq_of(p, op), eq_of(q, op));
  Poly mult(1);
  for (auto* e : {&Q, &R})
    for (auto& c : e->coeffs)
      if (!c.is_zero()) mult = poly_lcm(mult, c.den());
  mult = mult.primitive();
  RatFun mr(mult);
  for (auto* e : {&Q, &R})
    for (auto& c : e->coeffs) c = c * mr;
  return {ore_from_eq(Q, ring, op), ore_from_eq(R, ring, op), mult};
}

std::optional<Factorization> factor_with(const LinearOperatorEq& p, const LinearOperatorEq& right) {
  auto [Q, R] = divide_right(p, right);
  for (auto& c : R.coeffs)
    if (!c.is_zero()) return std::nullopt;
  Factorization f;
  f.right = right;
  f.left = Q.canonical();
  for (size_t i = 0; i < Q.coeffs.size(); ++i)
    if (!Q.coeffs[i].is_zero()) {
      f.content = Q.coeffs[i] / f.left.coeffs[i];
      break;
    }
  return f;
}

std::vector<OrePoly> right_factors(const OrePoly& p, int r, const FactorOptions& opt) {
  int op = operator_used(p);
  if (op < 0) throw Error(ErrorKind::Usage, "polynomial has no operator");
  std::vector<OrePoly> out;
  for (auto& q : right_factors(eq_of(p, op), r, opt)) out.push_back(ore_from_eq(q, p.ring(), op));
  return out;
}

Compatibility check_compatible(const LinearOperatorEq& q, const Expr& f, const CompatOptions& opt) {
  Compatibility res;
  std::vector<Rat> pts;
  if (opt.point) {
    if (lead_vanishes(q, *opt.point))
      throw Error(ErrorKind::SingularPoint, "leading coefficient vanishes at " + var_name(q.var) + " = " +
                                                opt.point->get_str() + "; choose another point");
    pts.push_back(*opt.point);
  } else {
    pts = candidate_points(q);
  }
  int count = std::max(opt.depth, q.order() + kVerifyMargin);
  bool any = false;
  std::string last;
  for (const Rat& pt : pts) {
    SeriesPrefix s;
    try {
      s = data(q, f, pt, count);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtExpansionPoint && e.kind() != ErrorKind::DiagnosticAbort) throw;
      last = e.what();
      continue;
    }
    any = true;
    bool zero = true, symbolic_only = true;
    for (auto& r : residual(q, s))
      if (!r.is_zero()) {
        zero = false;
        if (!has_constant_symbols(r)) symbolic_only = false;
      }
    res.point = pt;
    if (zero) {
      res.ok = true;
      res.conclusive = true;
      if (lead_vanishes(q, pt)) res.notes.push_back("checked at a singular point of the equation");
      res.notes.push_back("residual vanishes to depth " + std::to_string(count) + " at " + var_name(q.var) +
                          " = " + pt.get_str());
      return res;
    }
    if (!symbolic_only) {
      res.ok = false;
      res.conclusive = true;
      res.notes.push_back("nonzero residual at " + var_name(q.var) + " = " + pt.get_str());
      return res;
    }
    res.conclusive = false;
  }
  res.ok = false;
  if (!any) {
    res.conclusive = false;
    res.notes.push_back("no oracle data: " + last);
  } else if (!res.conclusive) {
    res.notes.push_back("residuals involve transcendental constants only; undecided");
  }
  return res;
}

}  // namespace holo
