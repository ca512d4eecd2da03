#include "holo/holonomic.hpp"

#include "holo/hyper.hpp"
#include "holo/registry.hpp"
#include "holo/series.hpp"

namespace holo {

namespace {

LinearOperatorEq trivial(VarId v, OpKind k) {
  // constants: F' = 0, a(n+1) = a(n)
  return LinearOperatorEq(v, k, {k == OpKind::D ? RatFun() : RatFun(-1), RatFun(1)});
}

RatFun parameter(const Expr& e) {
  if (auto r = to_ratfun(e)) return *r;
  return RatFun::variable(constant_symbol_name(e));
}

// Reject extended-algorithm territory up front: parameters of 1F1/2F1/BesselJ moving with v.
void prescan(const Expr& e, const std::string& v) {
  if (e->kind == ExprKind::Call) {
    const PrimitiveEntry* p = find_primitive(e->name);
    if (p && p->parameters_need_extended)
      for (size_t i = 0; i + 1 < e->args.size(); ++i)
        if (depends_on(e->args[i], v))
          throw Error(ErrorKind::ExtendedAlgorithmRequired,
                      "extended algorithm required: parameter " + to_string(e->args[i]) + " of " +
                          display_name(e->name) + " depends on " + v);
  }
  for (auto& a : e->args) prescan(a, v);
}

LinearOperatorEq first_order(VarId v, OpKind k, const RatFun& q) {
  // f' = q f   or   f(n+1) = q f(n)
  return LinearOperatorEq(v, k, {-q, RatFun(1)}).canonical();
}

// ------------------------------------------------------------------ continuous

LinearOperatorEq de_of(const Expr& e, const std::string& x, std::vector<std::string>& notes);

LinearOperatorEq de_pow(const Expr& e, const std::string& x, std::vector<std::string>& notes) {
  VarId xv = var(x);
  const Expr &b = e->args[0], &p = e->args[1];
  if (depends_on(p, x)) throw Error(ErrorKind::NonHolonomicInput, "exponent of " + to_string(e) + " depends on " + x);
  auto alpha = to_ratfun(p);
  if (!alpha) alpha = parameter(p);
  if (alpha->is_constant()) {
    Rat a = alpha->constant_value();
    if (a.get_den() == 1 && a > 0) {
      LinearOperatorEq base = de_of(b, x, notes);
      if (base.order() > 1) {
        LinearOperatorEq acc = base;
        for (long i = 1; i < a.get_num().get_si(); ++i) acc = closure_product(acc, base);
        return acc;
      }
    }
  }
  LinearOperatorEq base = de_of(b, x, notes);
  if (base.order() != 1)
    throw Error(ErrorKind::NonHolonomicInput,
                to_string(e) + " is not holonomic by the closure rules: non-integer or negative power of a base of order " +
                    std::to_string(base.order()));
  RatFun q = -base.coeffs[0] / base.coeffs[1];
  return first_order(xv, OpKind::D, *alpha * q);
}

LinearOperatorEq de_call(const Expr& e, const std::string& x) {
  VarId xv = var(x);
  if (e->name == "factorial")
    throw Error(ErrorKind::NonHolonomicInput, "factorial of a continuous variable in " + to_string(e));
  const PrimitiveEntry* p = find_primitive(e->name);
  if (!p || !p->de) throw Error(ErrorKind::NonHolonomicInput, display_name(e->name) + " has no differential equation");
  std::vector<RatFun> params;
  for (size_t i = 0; i + 1 < e->args.size(); ++i) {
    if (depends_on(e->args[i], x))
      throw Error(ErrorKind::NonHolonomicInput, "parameter " + to_string(e->args[i]) + " depends on " + x);
    params.push_back(parameter(e->args[i]));
  }
  auto arg = to_ratfun(e->args.back());
  if (!arg) throw Error(ErrorKind::NonHolonomicInput, "argument " + to_string(e->args.back()) + " is not rational in " + x);
  VarId u = var("%u");
  LinearOperatorEq t = p->de(params, u);
  return substitute_rational(t, *arg, xv);
}

LinearOperatorEq de_of(const Expr& e, const std::string& x, std::vector<std::string>& notes) {
  VarId xv = var(x);
  if (!depends_on(e, x)) return trivial(xv, OpKind::D);
  if (auto r = to_ratfun(e)) return first_order(xv, OpKind::D, r->derivative(xv) / *r);
  switch (e->kind) {
    case ExprKind::Add: {
      LinearOperatorEq acc;
      bool first = true;
      for (auto& a : e->args) {
        LinearOperatorEq t = de_of(a, x, notes);
        acc = first ? t : closure_sum(acc, t);
        first = false;
      }
      return acc;
    }
    case ExprKind::Mul: {
      std::vector<Expr> rat, rest;
      for (auto& a : e->args)
        if (!depends_on(a, x)) continue;
        else if (to_ratfun(a)) rat.push_back(a);
        else rest.push_back(a);
      std::vector<LinearOperatorEq> eqs;
      if (!rat.empty()) eqs.push_back(de_of(ex::mul(rat), x, notes));
      for (auto& a : rest) eqs.push_back(de_of(a, x, notes));
      LinearOperatorEq acc = eqs[0];
      for (size_t i = 1; i < eqs.size(); ++i) acc = closure_product(acc, eqs[i]);
      return acc;
    }
    case ExprKind::Pow: return de_pow(e, x, notes);
    case ExprKind::Call: return de_call(e, x);
    case ExprKind::Integral: {
      const std::string& t = e->args[1]->name;
      return telescope_integral_expr(e->args[0], x, false, t, &notes);
    }
    case ExprKind::Sum: {
      const std::string& k = e->args[1]->name;
      if (depends_on(e->args[2], x) || depends_on(e->args[3], x))
        throw Error(ErrorKind::NonHolonomicInput, "summation bounds depend on " + x);
      if (e->args[2]->kind == ExprKind::Number && e->args[3]->kind == ExprKind::Number) {
        Expr s = ex::num(0);
        for (Rat i = e->args[2]->value; i <= e->args[3]->value; i += 1) s = ex::add(s, substitute(e->args[0], k, ex::num(i)));
        return de_of(s, x, notes);
      }
      throw Error(ErrorKind::DiagnosticAbort, "infinite sums in a continuous variable are not supported");
    }
    default: break;
  }
  throw Error(ErrorKind::NonHolonomicInput, "cannot derive an equation for " + to_string(e));
}

// ------------------------------------------------------------------ discrete

LinearOperatorEq re_of(const Expr& e, const std::string& n, const DeriveOptions& opt, std::vector<std::string>& notes);

LinearOperatorEq re_call(const Expr& e, const std::string& n) {
  VarId nv = var(n);
  const PrimitiveEntry* p = find_primitive(e->name);
  if (!p || !p->re) throw Error(ErrorKind::NonHolonomicInput, display_name(e->name) + " has no recurrence in its index");
  std::vector<RatFun> rest;
  for (size_t i = 1; i < e->args.size(); ++i) {
    if (depends_on(e->args[i], n))
      throw Error(ErrorKind::NonHolonomicInput, "argument " + to_string(e->args[i]) + " of " + display_name(e->name) +
                                                    " depends on " + n);
    rest.push_back(parameter(e->args[i]));
  }
  auto idx = to_ratfun(e->args[0]);
  if (!idx || !idx->is_polynomial() || idx->num().degree(nv) != 1)
    throw Error(ErrorKind::NonHolonomicInput, "index " + to_string(e->args[0]) + " is not affine in " + n);
  RatFun slope = idx->derivative(nv);
  if (!(slope == RatFun(1)))
    throw Error(ErrorKind::NonHolonomicInput, "index " + to_string(e->args[0]) + " must have slope 1 in " + n);
  RatFun off = *idx - RatFun::variable(n);
  if (!off.is_constant())
    throw Error(ErrorKind::NonHolonomicInput, "index offset " + off.str() + " must be a number");
  return shift_equation(p->re(rest, nv), off.constant_value());
}

LinearOperatorEq re_of(const Expr& e, const std::string& n, const DeriveOptions& opt, std::vector<std::string>& notes) {
  VarId nv = var(n);
  if (!depends_on(e, n)) return trivial(nv, OpKind::N);
  if (e->kind != ExprKind::Add && e->kind != ExprKind::Sum && e->kind != ExprKind::Integral) {
    try {
      return first_order(nv, OpKind::N, term_ratio(e, n));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotHypergeometric) throw;
    }
  }
  switch (e->kind) {
    case ExprKind::Add: {
      LinearOperatorEq acc;
      bool first = true;
      for (auto& a : e->args) {
        LinearOperatorEq t = re_of(a, n, opt, notes);
        acc = first ? t : closure_sum(acc, t);
        first = false;
      }
      return acc;
    }
    case ExprKind::Mul: {
      std::vector<Expr> hyper, rest;
      for (auto& a : e->args) {
        if (!depends_on(a, n)) continue;
        try {
          term_ratio(a, n);
          hyper.push_back(a);
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::NotHypergeometric) throw;
          rest.push_back(a);
        }
      }
      std::vector<LinearOperatorEq> eqs;
      if (!hyper.empty()) eqs.push_back(re_of(ex::mul(hyper), n, opt, notes));
      for (auto& a : rest) eqs.push_back(re_of(a, n, opt, notes));
      LinearOperatorEq acc = eqs[0];
      for (size_t i = 1; i < eqs.size(); ++i) acc = closure_product(acc, eqs[i]);
      return acc;
    }
    case ExprKind::Pow: {
      const Expr &b = e->args[0], &p = e->args[1];
      if (!depends_on(p, n) && p->kind == ExprKind::Number && p->value.get_den() == 1 && p->value > 0) {
        LinearOperatorEq base = re_of(b, n, opt, notes), acc = base;
        for (long i = 1; i < p->value.get_num().get_si(); ++i) acc = closure_product(acc, base);
        return acc;
      }
      throw Error(ErrorKind::NonHolonomicInput, to_string(e) + " is not holonomic in " + n);
    }
    case ExprKind::Call: return re_call(e, n);
    case ExprKind::Sum: {
      const std::string& k = e->args[1]->name;
      try {
        HyperTerm t = hyper_term(e->args[0], n, k);
        TelescopeResult z = zeilberger(t, opt.order_max);
        notes.insert(notes.end(), z.notes.begin(), z.notes.end());
        return z.recurrence;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NotHypergeometric) throw;
      }
      notes.push_back("summand is not a hypergeometric term; using elimination with K = 1");
      return telescope_sum_expr(e->args[0], n, k, &notes);
    }
    case ExprKind::Integral:
      return telescope_integral_expr(e->args[0], n, true, e->args[1]->name, &notes);
    default: break;
  }
  throw Error(ErrorKind::NonHolonomicInput, "cannot derive a recurrence for " + to_string(e));
}

}  // namespace

Derivation verify_equation(const LinearOperatorEq& p, const Expr& f, const std::string& v, int depth) {
  Derivation d;
  d.eq = p;
  std::string last;
  if (p.kind == OpKind::D) {
    const Rat points[] = {0, 1, -1, 2, Rat(1, 2), -2, 3};
    for (const Rat& pt : points) {
      try {
        SeriesPrefix s = series_oracle(f, v, std::max(depth, p.order() + kVerifyMargin), pt);
        d.point = pt;
        d.verified = check_annihilates(p, s);
        if (!d.verified) d.notes.push_back("series check FAILED at " + v + " = " + pt.get_str());
        return d;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PoleAtExpansionPoint && e.kind() != ErrorKind::DiagnosticAbort) throw;
        last = e.what();
      }
    }
  } else {
    int count = std::max(depth, p.order() + kVerifyMargin) + 1;
    bool any = false;
    for (long st = 0; st <= 4; ++st) {
      try {
        SeriesPrefix s = sequence_oracle(f, v, st, count);
        any = true;
        d.start = st;
        if (check_annihilates(p, s)) {
          d.verified = true;
          if (st > 0) d.notes.push_back("recurrence checked for " + v + " >= " + std::to_string(st));
          return d;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PoleAtExpansionPoint && e.kind() != ErrorKind::DiagnosticAbort) throw;
        last = e.what();
      }
    }
    if (any) {
      d.notes.push_back("sequence check FAILED");
      return d;
    }
  }
  d.notes.push_back("not verified: " + last);
  return d;
}

Derivation derive_de(const Expr& f, const std::string& x, const DeriveOptions& opt) {
  prescan(f, x);
  std::vector<std::string> notes;
  LinearOperatorEq p = de_of(f, x, notes).canonical();
  Derivation d;
  if (opt.verify) {
    d = verify_equation(p, f, x, opt.depth);
    if (!d.verified && !d.notes.empty() && d.notes.back().find("FAILED") != std::string::npos)
      throw Error(ErrorKind::Internal, "derived equation does not annihilate " + to_string(f));
  } else {
    d.eq = p;
  }
  d.notes.insert(d.notes.begin(), notes.begin(), notes.end());
  return d;
}

Derivation derive_re(const Expr& a, const std::string& n, const DeriveOptions& opt) {
  prescan(a, n);
  std::vector<std::string> notes;
  LinearOperatorEq p = re_of(a, n, opt, notes).canonical();
  Derivation d;
  if (opt.verify) {
    d = verify_equation(p, a, n, opt.depth);
    if (!d.verified && !d.notes.empty() && d.notes.back().find("FAILED") != std::string::npos)
      throw Error(ErrorKind::Internal, "derived recurrence does not annihilate " + to_string(a));
  } else {
    d.eq = p;
  }
  d.notes.insert(d.notes.begin(), notes.begin(), notes.end());
  return d;
}

}  // namespace holo
