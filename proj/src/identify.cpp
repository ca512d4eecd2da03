#include "holo/identify.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "holo/error.hpp"
#include "holo/holonomic.hpp"
#include "holo/series.hpp"

namespace holo {

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Proved: return "PROVED";
    case VerdictKind::Refuted: return "REFUTED";
    case VerdictKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

bool looks_discrete(const Expr& e, const std::string& v) {
  switch (e->kind) {
    case ExprKind::Pow:
      if (depends_on(e->args[1], v)) return true;
      break;
    case ExprKind::Call:
      if (e->name == "factorial" && depends_on(e->args[0], v)) return true;
      // index-first families such as LegendreP(n, x)
      if (e->args.size() >= 2 && depends_on(e->args[0], v)) return true;
      break;
    case ExprKind::Sum:
    case ExprKind::Integral:
      if (depends_on(e->args[2], v) || depends_on(e->args[3], v)) return true;
      break;
    default: break;
  }
  for (auto& a : e->args)
    if (looks_discrete(a, v)) return true;
  return false;
}

namespace {

bool is_zero_expr(const Expr& e) {
  auto r = to_ratfun(e);
  return r && r->is_zero();
}

bool opaque(const RatFun& r) {
  for (VarId v : r.variables())
    if (var_name(v).rfind("$", 0) == 0) return true;
  return false;
}

// ---------------------------------------------------------------- clearing denominators

struct Frac {
  std::vector<Expr> num, den;
};

Expr product(const std::vector<Expr>& fs) {
  if (fs.empty()) return ex::num(1);
  if (fs.size() == 1) return fs[0];
  return ex::mul(fs);
}

bool take(std::vector<Expr>& fs, const Expr& e) {
  for (size_t i = 0; i < fs.size(); ++i)
    if (equal(fs[i], e)) {
      fs.erase(fs.begin() + i);
      return true;
    }
  return false;
}

void cancel(Frac& f) {
  std::vector<Expr> den;
  for (auto& d : f.den)
    if (!take(f.num, d)) den.push_back(d);
  f.den = den;
}

Frac frac_of(const Expr& e) {
  switch (e->kind) {
    case ExprKind::Pow: {
      const Expr& k = e->args[1];
      if (k->kind != ExprKind::Number || k->value.get_den() != 1 || abs(k->value) > 8) break;
      long n = k->value.get_num().get_si();
      Frac b = frac_of(e->args[0]), out;
      for (long i = 0; i < std::abs(n); ++i) {
        out.num.insert(out.num.end(), b.num.begin(), b.num.end());
        out.den.insert(out.den.end(), b.den.begin(), b.den.end());
      }
      if (n < 0) std::swap(out.num, out.den);
      return out;
    }
    case ExprKind::Mul: {
      Frac out;
      for (auto& a : e->args) {
        Frac t = frac_of(a);
        out.num.insert(out.num.end(), t.num.begin(), t.num.end());
        out.den.insert(out.den.end(), t.den.begin(), t.den.end());
      }
      cancel(out);
      return out;
    }
    case ExprKind::Add: {
      std::vector<Frac> ts;
      std::vector<Expr> L;
      for (auto& a : e->args) {
        ts.push_back(frac_of(a));
        std::vector<Expr> have = L;
        for (auto& d : ts.back().den)
          if (!take(have, d)) L.push_back(d);
      }
      if (L.empty()) break;
      std::vector<Expr> terms;
      for (auto& t : ts) {
        std::vector<Expr> rest = L;
        for (auto& d : t.den) take(rest, d);
        std::vector<Expr> fs = t.num;
        fs.insert(fs.end(), rest.begin(), rest.end());
        terms.push_back(product(fs));
      }
      return {{ex::add(terms)}, L};
    }
    default: break;
  }
  return {{e}, {}};
}

// f = g  <=>  num(f) den(g) = num(g) den(f), for nonvanishing denominators.
bool cross_multiply(Expr& f, Expr& g) {
  Frac F = frac_of(f), G = frac_of(g);
  if (F.den.empty() && G.den.empty()) return false;
  std::vector<Expr> gd;
  for (auto& d : G.den)
    if (!take(F.den, d)) gd.push_back(d);
  std::vector<Expr> a = F.num, b = G.num;
  a.insert(a.end(), gd.begin(), gd.end());
  b.insert(b.end(), F.den.begin(), F.den.end());
  f = product(a);
  g = product(b);
  return true;
}

// ---------------------------------------------------------------- the decision

struct Side {
  bool zero = false;
  LinearOperatorEq eq;
  long start = 0;
};

Side derive(const Expr& e, const std::string& v, bool discrete, int depth) {
  Side s;
  if (is_zero_expr(e)) {
    s.zero = true;
    return s;
  }
  DeriveOptions o;
  o.depth = depth;
  Derivation d = discrete ? derive_re(e, v, o) : derive_de(e, v, o);
  s.eq = d.eq.canonical();
  s.start = d.start;
  return s;
}

// Largest integer root of the leading coefficient in the index variable, ignoring parameters.
std::optional<long> last_integer_root(const Poly& lc, VarId n) {
  std::map<Monomial, Poly, MonoLess> slices;
  for (auto& [m, c] : lc.terms()) slices[m.without(n)] += Poly::monomial(Monomial::of(n, m.exponent(n)), c);
  Poly g;
  for (auto& [m, s] : slices) g = g.is_zero() ? s : poly_gcd(g, s);
  std::optional<long> best;
  if (g.degree(n) <= 0) return best;
  for (const Rat& r : rational_roots(g, n))
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) best = std::max(best.value_or(r.get_num().get_si()), r.get_num().get_si());
  return best;
}

std::vector<RatFun> values(const Expr& e, bool zero, const Verdict& v, int count) {
  if (zero) return std::vector<RatFun>(count);
  SeriesPrefix s = v.discrete ? sequence_oracle(e, v.var, v.start, count)
                              : series_oracle(e, v.var, std::max(count - 1, 0), v.point);
  s.a.resize(count);
  return s.a;
}

std::string show(const RatFun& r) { return to_string(from_ratfun(r)); }

std::string label(const Verdict& v, int i) {
  if (v.discrete) return "at " + v.var + " = " + std::to_string(v.start + i);
  if (v.point == 0) return "[" + v.var + "^" + std::to_string(i) + "]";
  return "[(" + v.var + (sgn(v.point) < 0 ? " + " : " - ") + Rat(abs(v.point)).get_str() + ")^" + std::to_string(i) + "]";
}

Verdict decide(const Expr& f0, const Expr& g0, const std::string& var, const ProveOptions& opt, int budget) {
  Verdict out;
  out.var = var;
  Expr f = f0, g = g0;
  out.discrete = opt.discrete ? *opt.discrete : (looks_discrete(f, var) || looks_discrete(g, var));
  auto give_up = [&](const std::string& why) {
    out.kind = VerdictKind::Inconclusive;
    out.reason = why;
    return out;
  };

  Side a, b;
  try {
    try {
      if (opt.jobs > 1) {
        auto other = std::async(std::launch::async, [&] { return derive(g, var, out.discrete, opt.depth); });
        a = derive(f, var, out.discrete, opt.depth);
        b = other.get();
      } else {
        a = derive(f, var, out.discrete, opt.depth);
        b = derive(g, var, out.discrete, opt.depth);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonHolonomicInput || !cross_multiply(f, g)) throw;
      out.trace.push_back("cleared denominators: " + to_string(f) + " = " + to_string(g) +
                          " (denominators assumed nonzero)");
      a = derive(f, var, out.discrete, opt.depth);
      b = derive(g, var, out.discrete, opt.depth);
    }
  } catch (const Error& e) {
    return give_up(e.what());
  }
  if (!a.zero) out.trace.push_back("lhs: " + a.eq.str());
  if (!b.zero) out.trace.push_back("rhs: " + b.eq.str());

  try {
    if (a.zero && b.zero) {
      out.kind = VerdictKind::Proved;
      out.method = "both sides are zero";
      return out;
    }
    LinearOperatorEq c;
    if (a.zero || b.zero) {
      c = a.zero ? b.eq : a.eq;
      out.method = "equation of the nonzero side";
    } else if (a.eq.same_as(b.eq)) {
      c = a.eq;
      out.method = "same canonical equation";
    } else if (right_divides(a.eq, b.eq)) {
      c = b.eq;
      out.method = "lhs equation right-divides rhs equation";
    } else if (right_divides(b.eq, a.eq)) {
      c = a.eq;
      out.method = "rhs equation right-divides lhs equation";
    } else {
      c = closure_sum(a.eq, b.eq).canonical();
      out.method = "closure of the difference";
    }
    out.common = c;
    out.trace.push_back("common: " + c.str() + " (" + out.method + ")");
    int r = c.order();
    Poly lc = c.canonical().poly_coeffs().back();
    VarId x = c.var;

    // a place where r values determine the solution
    bool placed = false;
    std::string last;
    std::vector<RatFun> vf, vg;
    if (out.discrete) {
      long n0 = std::max({a.zero ? 0L : a.start, b.zero ? 0L : b.start, 0L});
      if (auto root = last_integer_root(lc, x)) n0 = std::max(n0, *root + 1);
      for (long s = n0; s < n0 + 6 && !placed; ++s) {
        out.start = s;
        try {
          vf = values(f, a.zero, out, r);
          vg = values(g, b.zero, out, r);
          placed = true;
        } catch (const Error& e) {
          last = e.what();
        }
      }
      if (placed) out.trace.push_back("initial index " + var + " = " + std::to_string(out.start));
    } else {
      for (const Rat& p : {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(-2), Rat(3), Rat(-1, 2)}) {
        if (lc.subs(x, Poly(p)).is_zero()) continue;
        out.point = p;
        try {
          vf = values(f, a.zero, out, r);
          vg = values(g, b.zero, out, r);
          placed = true;
          break;
        } catch (const Error& e) {
          last = e.what();
        }
      }
      if (placed) out.trace.push_back("initial values at " + var + " = " + out.point.get_str());
    }
    if (!placed) return give_up("no point to compare initial values: " + last);

    for (int i = 0; i < r; ++i) {
      RatFun d = vf[i] - vg[i];
      if (d.is_zero()) {
        out.initial.push_back(label(out, i) + " = " + show(vf[i]));
        continue;
      }
      auto refute = [&] {
        out.kind = VerdictKind::Refuted;
        out.witness_index = i;
        out.witness_f = show(vf[i]);
        out.witness_g = show(vg[i]);
        out.trace.push_back("differ at " + label(out, i) + ": " + out.witness_f + " vs " + out.witness_g);
        return out;
      };
      if (!opaque(d)) return refute();
      // symbolic constants: compare the two values as functions of a parameter
      Expr de = from_ratfun(d);
      auto syms = free_symbols(de);
      std::vector<std::string> params;
      for (auto& s : syms)
        if (s.rfind("$", 0) != 0) params.push_back(s);
      if (params.size() != syms.size() || params.empty())
        return give_up("initial values " + show(vf[i]) + " and " + show(vg[i]) + " are not comparable");
      if (budget <= 0) return give_up("recursion limit reached comparing " + show(vf[i]) + " and " + show(vg[i]));
      ProveOptions sub = opt;
      sub.discrete.reset();
      Verdict nested = decide(de, ex::num(0), params.front(), sub, budget - 1);
      out.trace.push_back("compare " + label(out, i) + " in " + params.front() + ": " + verdict_name(nested.kind));
      for (auto& t : nested.trace) out.trace.push_back("  " + t);
      if (nested.kind == VerdictKind::Refuted) return refute();
      if (nested.kind == VerdictKind::Inconclusive) return give_up("initial value comparison: " + nested.reason);
      out.initial.push_back(label(out, i) + " = " + show(vf[i]) + " = " + show(vg[i]));
    }
    out.kind = VerdictKind::Proved;
    if (out.discrete) out.trace.push_back("equality holds for " + var + " >= " + std::to_string(out.start));
    return out;
  } catch (const Error& e) {
    return give_up(e.what());
  }
}

}  // namespace

Verdict prove_equal(const Expr& f, const Expr& g, const std::string& var, const ProveOptions& opt) {
  int budget = opt.max_recursion;
  if (budget < 0) {
    auto s = free_symbols(f);
    for (auto& x : free_symbols(g)) s.insert(x);
    budget = static_cast<int>(s.size());
  }
  return decide(f, g, var, opt, budget);
}

bool recheck(const Verdict& v, const Expr& f0, const Expr& g0, int depth) {
  if (v.kind != VerdictKind::Proved) return false;
  if (!v.common) return is_zero_expr(f0) && is_zero_expr(g0);
  Expr f = f0, g = g0;
  // the same preprocessing as the proof, decided from the recorded trace
  if (!v.trace.empty() && v.trace.front().rfind("cleared denominators", 0) == 0) cross_multiply(f, g);
  const LinearOperatorEq& c = *v.common;
  int r = c.order();
  for (const Expr* e : {&f, &g}) {
    if (is_zero_expr(*e)) continue;
    SeriesPrefix s = v.discrete ? sequence_oracle(*e, v.var, v.start, std::max(depth, r + kVerifyMargin) + 1)
                                : series_oracle(*e, v.var, std::max(depth, r + kVerifyMargin), v.point);
    if (!check_annihilates(c, s)) return false;
  }
  auto vf = values(f, is_zero_expr(f), v, r), vg = values(g, is_zero_expr(g), v, r);
  for (int i = 0; i < r; ++i) {
    RatFun d = vf[i] - vg[i];
    if (d.is_zero()) continue;
    // nested comparisons are replayed by a fresh decision on the difference
    if (!opaque(d)) return false;
    Expr de = from_ratfun(d);
    auto syms = free_symbols(de);
    if (syms.empty()) return false;
    Verdict nested = prove_equal(de, ex::num(0), *syms.begin());
    if (nested.kind != VerdictKind::Proved || !recheck(nested, de, ex::num(0), depth)) return false;
  }
  return true;
}

}  // namespace holo
