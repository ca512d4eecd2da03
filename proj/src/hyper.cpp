#include "holo/hyper.hpp"

#include <algorithm>

#include "holo/linalg.hpp"
#include "holo/series.hpp"

namespace holo {

namespace {

[[noreturn]] void not_hyper(const Expr& e, const std::string& v, const std::string& why = "") {
  throw Error(ErrorKind::NotHypergeometric,
              to_string(e) + " is not a hypergeometric term in " + v + (why.empty() ? "" : ": " + why));
}

RatFun const_factor(const Expr& b) {
  if (auto r = to_ratfun(b)) return *r;
  return RatFun::variable(constant_symbol_name(b));
}

// slope of an affine expression in v, or nullopt
std::optional<RatFun> affine_slope(const Expr& e, VarId v) {
  auto r = to_ratfun(e);
  if (!r || !r->is_polynomial() || r->num().degree(v) > 1) return std::nullopt;
  RatFun s = r->derivative(v);
  if (s.has_var(v)) return std::nullopt;
  return s;
}

RatFun ratio(const Expr& e, const std::string& v) {
  VarId vv = var(v);
  if (!depends_on(e, v)) return RatFun(1);
  if (auto r = to_ratfun(e)) {
    if (r->is_zero()) return RatFun(1);
    return r->shift(vv, 1) / *r;
  }
  switch (e->kind) {
    case ExprKind::Mul: {
      RatFun acc(1);
      for (auto& a : e->args) acc *= ratio(a, v);
      return acc;
    }
    case ExprKind::Pow: {
      const Expr &b = e->args[0], &p = e->args[1];
      if (!depends_on(p, v)) {
        if (p->kind != ExprKind::Number || p->value.get_den() != 1) not_hyper(e, v, "non-integer power");
        return ratio(b, v).pow(static_cast<int>(p->value.get_num().get_si()));
      }
      if (depends_on(b, v)) not_hyper(e, v, "base and exponent both depend on " + v);
      auto s = affine_slope(p, vv);
      if (!s || !s->is_constant() || s->constant_value().get_den() != 1)
        not_hyper(e, v, "exponent is not affine with integer slope");
      return const_factor(b).pow(static_cast<int>(s->constant_value().get_num().get_si()));
    }
    case ExprKind::Call: {
      if (e->name != "factorial") not_hyper(e, v);
      auto s = affine_slope(e->args[0], vv);
      if (!s || !s->is_constant()) not_hyper(e, v, "factorial argument is not affine");
      Rat m = s->constant_value();
      if (m.get_den() != 1)
        not_hyper(e, v, "factorial argument has non-integer slope " + m.get_str() + " (only integer m is supported)");
      RatFun a = *to_ratfun(e->args[0]), acc(1);
      long mm = m.get_num().get_si();
      for (long i = 1; i <= mm; ++i) acc *= a + RatFun(Rat(i));
      for (long i = 0; i < -mm; ++i) acc /= a - RatFun(Rat(i));
      return acc;
    }
    default: not_hyper(e, v);
  }
}

int deg(const Poly& p, VarId k) { return p.is_zero() ? -1 : p.degree(k); }

struct GosperForm {
  Poly a, b, c;
};

// ratio = a(k)/b(k) * c(k+1)/c(k) with gcd(a(k), b(k+h)) = 1 for h >= 0
GosperForm gosper_form(const RatFun& r, VarId k) {
  GosperForm g{r.num(), r.den(), Poly(1)};
  for (int h : shift_dispersion(g.a, g.b, k)) {
    Poly d = poly_gcd(g.a, g.b.shift(k, Rat(h)));
    if (d.is_constant()) continue;
    g.a = divide_exact(g.a, d);
    g.b = divide_exact(g.b, d.shift(k, Rat(-h)));
    for (int i = 1; i <= h; ++i) g.c *= d.shift(k, Rat(-i));
  }
  return g;
}

long degree_bound(const Poly& a, const Poly& beta, int degc, VarId k) {
  Poly s = a + beta, t = a - beta;
  int ds = deg(s, k), dt = deg(t, k);
  if (!t.is_zero() && dt >= ds) return degc - dt;
  long d = degc - ds + 1;
  if (!t.is_zero() && dt == ds - 1) {
    RatFun q = RatFun(t.lc_in(k) * Poly(-2)) / RatFun(s.lc_in(k));
    if (q.is_constant() && q.constant_value().get_den() == 1) d = std::max<long>(d, q.constant_value().get_num().get_si());
  }
  return d;
}

// Solve a x(k+1) - beta x(k) = sum_j s_j c_j for polynomial x of degree <= d and the s_j.
// Returns nullspace vectors (s_0..s_J, u_0..u_d).
std::vector<std::vector<Poly>> gosper_system(const Poly& a, const Poly& beta, const std::vector<Poly>& cs, long d,
                                             VarId k) {
  size_t J = cs.size();
  size_t ncols = J + static_cast<size_t>(std::max<long>(d + 1, 0));
  std::vector<Poly> cols;
  for (auto& c : cs) cols.push_back(-c);
  Poly K = Poly::variable(k);
  for (long i = 0; i <= d; ++i) {
    Poly ki = K.pow(static_cast<unsigned>(i));
    cols.push_back(a * ki.shift(k, 1) - beta * ki);
  }
  int rows = 0;
  for (auto& c : cols) rows = std::max(rows, deg(c, k) + 1);
  PolyMatrix m(rows, std::vector<Poly>(ncols));
  for (size_t j = 0; j < ncols; ++j) {
    auto cc = cols[j].coefficients_in(k);
    for (size_t r = 0; r < cc.size(); ++r) m[r][j] = cc[r];
  }
  return nullspace(m, ncols);
}

Poly x_from(const std::vector<Poly>& v, size_t J, VarId k) {
  Poly x, K = Poly::variable(k);
  for (size_t i = J; i < v.size(); ++i) x += v[i] * K.pow(static_cast<unsigned>(i - J));
  return x;
}

}  // namespace

RatFun term_ratio(const Expr& f, const std::string& v) {
  if (f->kind == ExprKind::Add && !to_ratfun(f)) not_hyper(f, v, "a sum of terms");
  RatFun r = ratio(f, v);
  if (r.is_zero()) not_hyper(f, v, "zero term");
  return r;
}

HyperTerm hyper_term(const Expr& f, const std::string& n, const std::string& k) {
  HyperTerm t;
  t.f = f;
  t.n = var(n);
  t.k = var(k);
  t.ratio_n = term_ratio(f, n);
  t.ratio_k = term_ratio(f, k);
  return t;
}

bool gosper_check(const RatFun& ratio, const RatFun& R, VarId k) {
  return R.shift(k, 1) * ratio - R == RatFun(1);
}

GosperResult gosper(const RatFun& rho, VarId k) {
  GosperResult res;
  GosperForm g = gosper_form(rho, k);
  res.a = g.a;
  res.b = g.b;
  res.c = g.c;
  Poly beta = g.b.shift(k, -1);
  long d = degree_bound(g.a, beta, deg(g.c, k), k);
  res.degree_bound = d;
  if (d < 0) {
    res.reason = "degree bound " + std::to_string(d) + " < 0: no polynomial solution of the Gosper equation";
    return res;
  }
  for (auto& v : gosper_system(g.a, beta, {g.c}, d, k)) {
    if (v[0].is_zero()) continue;
    Poly x = x_from(v, 1, k);
    res.certificate = RatFun(beta * x, g.c * v[0]);
    res.summable = true;
    if (!gosper_check(rho, res.certificate, k)) throw Error(ErrorKind::Internal, "Gosper certificate check failed");
    return res;
  }
  res.reason = "no polynomial solution of degree <= " + std::to_string(d) + " (linear system inconsistent)";
  return res;
}

bool zeilberger_check(const HyperTerm& t, const LinearOperatorEq& rec, const RatFun& R) {
  RatFun lhs, Rj(1);
  for (int j = 0; j <= rec.order(); ++j) {
    if (j > 0) Rj *= t.ratio_n.shift(t.n, Rat(j - 1));
    lhs += rec.coeffs[j] * Rj;
  }
  return lhs == R.shift(t.k, 1) * t.ratio_k - R;
}

TelescopeResult zeilberger(const HyperTerm& t, int max_order) {
  VarId k = t.k;
  std::vector<RatFun> R{RatFun(1)};
  for (int J = 1; J <= max_order; ++J) {
    R.push_back(R.back() * t.ratio_n.shift(t.n, Rat(J - 1)));
    Poly Q(1);
    for (auto& r : R) Q = poly_lcm(Q, r.den());
    std::vector<Poly> P;
    for (auto& r : R) P.push_back(divide_exact(Q, r.den()) * r.num());
    RatFun rT = t.ratio_k * RatFun(Q) / RatFun(Q.shift(k, 1));
    GosperForm g = gosper_form(rT, k);
    Poly beta = g.b.shift(k, -1);
    std::vector<Poly> cs;
    int degc = -1;
    for (auto& p : P) {
      cs.push_back(p * g.c);
      degc = std::max(degc, deg(cs.back(), k));
    }
    long d = degree_bound(g.a, beta, degc, k);
    for (auto& v : gosper_system(g.a, beta, cs, d, k)) {
      if (v[J].is_zero()) continue;
      std::vector<RatFun> sig;
      for (int j = 0; j <= J; ++j) sig.push_back(RatFun(v[j]));
      Poly x = x_from(v, J + 1, k);
      RatFun cert = RatFun(beta * x, g.c * Q);
      LinearOperatorEq raw(t.n, OpKind::N, sig);
      LinearOperatorEq rec = raw.canonical();
      RatFun lam = rec.lead() / raw.lead();
      cert *= lam;
      TelescopeResult out;
      out.recurrence = rec;
      out.certificate = cert;
      out.order = J;
      out.certified = zeilberger_check(t, rec, cert);
      if (!out.certified) throw Error(ErrorKind::Internal, "Zeilberger certificate check failed");
      out.notes.push_back("Zeilberger order " + std::to_string(J) + ", certificate verified");
      return out;
    }
  }
  throw Error(ErrorKind::OrderExceeded, "no telescoping recurrence of order <= " + std::to_string(max_order) +
                                            " (the extended algorithm may be required)");
}

std::vector<RatFun> sum_initial_values(const Expr& f, const std::string& n, const std::string& k, long n0, int count) {
  Expr s = ex::sum(f, k, ex::infinity(-1), ex::infinity(1));
  std::vector<RatFun> out;
  for (int i = 0; i < count; ++i) out.push_back(sequence_value(s, {{n, n0 + i}}));
  return out;
}

}  // namespace holo
