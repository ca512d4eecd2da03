#include "holo/series.hpp"

#include <cmath>

#include "holo/registry.hpp"

namespace holo {

namespace {

Rat factorial_q(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(r);
}

bool is_int_const(const RatFun& r, long* out = nullptr) {
  if (!r.is_constant()) return false;
  Rat q = r.constant_value();
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return false;
  if (out) *out = q.get_num().get_si();
  return true;
}

RatFun constant_of(const Expr& e) {
  if (auto r = to_ratfun(e)) return *r;
  return RatFun(Poly::variable(constant_symbol_name(e)));
}

RatFun named_constant(const std::string& fn, const std::vector<RatFun>& args) {
  std::vector<Expr> xs;
  for (auto& a : args) xs.push_back(from_ratfun(a));
  return constant_of(ex::call(fn, xs));
}

// Symbol for the derivative of a primitive at a point.
RatFun derivative_constant(const std::string& fn, const std::vector<RatFun>& args) {
  std::vector<Expr> xs;
  for (auto& a : args) xs.push_back(from_ratfun(a));
  std::string name = "$D[" + to_string(ex::call(fn, xs)) + "]";
  return RatFun(Poly::variable(name));
}

Series zeros(int T) { return Series(T + 1); }

Series konst(const RatFun& c, int T) {
  Series s = zeros(T);
  s[0] = c;
  return s;
}

Series add(const Series& a, const Series& b) {
  Series r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Series scale(const Series& a, const RatFun& c) {
  Series r = a;
  for (auto& x : r) x *= c;
  return r;
}

Series inverse(const Series& a) {
  if (a[0].is_zero()) throw Error(ErrorKind::PoleAtExpansionPoint, "reciprocal of a series vanishing at the expansion point");
  Series b(a.size());
  RatFun i0 = a[0].inverse();
  b[0] = i0;
  for (size_t n = 1; n < a.size(); ++n) {
    RatFun s;
    for (size_t k = 1; k <= n; ++k)
      if (!a[k].is_zero() && !b[n - k].is_zero()) s += a[k] * b[n - k];
    b[n] = -(s * i0);
  }
  return b;
}

Series compose(const Series& F, const Series& v) {
  Series r = konst(F.back(), static_cast<int>(F.size()) - 1);
  for (size_t j = F.size() - 1; j-- > 0;) {
    r = series_mul(r, v);
    r[0] += F[j];
  }
  return r;
}

Series integrate(const Series& g, const RatFun& c0) {
  Series f(g.size());
  f[0] = c0;
  for (size_t j = 0; j + 1 < g.size(); ++j) f[j + 1] = g[j] / RatFun(Rat(static_cast<long>(j + 1)));
  return f;
}

// Power a0^e of a constant; exact when possible.
RatFun const_power(const RatFun& a0, const RatFun& e) {
  if (a0 == RatFun(1)) return RatFun(1);
  if (a0.is_constant() && e.is_constant()) {
    Rat b = a0.constant_value(), q = e.constant_value();
    if (q.get_den() == 1) return RatFun(b).pow(static_cast<int>(q.get_num().get_si()));
    if (b > 0 && q.get_den().fits_ulong_p()) {
      unsigned long d = q.get_den().get_ui();
      Int rn, rd;
      if (mpz_root(rn.get_mpz_t(), b.get_num_mpz_t(), d) && mpz_root(rd.get_mpz_t(), b.get_den_mpz_t(), d))
        return RatFun(Rat(rn, rd)).pow(static_cast<int>(q.get_num().get_si()));
    }
  }
  return constant_of(ex::pow(from_ratfun(a0), from_ratfun(e)));
}

// sum_j prod (a_i)_j / (prod (b_i)_j j!) z^j placed at s^(step*j) (+ offset).
Series hyp_series(const std::vector<RatFun>& as, const std::vector<RatFun>& bs, const RatFun& z, int step, int offset, int T) {
  Series s = zeros(T);
  RatFun t(1);
  for (int j = 0; step * j + offset <= T; ++j) {
    s[step * j + offset] = t;
    RatFun num(1), den(Rat(j + 1));
    for (auto& a : as) num *= a + RatFun(Rat(j));
    for (auto& b : bs) den *= b + RatFun(Rat(j));
    if (den.is_zero()) {
      if (num.is_zero()) break;
      throw Error(ErrorKind::PoleAtExpansionPoint, "hypergeometric series with nonpositive integer lower parameter");
    }
    t = t * num / den * z;
    if (t.is_zero()) break;
  }
  return s;
}

Poly legendre_poly(long m, VarId u) {
  if (m < 0) m = -m - 1;
  Poly x = Poly::variable(u), p0(1), p1 = x;
  if (m == 0) return p0;
  for (long k = 1; k < m; ++k) {
    Poly p2 = ((x * p1).scale(Rat(2 * k + 1)) - p0.scale(Rat(k))).scale(Rat(1, k + 1));
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

Poly hermite_poly(long m, VarId u) {
  Poly x = Poly::variable(u), h0(1), h1 = x.scale(2);
  if (m == 0) return h0;
  for (long k = 1; k < m; ++k) {
    Poly h2 = (x * h1).scale(2) - h0.scale(Rat(2 * k));
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

Poly gegenbauer_poly(long m, const Poly& l, VarId u) {
  Poly x = Poly::variable(u), c0(1), c1 = (l * x).scale(2);
  if (m == 0) return c0;
  for (long k = 1; k < m; ++k) {
    Poly c2 = ((Poly(k) + l) * x * c1).scale(2) - (Poly(k - 1) + l.scale(2)) * c0;
    c2 = c2.scale(Rat(1, k + 1));
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

[[noreturn]] void no_rule(const std::string& fn, const RatFun& c) {
  throw Error(ErrorKind::DiagnosticAbort, "no series rule for " + display_name(fn) + " at argument " + c.str());
}

Series legendre_symbolic(const RatFun& nu, const RatFun& c, int T) {
  RatFun one(1), half(Rat(1, 2));
  if (c == one) return hyp_series({-nu, nu + one}, {one}, RatFun(Rat(-1, 2)), 1, 0, T);
  if (c.is_zero()) {
    Series e = hyp_series({-nu * half, (nu + one) * half}, {half}, one, 2, 0, T);
    Series o = hyp_series({(one - nu) * half, (nu + RatFun(2)) * half}, {RatFun(Rat(3, 2))}, one, 2, 1, T);
    return add(scale(e, named_constant("legendrep", {nu, c})), scale(o, derivative_constant("legendrep", {nu, c})));
  }
  no_rule("legendrep", c);
}

}  // namespace

Series series_mul(const Series& a, const Series& b) {
  size_t n = std::min(a.size(), b.size());
  Series r(n);
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < n; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_pow(const Series& a, const RatFun& e) {
  int T = static_cast<int>(a.size()) - 1;
  long k;
  if (is_int_const(e, &k)) {
    if (k < 0) return inverse(series_pow(a, RatFun(Rat(-k))));
    Series r = konst(RatFun(1), T), b = a;
    while (k) {
      if (k & 1) r = series_mul(r, b);
      k >>= 1;
      if (k) b = series_mul(b, b);
    }
    return r;
  }
  if (a[0].is_zero()) throw Error(ErrorKind::PoleAtExpansionPoint, "non-integer power of a series vanishing at the expansion point");
  Series g = scale(a, a[0].inverse());
  Series f(a.size());
  f[0] = RatFun(1);
  for (int n = 1; n <= T; ++n) {
    RatFun s;
    for (int j = 1; j <= n; ++j)
      if (!g[j].is_zero()) s += (e * RatFun(Rat(j)) - RatFun(Rat(n - j))) * g[j] * f[n - j];
    f[n] = s / RatFun(Rat(n));
  }
  return scale(f, const_power(a[0], e));
}

Series poly_taylor(const Poly& p, VarId x, const RatFun& point, int depth) {
  Series s = zeros(depth);
  Poly q = p;
  RatFun fact(1);
  for (int j = 0; j <= depth && !q.is_zero(); ++j) {
    s[j] = RatFun(q).subs(x, point) / fact;
    q = q.derivative(x);
    fact *= RatFun(Rat(j + 1));
  }
  return s;
}

// Taylor coefficients of the primitive fn(params..., c + s) in s.
Series primitive_series(const std::string& fn, const std::vector<RatFun>& params, const RatFun& c, int T) {
  RatFun one(1), half(Rat(1, 2));
  VarId u = var("%u");
  if (fn == "exp") {
    RatFun E = c.is_zero() ? one : named_constant("exp", {c});
    Series s = zeros(T);
    for (int j = 0; j <= T; ++j) s[j] = E * RatFun(1 / factorial_q(j));
    return s;
  }
  if (fn == "sin" || fn == "cos") {
    Series sn = zeros(T), cs = zeros(T);
    for (int j = 0; j <= T; ++j) {
      Rat v = ((j / 2) % 2 ? -1 : 1) / factorial_q(j);
      (j % 2 ? sn : cs)[j] = RatFun(v);
    }
    if (c.is_zero()) return fn == "sin" ? sn : cs;
    RatFun S = named_constant("sin", {c}), C = named_constant("cos", {c});
    if (fn == "sin") return add(scale(cs, S), scale(sn, C));
    return add(scale(cs, C), scale(sn, -S));
  }
  if (fn == "arcsin" || fn == "arctan") {
    Series w = zeros(T);
    w[0] = c;
    if (T >= 1) w[1] = one;
    Series w2 = series_mul(w, w);
    Series g = fn == "arcsin" ? series_pow(add(konst(one, T), scale(w2, RatFun(-1))), RatFun(Rat(-1, 2)))
                              : inverse(add(konst(one, T), w2));
    return integrate(g, c.is_zero() ? RatFun() : named_constant(fn, {c}));
  }
  if (fn == "airyai") {
    Series s = zeros(T);
    RatFun A = named_constant("airyai", {c}), B = derivative_constant("airyai", {c});
    if (c.is_zero()) {
      RatFun f(1), g(1);
      for (int k = 0; 3 * k <= T; ++k) {
        s[3 * k] += A * f / RatFun(factorial_q(3 * k));
        if (3 * k + 1 <= T) s[3 * k + 1] += B * g / RatFun(factorial_q(3 * k + 1));
        f *= RatFun(Rat(3 * k + 1));  // 3^k (1/3)_k
        g *= RatFun(Rat(3 * k + 2));  // 3^k (2/3)_k
      }
      return s;
    }
    s[0] = A;
    if (T >= 1) s[1] = B;
    for (int j = 0; j + 2 <= T; ++j) {
      RatFun r = c * s[j];
      if (j >= 1) r += s[j - 1];
      s[j + 2] = r / RatFun(Rat((j + 2) * (j + 1)));
    }
    return s;
  }
  if (fn == "legendrep") {
    long m;
    if (is_int_const(params[0], &m)) return poly_taylor(legendre_poly(m, u), u, c, T);
    return legendre_symbolic(params[0], c, T);
  }
  if (fn == "hermiteh") {
    long m;
    if (is_int_const(params[0], &m) && m >= 0) return poly_taylor(hermite_poly(m, u), u, c, T);
    const RatFun& nu = params[0];
    if (!c.is_zero()) no_rule(fn, c);
    Series e = hyp_series({-nu * half}, {half}, one, 2, 0, T);
    Series o = hyp_series({(one - nu) * half}, {RatFun(Rat(3, 2))}, one, 2, 1, T);
    return add(scale(e, named_constant(fn, {nu, c})), scale(o, derivative_constant(fn, {nu, c})));
  }
  if (fn == "gegenbauerc") {
    long m;
    const RatFun &nu = params[0], &l = params[1];
    if (is_int_const(nu, &m) && m >= 0) {
      if (!l.is_polynomial()) no_rule(fn, c);
      return poly_taylor(gegenbauer_poly(m, l.num(), u), u, c, T);
    }
    if (c == one) {
      if (l == RatFun(Rat(-1, 2))) {
        Series a = legendre_symbolic(nu - RatFun(2), c, T), b = legendre_symbolic(nu, c, T);
        return scale(add(a, scale(b, RatFun(-1))), (nu * RatFun(2) - one).inverse());
      }
      Series h = hyp_series({-nu, nu + l * RatFun(2)}, {l + half}, RatFun(Rat(-1, 2)), 1, 0, T);
      return scale(h, named_constant(fn, {nu, l, c}));
    }
    if (c.is_zero()) {
      Series e = hyp_series({-nu * half, nu * half + l}, {half}, one, 2, 0, T);
      Series o = hyp_series({(one - nu) * half, (nu + one) * half + l}, {RatFun(Rat(3, 2))}, one, 2, 1, T);
      return add(scale(e, named_constant(fn, {nu, l, c})), scale(o, derivative_constant(fn, {nu, l, c})));
    }
    no_rule(fn, c);
  }
  if (fn == "hypergeometric1f1" || fn == "hypergeometric2f1") {
    if (!c.is_zero()) no_rule(fn, c);
    if (fn == "hypergeometric1f1") return hyp_series({params[0]}, {params[1]}, one, 1, 0, T);
    return hyp_series({params[0], params[1]}, {params[2]}, one, 1, 0, T);
  }
  if (fn == "besselj") {
    long m;
    if (!c.is_zero() || !is_int_const(params[0], &m) || m < 0) no_rule(fn, c);
    Series s = zeros(T);
    for (long k = 0; 2 * k + m <= T; ++k) {
      Rat v = Rat(k % 2 ? -1 : 1) / (factorial_q(k) * factorial_q(k + m));
      Int p2;
      mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(2 * k + m));
      s[2 * k + m] = RatFun(v / Rat(p2));
    }
    return s;
  }
  if (fn == "factorial" || fn == "tan")
    throw Error(ErrorKind::NonHolonomicInput, display_name(fn) + " is not holonomic in a continuous variable");
  no_rule(fn, c);
}


namespace {

struct SeriesCtx {
  std::string x;
  int T;
  Rat point;
};

RatFun param_value(const Expr& e, const std::string& x) {
  if (depends_on(e, x))
    throw Error(ErrorKind::NonHolonomicInput, "parameter " + to_string(e) + " depends on " + x);
  return constant_of(e);
}

long int_bound(const Expr& e) {
  auto r = to_ratfun(e);
  long v;
  if (!r || !is_int_const(*r, &v)) throw Error(ErrorKind::DiagnosticAbort, "sum bound " + to_string(e) + " is not an integer");
  return v;
}

Series ser(const Expr& e, const SeriesCtx& c) {
  switch (e->kind) {
    case ExprKind::Number: return konst(RatFun(e->value), c.T);
    case ExprKind::Symbol: {
      if (e->name != c.x) return konst(RatFun::variable(e->name), c.T);
      Series s = konst(RatFun(c.point), c.T);
      if (c.T >= 1) s[1] = RatFun(1);
      return s;
    }
    case ExprKind::Add: {
      Series s = zeros(c.T);
      for (auto& a : e->args) s = add(s, ser(a, c));
      return s;
    }
    case ExprKind::Mul: {
      Series s = konst(RatFun(1), c.T);
      for (auto& a : e->args) s = series_mul(s, ser(a, c));
      return s;
    }
    case ExprKind::Pow: {
      if (!depends_on(e->args[0], c.x)) {
        if (depends_on(e->args[1], c.x))
          throw Error(ErrorKind::NonHolonomicInput, "variable exponent in " + to_string(e));
        return konst(constant_of(e), c.T);
      }
      return series_pow(ser(e->args[0], c), param_value(e->args[1], c.x));
    }
    case ExprKind::Call: {
      bool dep = false;
      for (auto& a : e->args) dep = dep || depends_on(a, c.x);
      std::vector<RatFun> params;
      for (size_t i = 0; i + 1 < e->args.size(); ++i) params.push_back(param_value(e->args[i], c.x));
      if (!dep) {
        RatFun c0 = constant_of(e->args.back());
        try {
          return konst(primitive_series(e->name, params, c0, 0)[0], c.T);
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::DiagnosticAbort && err.kind() != ErrorKind::NonHolonomicInput) throw;
          return konst(constant_of(e), c.T);
        }
      }
      Series u = ser(e->args.back(), c);
      RatFun u0 = u[0];
      u[0] = RatFun();
      return compose(primitive_series(e->name, params, u0, c.T), u);
    }
    case ExprKind::Sum: {
      long lo = int_bound(e->args[2]), hi = int_bound(e->args[3]);
      Series s = zeros(c.T);
      for (long k = lo; k <= hi; ++k) s = add(s, ser(substitute(e->args[0], e->args[1]->name, ex::num(k)), c));
      return s;
    }
    default: throw Error(ErrorKind::DiagnosticAbort, "no series rule for " + to_string(e));
  }
}

// Value times eps^ord, the eps -> 0 limit convention for factorials at negative integers.
struct PVal {
  RatFun v;
  int ord = 0;
};

PVal pv_add(const PVal& a, const PVal& b) {
  if (a.v.is_zero()) return b;
  if (b.v.is_zero()) return a;
  if (a.ord < b.ord) return a;
  if (b.ord < a.ord) return b;
  return {a.v + b.v, a.ord};
}

RatFun finish(const PVal& p, const Expr& e) {
  if (p.v.is_zero() || p.ord > 0) return RatFun();
  if (p.ord < 0) throw Error(ErrorKind::PoleAtExpansionPoint, "pole in " + to_string(e));
  return p.v;
}

// Split r = A + c with c the integer part of the constant term.
std::pair<RatFun, long> split_int(const RatFun& r) {
  if (!r.is_polynomial()) return {r, 0};
  Rat c0 = r.num().coefficient(Monomial()) / r.den().constant_value();
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), c0.get_num_mpz_t(), c0.get_den_mpz_t());
  long c = f.get_si();
  return {r - RatFun(Rat(c)), c};
}

PVal seq(const Expr& e, const std::map<std::string, long>& at, const std::string& bound_scan);

RatFun seq_exact(const Expr& e, const std::map<std::string, long>& at) { return finish(seq(e, at, ""), e); }

PVal seq_factorial(const RatFun& a) {
  long m;
  if (is_int_const(a, &m)) {
    if (m >= 0) return {RatFun(factorial_q(m)), 0};
    Rat v = Rat((-m - 1) % 2 ? -1 : 1) / factorial_q(-m - 1);
    return {RatFun(v), -1};
  }
  auto [A, c] = split_int(a);
  RatFun v = constant_of(ex::call("factorial", {from_ratfun(A)}));
  for (long i = 1; i <= c; ++i) v *= A + RatFun(Rat(i));
  for (long i = 0; i < -c; ++i) v /= A - RatFun(Rat(i));
  return {v, 0};
}

PVal seq(const Expr& e, const std::map<std::string, long>& at, const std::string& scan) {
  switch (e->kind) {
    case ExprKind::Number: return {RatFun(e->value), 0};
    case ExprKind::Symbol: {
      auto it = at.find(e->name);
      if (it != at.end()) return {RatFun(Rat(it->second)), 0};
      return {RatFun::variable(e->name), 0};
    }
    case ExprKind::Add: {
      PVal s{RatFun(), 0};
      for (auto& a : e->args) s = pv_add(s, seq(a, at, scan));
      return s;
    }
    case ExprKind::Mul: {
      PVal s{RatFun(1), 0};
      for (auto& a : e->args) {
        PVal t = seq(a, at, scan);
        if (t.v.is_zero()) return {RatFun(), 0};
        s = {s.v * t.v, s.ord + t.ord};
      }
      return s;
    }
    case ExprKind::Pow: {
      RatFun ex_ = seq_exact(e->args[1], at);
      long k;
      if (is_int_const(ex_, &k)) {
        PVal b = seq(e->args[0], at, scan);
        if (b.v.is_zero()) {
          if (k < 0) throw Error(ErrorKind::PoleAtExpansionPoint, "division by zero in " + to_string(e));
          return {k == 0 ? RatFun(1) : RatFun(), 0};
        }
        return {b.v.pow(static_cast<int>(k)), b.ord * static_cast<int>(k)};
      }
      RatFun b = seq_exact(e->args[0], at);
      auto [A, c] = split_int(ex_);
      RatFun v = b.is_constant() && A.is_constant() ? const_power(b, A)
                                                    : constant_of(ex::pow(from_ratfun(b), from_ratfun(A)));
      return {v * b.pow(static_cast<int>(c)), 0};
    }
    case ExprKind::Call: {
      std::vector<RatFun> args;
      for (auto& a : e->args) args.push_back(seq_exact(a, at));
      if (e->name == "factorial") return seq_factorial(args[0]);
      std::vector<RatFun> params(args.begin(), args.end() - 1);
      try {
        return {primitive_series(e->name, params, args.back(), 0)[0], 0};
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::DiagnosticAbort) throw;
        return {named_constant(e->name, args), 0};
      }
    }
    case ExprKind::Sum: {
      const std::string& k = e->args[1]->name;
      long lo, hi;
      long scale = 0;
      for (auto& [n, v] : at) scale = std::max(scale, std::labs(v));
      long window = 40 + 4 * scale;
      if (e->args[2]->kind == ExprKind::Infinity)
        lo = -window;
      else
        lo = int_bound(from_ratfun(seq_exact(e->args[2], at)));
      if (e->args[3]->kind == ExprKind::Infinity)
        hi = window;
      else
        hi = int_bound(from_ratfun(seq_exact(e->args[3], at)));
      PVal s{RatFun(), 0};
      auto inner = at;
      for (long i = lo; i <= hi; ++i) {
        inner[k] = i;
        s = pv_add(s, {finish(seq(e->args[0], inner, scan), e->args[0]), 0});
      }
      return s;
    }
    default: throw Error(ErrorKind::DiagnosticAbort, "no exact value rule for " + to_string(e));
  }
}

}  // namespace

SeriesPrefix series_oracle(const Expr& f, const std::string& x, int depth, const Rat& point) {
  SeriesPrefix s;
  s.var = var(x);
  s.point = point;
  s.a = ser(f, SeriesCtx{x, depth, point});
  return s;
}

RatFun sequence_value(const Expr& f, const std::vector<std::pair<std::string, long>>& at) {
  std::map<std::string, long> m(at.begin(), at.end());
  return seq_exact(f, m);
}

SeriesPrefix sequence_oracle(const Expr& f, const std::string& n, long start, int count) {
  SeriesPrefix s;
  s.var = var(n);
  s.discrete = true;
  s.start = start;
  for (int i = 0; i < count; ++i) s.a.push_back(sequence_value(f, {{n, start + i}}));
  return s;
}

std::vector<RatFun> residual(const LinearOperatorEq& p, const SeriesPrefix& s) {
  auto pc = p.poly_coeffs();
  int r = p.order(), T = s.depth();
  std::vector<RatFun> out;
  if (s.discrete) {
    if (p.kind != OpKind::N) throw Error(ErrorKind::Usage, "differential equation checked against a sequence");
    for (int j = 0; j + r <= T; ++j) {
      RatFun acc;
      for (int i = 0; i <= r; ++i)
        if (!pc[i].is_zero()) acc += RatFun(pc[i].subs(p.var, Poly(Rat(s.start + j)))) * s.a[j + i];
      out.push_back(acc);
    }
    return out;
  }
  if (p.kind != OpKind::D) throw Error(ErrorKind::Usage, "recurrence checked against a power series");
  std::vector<Series> cp;
  for (auto& c : pc) cp.push_back(poly_taylor(c, p.var, RatFun(s.point), T));
  for (int j = 0; j + r <= T; ++j) {
    RatFun acc;
    for (int i = 0; i <= r; ++i)
      for (int l = 0; l <= j; ++l) {
        if (cp[i][l].is_zero()) continue;
        int m = j - l;  // coefficient index in D^i f
        RatFun d = s.a[m + i];
        if (d.is_zero()) continue;
        Rat ff = 1;
        for (int t = 1; t <= i; ++t) ff *= m + t;
        acc += cp[i][l] * d * RatFun(ff);
      }
    out.push_back(acc);
  }
  return out;
}

bool check_annihilates(const LinearOperatorEq& p, const SeriesPrefix& s, int margin) {
  if (s.depth() < p.order() + margin)
    throw Error(ErrorKind::InsufficientDepth, "prefix depth " + std::to_string(s.depth()) + " < order " +
                                                  std::to_string(p.order()) + " + " + std::to_string(margin));
  for (auto& r : residual(p, s))
    if (!r.is_zero()) return false;
  return true;
}

}  // namespace holo
