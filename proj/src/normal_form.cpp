#include <algorithm>
#include <map>
#include <set>

#include "holo/factor.hpp"
#include "holo/linalg.hpp"
#include "holo/series.hpp"

namespace holo {

namespace {

int max_degree(const LinearOperatorEq& p) {
  int d = 0;
  for (auto& c : p.poly_coeffs())
    if (!c.is_zero()) d = std::max(d, c.total_degree());
  return d;
}

Rat binom(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(r);
}

// The rows with every parameter set to a fixed rational. A nullspace over Q at such a point is
// never smaller than the generic one, so an empty one rules the ansatz out cheaply.
bool specialized_has_kernel(const PolyMatrix& rows, size_t ncols) {
  std::set<VarId> vars;
  for (auto& row : rows)
    for (auto& e : row)
      for (VarId v : e.variables()) vars.insert(v);
  std::map<VarId, Poly> at;
  long k = 0;
  for (VarId v : vars) at[v] = Poly(Rat(1009 + 37 * k++, 13));
  RatMatrix m;
  for (auto& row : rows) {
    std::vector<Rat> r;
    for (auto& e : row) r.push_back(vars.empty() ? e.constant_value() : e.subs(at).constant_value());
    m.push_back(r);
  }
  return !nullspace(m, ncols).empty();
}

// Rows of the linear system for an order-r, degree-d ansatz on the prefix.
PolyMatrix ansatz_rows(const SeriesPrefix& s, OpKind kind, int r, int d) {
  int count = static_cast<int>(s.a.size()) - 1;
  std::vector<std::vector<RatFun>> rows;
  if (kind == OpKind::D) {
    std::vector<std::vector<RatFun>> g(r + 1);
    for (int i = 0; i <= r; ++i)
      for (int t = 0; t + i <= count; ++t) {
        RatFun v = s.a[t + i];
        for (int u = 1; u <= i; ++u) v *= RatFun(Rat(t + u));
        g[i].push_back(v);
      }
    for (int t = 0; t + r <= count; ++t) {
      std::vector<RatFun> row;
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= d; ++j) {
          RatFun e;
          for (int l = 0; l <= std::min(j, t); ++l) {
            Rat c = binom(j, l);
            Rat x0 = 1;
            for (int u = 0; u < j - l; ++u) x0 *= s.point;
            if (c * x0 != 0) e += RatFun(c * x0) * g[i][t - l];
          }
          row.push_back(e);
        }
      rows.push_back(row);
    }
  } else {
    for (int t = 0; t + r <= count; ++t) {
      Rat n0(s.start + t);
      std::vector<RatFun> row;
      for (int i = 0; i <= r; ++i) {
        Rat pw = 1;
        for (int j = 0; j <= d; ++j, pw *= n0) row.push_back(RatFun(pw) * s.a[t + i]);
      }
      rows.push_back(row);
    }
  }
  PolyMatrix m;
  for (auto& row : rows) {
    Poly l(1);
    for (auto& e : row)
      if (!e.is_zero()) l = poly_lcm(l, e.den());
    std::vector<Poly> pr;
    for (auto& e : row) pr.push_back(e.is_zero() ? Poly() : divide_exact(l, e.den()) * e.num());
    m.push_back(pr);
  }
  return m;
}

}  // namespace

NormalForm normal_form(const LinearOperatorEq& p0, const Expr& f, const FactorOptions& opt) {
  LinearOperatorEq p = p0.canonical();
  int m = p.order();
  NormalForm nf;
  nf.eq = p;
  auto bound = [&](int r) { return opt.degree_bound >= 0 ? opt.degree_bound : max_degree(p) + r; };
  nf.degree_bound = bound(std::max(m - 1, 0));
  if (m <= 1) {
    nf.certified_minimal = m == 1;
    return nf;
  }
  int unknowns = m * (bound(m - 1) + 1);
  int count = unknowns + m + kVerifyMargin;
  SeriesPrefix data;
  bool have = false;
  std::string last;
  std::vector<Rat> pts;
  if (p.kind == OpKind::D) {
    for (const Rat& x : {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(-2), Rat(3)}) pts.push_back(x);
  } else {
    for (long s = 0; s <= 4; ++s) pts.push_back(Rat(s));
  }
  // Unknown constants such as $f(0) make the data look like a generic solution; prefer a point without them.
  auto opaque = [](const SeriesPrefix& d) {
    for (auto& a : d.a)
      for (VarId v : a.variables())
        if (var_name(v).rfind("$", 0) == 0) return true;
    return false;
  };
  for (const Rat& pt : pts) {
    try {
      SeriesPrefix cur = p.kind == OpKind::D ? series_oracle(f, var_name(p.var), count, pt)
                                             : sequence_oracle(f, var_name(p.var), pt.get_num().get_si(), count + 1);
      bool clean = !opaque(cur);
      if (!have || clean) {
        data = cur;
        nf.point = pt;
      }
      have = true;
      if (clean) break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtExpansionPoint && e.kind() != ErrorKind::DiagnosticAbort) throw;
      last = e.what();
    }
  }
  if (!have) throw Error(ErrorKind::DiagnosticAbort, "normal form needs oracle data: " + last);

  for (int r = 1; r < m; ++r)
    for (int d = 0; d <= bound(r); ++d) {
      auto rows = ansatz_rows(data, p.kind, r, d);
      size_t ncols = static_cast<size_t>((r + 1) * (d + 1));
      if (rows.size() < ncols + kVerifyMargin / 2) continue;
      if (!specialized_has_kernel(rows, ncols)) continue;
      for (auto& v : nullspace(rows, ncols)) {
        std::vector<RatFun> cs;
        for (int i = 0; i <= r; ++i) {
          Poly c;
          for (int j = 0; j <= d; ++j) c += v[i * (d + 1) + j] * Poly::variable(p.var).pow(j);
          cs.push_back(RatFun(c));
        }
        if (cs[r].is_zero()) continue;
        LinearOperatorEq q = LinearOperatorEq(p.var, p.kind, cs).canonical();
        if (!right_divides(q, p)) continue;
        auto c = check_compatible(q, f);
        if (!c.ok) continue;
        nf.eq = q;
        nf.certified_minimal = r == 1;
        nf.degree_bound = bound(r);
        nf.notes.push_back("right factor of order " + std::to_string(r) + " of the order " + std::to_string(m) +
                           " equation");
        nf.notes.insert(nf.notes.end(), c.notes.begin(), c.notes.end());
        if (r > 1)
          nf.notes.push_back("no lower order found with coefficient degree <= " + std::to_string(bound(r - 1)));
        return nf;
      }
    }
  nf.notes.push_back("no right factor of lower order with coefficient degree <= " + std::to_string(bound(m - 1)) +
                     "; normal form not certified minimal");
  return nf;
}

// ---------------------------------------------------------------- two-term recurrences

namespace {

// lc * prod (v - a)^k; throws NotTwoTerm if p does not split.
std::pair<RatFun, std::vector<std::pair<Rat, int>>> split_linear(Poly p, VarId v) {
  std::vector<std::pair<Rat, int>> out;
  while (p.degree(v) > 0) {
    auto cs = p.coefficients_in(v);
    // roots common to all parameter slices
    std::map<Monomial, Poly, MonoLess> slices;
    for (auto& [m, c] : p.terms()) slices[m.without(v)] += Poly::monomial(Monomial::of(v, m.exponent(v)), c);
    Poly g;
    for (auto& [m, s] : slices) g = g.is_zero() ? s : poly_gcd(g, s);
    auto roots = g.degree(v) > 0 ? rational_roots(g, v) : std::vector<Rat>{};
    if (roots.empty()) throw Error(ErrorKind::NotTwoTerm, "coefficient " + p.str() + " does not split into linear factors");
    for (const Rat& a : roots) {
      Poly lin = Poly::variable(v) - Poly(a);
      int k = 0;
      while (auto q = try_divide(p, lin)) {
        p = *q;
        ++k;
      }
      out.push_back({a, k});
    }
  }
  return {RatFun(p), out};
}

Expr factorial_of(const Expr& e) { return ex::call("factorial", {e}); }

Int int_factorial(long k) {
  Int r = 1;
  for (long i = 2; i <= k; ++i) r *= i;
  return r;
}

// prod_{i<n} (i + c) as an expression in n.
Expr pochhammer(const Rat& c, const Expr& n) {
  if (c.get_den() == 1) {
    long ci = c.get_num().get_si();
    if (ci >= 1) return ex::div(factorial_of(ex::add(n, ex::num(ci - 1))), ex::num(Rat(int_factorial(ci - 1))));
    // (-1)^n (-c)! / (-c-n)!, zero once the product passes through 0
    return ex::mul({ex::pow(ex::num(-1), n), ex::num(Rat(int_factorial(-ci))),
                    ex::pow(factorial_of(ex::sub(ex::num(-ci), n)), ex::num(-1))});
  }
  if (c.get_den() == 2 && c > 0) {
    long h = Rat(c - Rat(1, 2)).get_num().get_si();
    Expr nh = ex::add(n, ex::num(h));
    return ex::mul({factorial_of(ex::mul(ex::num(2), nh)), ex::pow(factorial_of(nh), ex::num(-1)),
                    ex::pow(ex::num(4), ex::neg(n)),
                    ex::num(Rat(int_factorial(h)) / Rat(int_factorial(2 * h)))});
  }
  return ex::div(factorial_of(ex::add(n, ex::num(c - 1))), factorial_of(ex::num(c - 1)));
}

}  // namespace

TwoTermSolution solve_two_term(const LinearOperatorEq& p, long start, const std::vector<Expr>& initial) {
  if (p.kind != OpKind::N) throw Error(ErrorKind::NotTwoTerm, "two-term solving needs a recurrence");
  auto c = p.canonical().poly_coeffs();
  std::vector<int> nz;
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) nz.push_back(static_cast<int>(i));
  if (nz.size() != 2) throw Error(ErrorKind::NotTwoTerm, "recurrence has " + std::to_string(nz.size()) + " terms");
  VarId n = p.var;
  int lo = nz[0], j = nz[1] - nz[0];
  Poly c0 = c[lo].shift(n, Rat(-lo)), cj = c[nz[1]].shift(n, Rat(-lo));
  if (static_cast<int>(initial.size()) != j)
    throw Error(ErrorKind::Usage, "two-term recurrence of gap " + std::to_string(j) + " needs " + std::to_string(j) +
                                      " initial values");
  auto [k0, f0] = split_linear(c0, n);
  auto [kj, fj] = split_linear(cj, n);
  RatFun K = -k0 / kj;
  int excess = 0;
  for (auto& [a, k] : f0) excess += k;
  for (auto& [a, k] : fj) excess -= k;
  TwoTermSolution sol;
  sol.gap = j;
  sol.start = start;
  Expr m = ex::sym(var_name(n));
  for (int s = 0; s < j; ++s) {
    long idx = start + s;
    for (auto& [b, k] : fj) {
      Rat c = (Rat(idx) - b) / j;
      if (c.get_den() == 1 && c <= 0)
        throw Error(ErrorKind::NotTwoTerm, "leading coefficient vanishes at " + var_name(n) + " = " + b.get_str());
    }
    RatFun base = K * RatFun(Rat(j)).pow(excess);
    std::vector<Expr> fs{initial[s]};
    if (base != RatFun(1)) fs.push_back(ex::pow(from_ratfun(base), m));
    for (auto& [a, k] : f0)
      for (int t = 0; t < k; ++t) fs.push_back(pochhammer((Rat(idx) - a) / j, m));
    for (auto& [b, k] : fj)
      for (int t = 0; t < k; ++t) fs.push_back(ex::pow(pochhammer((Rat(idx) - b) / j, m), ex::num(-1)));
    Expr v = ex::mul(fs);
    sol.branches.push_back(v);
    std::string lhs = "a(" + (j == 1 ? var_name(n) : std::to_string(j) + "*" + var_name(n));
    if (idx) lhs += (idx > 0 ? "+" : "") + std::to_string(idx);
    sol.display.push_back(lhs + ") = " + to_string(v));
  }
  return sol;
}

}  // namespace holo
