#include <algorithm>
#include <map>
#include <set>

#include "holo/factor.hpp"
#include "holo/linalg.hpp"

namespace holo {

namespace {

using Vec = std::vector<RatFun>;

// Rational roots of p in v that do not depend on the other variables, with multiplicity in p.
std::vector<std::pair<Rat, int>> fixed_roots(const Poly& p, VarId v) {
  if (p.is_zero() || p.degree(v) == 0) return {};
  std::map<Monomial, Poly, MonoLess> slices;
  for (auto& [m, c] : p.terms()) {
    Monomial rest = m.without(v);
    slices[rest] += Poly::monomial(Monomial::of(v, m.exponent(v)), c);
  }
  Poly g;
  for (auto& [m, s] : slices) g = g.is_zero() ? s : poly_gcd(g, s);
  std::vector<std::pair<Rat, int>> out;
  if (g.degree(v) == 0) return out;
  for (const Rat& a : rational_roots(g, v)) {
    Poly lin = Poly::variable(v) - Poly(a);
    Poly q = p;
    int k = 0;
    while (auto d = try_divide(q, lin)) {
      q = *d;
      ++k;
    }
    out.push_back({a, k});
  }
  return out;
}

std::vector<Rat> fixed_root_values(const Poly& p, VarId v) {
  std::vector<Rat> out;
  for (auto& [a, k] : fixed_roots(p, v)) out.push_back(a);
  return out;
}

// All products of sub-multisets of the linear factors (v - a)^k.
std::vector<Poly> sub_products(const std::vector<std::pair<Rat, int>>& fs, VarId v, size_t cap) {
  std::vector<Poly> out{Poly(1)};
  for (auto& [a, k] : fs) {
    std::vector<Poly> next;
    Poly lin = Poly::variable(v) - Poly(a);
    for (auto& q : out) {
      Poly t = q;
      for (int e = 0; e <= k && next.size() < cap; ++e) {
        next.push_back(t);
        t = t * lin;
      }
    }
    out = std::move(next);
  }
  return out;
}

// Columns are polynomial vectors; returns coefficient rows in v.
PolyMatrix rows_in(const std::vector<Poly>& cols, VarId v) {
  int d = 0;
  for (auto& c : cols) d = std::max(d, c.is_zero() ? 0 : c.degree(v));
  PolyMatrix m(d + 1, std::vector<Poly>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    auto cs = cols[j].coefficients_in(v);
    for (size_t i = 0; i < cs.size(); ++i) m[i][j] = cs[i];
  }
  return m;
}

Poly from_vector(const std::vector<Poly>& coef, VarId v) {
  Poly p;
  for (size_t t = 0; t < coef.size(); ++t) p += coef[t] * Poly::variable(v).pow(static_cast<unsigned>(t));
  return p;
}

Poly lcm_den(const Vec& v) {
  Poly l(1);
  for (auto& e : v)
    if (!e.is_zero()) l = poly_lcm(l, e.den());
  return l;
}

void add_unique(std::vector<RatFun>& out, const RatFun& s) {
  for (auto& t : out)
    if (t == s) return;
  out.push_back(s);
}

std::vector<RatFun> shift_solutions(const LinearOperatorEq& p, int B, size_t cap) {
  VarId n = p.var;
  auto c = p.canonical().poly_coeffs();
  int m = static_cast<int>(c.size()) - 1;
  std::vector<RatFun> out;
  if (c[0].is_zero()) {
    out.push_back(RatFun());
    return out;
  }
  auto As = sub_products(fixed_roots(c[0], n), n, cap);
  auto Bs = sub_products(fixed_roots(c[m].shift(n, Rat(1 - m)), n), n, cap);
  size_t tried = 0;
  for (auto& A : As)
    for (auto& Bp : Bs) {
      if (++tried > cap) return out;
      std::vector<Poly> alpha(m + 1);
      int top = -1;
      for (int i = 0; i <= m; ++i) {
        if (c[i].is_zero()) continue;
        Poly t = c[i];
        for (int j = 0; j < i; ++j) t *= A.shift(n, Rat(j));
        for (int j = i; j < m; ++j) t *= Bp.shift(n, Rat(j));
        alpha[i] = t;
        top = std::max(top, t.degree(n));
      }
      VarId z = var("$Z");
      Poly zp;
      for (int i = 0; i <= m; ++i)
        if (!alpha[i].is_zero() && alpha[i].degree(n) == top)
          zp += alpha[i].coefficients_in(n)[top] * Poly::variable(z).pow(i);
      for (const Rat& Z : fixed_root_values(zp, z)) {
        if (Z == 0) continue;
        std::vector<Poly> cols;
        for (int t = 0; t <= B; ++t) {
          Poly col;
          Rat Zi = 1;
          for (int i = 0; i <= m; ++i, Zi *= Z)
            if (!alpha[i].is_zero()) col += alpha[i].scale(Zi) * (Poly::variable(n) + Poly(i)).pow(t);
          cols.push_back(col);
        }
        for (auto& v : nullspace(rows_in(cols, n), cols.size())) {
          Poly C = from_vector(v, n);
          if (C.is_zero()) continue;
          RatFun s = RatFun(A.scale(Z) * C.shift(n, Rat(1))) / RatFun(Bp * C);
          add_unique(out, s);
        }
      }
    }
  return out;
}

// Indicial polynomial of p at x = a in the variable e.
Poly indicial(const std::vector<Poly>& c, VarId x, const Rat& a, VarId e) {
  int mu = INT32_MAX;
  std::vector<std::pair<int, Poly>> low;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    auto cs = c[i].shift(x, a).coefficients_in(x);
    int val = 0;
    while (cs[val].is_zero()) ++val;
    int k = val - static_cast<int>(i);
    if (k < mu) {
      mu = k;
      low.clear();
    }
    if (k == mu) low.push_back({static_cast<int>(i), cs[val]});
  }
  Poly ind;
  for (auto& [i, lc] : low) {
    Poly ff(1);
    for (int t = 0; t < i; ++t) ff *= Poly::variable(e) - Poly(t);
    ind += lc * ff;
  }
  return ind;
}

std::vector<RatFun> diff_solutions(const LinearOperatorEq& p, int B, size_t cap) {
  VarId x = p.var;
  auto c = p.canonical().poly_coeffs();
  int m = static_cast<int>(c.size()) - 1;
  VarId e = var("$E"), z = var("$Z");
  std::vector<std::pair<Rat, std::vector<Rat>>> sing;
  for (const Rat& a : fixed_root_values(c[m], x)) {
    auto ex = fixed_root_values(indicial(c, x, a, e), e);
    if (ex.empty()) return {};
    sing.push_back({a, ex});
  }
  std::vector<Rat> Zs{0};
  int top = -1;
  for (auto& ci : c)
    if (!ci.is_zero()) top = std::max(top, ci.degree(x));
  Poly zp;
  for (int i = 0; i <= m; ++i)
    if (!c[i].is_zero() && c[i].degree(x) == top) zp += c[i].coefficients_in(x)[top] * Poly::variable(z).pow(i);
  for (const Rat& Z : fixed_root_values(zp, z))
    if (Z != 0) Zs.push_back(Z);

  std::vector<RatFun> out;
  size_t tried = 0;
  std::vector<size_t> pick(sing.size(), 0);
  while (true) {
    for (const Rat& Z : Zs) {
      if (++tried > cap) return out;
      RatFun sigma{Poly(Z)};
      for (size_t s = 0; s < sing.size(); ++s) {
        const Rat& ea = sing[s].second[pick[s]];
        if (ea != 0) sigma += RatFun(Poly(ea)) / RatFun(Poly::variable(x) - Poly(sing[s].first));
      }
      // conjugate: sum c_i (D + sigma)^i
      LinearOperatorEq step(x, OpKind::D, {sigma, RatFun(1)}), pw(x, OpKind::D, {RatFun(1)});
      LinearOperatorEq conj(x, OpKind::D, {});
      for (int i = 0; i <= m; ++i) {
        if (i) pw = compose(step, pw);
        if (!c[i].is_zero()) conj = conj + scale_left(RatFun(c[i]), pw);
      }
      Vec vals;
      for (int t = 0; t <= B; ++t) vals.push_back(conj.apply(RatFun(Poly::variable(x).pow(t))));
      Poly l = lcm_den(vals);
      std::vector<Poly> cols;
      for (auto& v : vals) cols.push_back(v.is_zero() ? Poly() : divide_exact(l, v.den()) * v.num());
      for (auto& v : nullspace(rows_in(cols, x), cols.size())) {
        Poly P = from_vector(v, x);
        if (P.is_zero()) continue;
        add_unique(out, sigma + RatFun(P.derivative(x)) / RatFun(P));
      }
    }
    size_t s = 0;
    while (s < pick.size() && ++pick[s] == sing[s].second.size()) pick[s++] = 0;
    if (s == pick.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------- exterior powers

struct Exterior {
  std::vector<std::vector<int>> sets;
  std::map<std::vector<int>, size_t> index;
  Vec red;  // Op^m = sum red_l Op^l
  const LinearOperatorEq* p;
};

void place(Exterior& X, std::vector<int> rest, int l, const RatFun& coef, Vec& out) {
  if (std::find(rest.begin(), rest.end(), l) != rest.end()) return;
  int sign = 0;
  for (int t : rest) sign += t > l;
  rest.push_back(l);
  std::sort(rest.begin(), rest.end());
  RatFun v = (sign % 2) ? -coef : coef;
  out[X.index.at(rest)] += v;
}

Vec ext_step(Exterior& X, const Vec& u) {
  const LinearOperatorEq& p = *X.p;
  int m = p.order();
  Vec out(u.size());
  for (size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero()) continue;
    const auto& I = X.sets[k];
    if (p.kind == OpKind::D) {
      out[k] += u[k].derivative(p.var);
      for (size_t pos = 0; pos < I.size(); ++pos) {
        int j1 = I[pos] + 1;
        if (j1 < m) {
          if (std::find(I.begin(), I.end(), j1) != I.end()) continue;
          auto J = I;
          J[pos] = j1;
          out[X.index.at(J)] += u[k];
        } else {
          std::vector<int> rest(I.begin(), I.end() - 1);
          for (int l = 0; l < m; ++l)
            if (!X.red[l].is_zero()) place(X, rest, l, X.red[l] * u[k], out);
        }
      }
    } else {
      RatFun us = u[k].shift(p.var, Rat(1));
      std::vector<int> J;
      for (int i : I) J.push_back(i + 1);
      if (J.back() < m) {
        out[X.index.at(J)] += us;
      } else {
        std::vector<int> rest(J.begin(), J.end() - 1);
        for (int l = 0; l < m; ++l)
          if (!X.red[l].is_zero()) place(X, rest, l, X.red[l] * us, out);
      }
    }
  }
  return out;
}

void subsets(int m, int r, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < m; ++i) {
    cur.push_back(i);
    subsets(m, r, i + 1, cur, out);
    cur.pop_back();
  }
}

// Columns scaled to polynomials; returns the nullspace of [cols | extra].
std::vector<std::vector<Poly>> solve_columns(const std::vector<Vec>& cols, std::vector<Poly>& scale) {
  size_t dim = cols.front().size(), m = cols.size();
  PolyMatrix mat(dim, std::vector<Poly>(m));
  scale.assign(m, Poly(1));
  for (size_t i = 0; i < m; ++i) {
    scale[i] = lcm_den(cols[i]);
    for (size_t r = 0; r < dim; ++r)
      if (!cols[i][r].is_zero()) mat[r][i] = divide_exact(scale[i], cols[i][r].den()) * cols[i][r].num();
  }
  return nullspace(mat, m);
}

std::vector<LinearOperatorEq> from_start(Exterior& X, const Vec& start, int r, int B, size_t cap) {
  const LinearOperatorEq& p = *X.p;
  size_t M = X.sets.size();
  std::vector<Vec> us;
  Vec u = start;
  LinearOperatorEq A;
  for (size_t k = 0; k <= M; ++k) {
    us.push_back(u);
    std::vector<Poly> sc;
    auto ns = solve_columns(us, sc);
    if (!ns.empty()) {
      Vec cf;
      for (size_t i = 0; i < us.size(); ++i) cf.push_back(RatFun(ns[0][i]) * RatFun(sc[i]));
      A = LinearOperatorEq(p.var, p.kind, cf).canonical();
      us.pop_back();
      break;
    }
    u = ext_step(X, u);
  }
  int k = static_cast<int>(us.size());
  // e_J for J = {0..r} \ {i} in terms of Op^j of the first coordinate
  std::vector<std::optional<Vec>> beta(r + 1);
  for (int i = 0; i <= r; ++i) {
    std::vector<int> J;
    for (int t = 0; t <= r; ++t)
      if (t != i) J.push_back(t);
    Vec unit(M);
    unit[X.index.at(J)] = RatFun(-1);
    auto cols = us;
    cols.push_back(unit);
    std::vector<Poly> sc;
    auto ns = solve_columns(cols, sc);
    if (ns.empty() || ns[0][k].is_zero()) return {};
    Vec b;
    RatFun last = RatFun(ns[0][k]) * RatFun(sc[k]);
    for (int j = 0; j < k; ++j) b.push_back(RatFun(ns[0][j]) * RatFun(sc[j]) / last);
    beta[i] = b;
  }
  std::vector<LinearOperatorEq> out;
  for (const RatFun& sigma : hyper_solutions(A, B, cap)) {
    Vec rho{RatFun(1)};
    for (int j = 1; j < k; ++j) {
      const RatFun& pr = rho.back();
      rho.push_back(p.kind == OpKind::D ? pr.derivative(p.var) + sigma * pr : sigma * pr.shift(p.var, Rat(1)));
    }
    Vec q;
    for (int i = 0; i <= r; ++i) {
      RatFun e;
      for (int j = 0; j < k; ++j) e += (*beta[i])[j] * rho[j];
      q.push_back(i % 2 ? -e : e);
    }
    LinearOperatorEq cand(p.var, p.kind, q);
    while (!cand.coeffs.empty() && cand.coeffs.back().is_zero()) cand.coeffs.pop_back();
    if (cand.order() == r) out.push_back(cand.canonical());
  }
  return out;
}

// Candidate from Plücker-type coordinates Y_I: q = sum_i (-1)^i Y_{{0..r}\{i}} Op^i.
std::optional<LinearOperatorEq> from_coordinates(const Exterior& X, const Vec& Y, int r) {
  Vec q;
  for (int i = 0; i <= r; ++i) {
    std::vector<int> J;
    for (int t = 0; t <= r; ++t)
      if (t != i) J.push_back(t);
    const RatFun& e = Y[X.index.at(J)];
    q.push_back(i % 2 ? -e : e);
  }
  LinearOperatorEq cand(X.p->var, X.p->kind, q);
  while (!cand.coeffs.empty() && cand.coeffs.back().is_zero()) cand.coeffs.pop_back();
  if (cand.order() != r) return std::nullopt;
  return cand.canonical();
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int a = q.get_num(), b = q.get_den();
  if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t())) return std::nullopt;
  Int ra, rb;
  mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
  mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
  return Rat(ra, rb);
}

std::optional<Poly> poly_sqrt(const Poly& p) {
  if (p.is_zero()) return Poly();
  if (p.is_constant()) {
    auto r = rat_sqrt(p.constant_value());
    if (!r) return std::nullopt;
    return Poly(*r);
  }
  VarId v = *p.variables().begin();
  Poly root(1);
  Poly rest = p;
  for (auto& [f, k] : squarefree(p, v)) {
    if (f.degree(v) == 0) continue;
    if (k % 2) return std::nullopt;
    root *= f.pow(k / 2);
    rest = divide_exact(rest, f.pow(k));
  }
  auto inner = poly_sqrt(rest);
  if (!inner) return std::nullopt;
  Poly cand = root * *inner;
  if (cand * cand == p) return cand;
  if (cand * cand == -p) return std::nullopt;
  return std::nullopt;
}

std::optional<RatFun> ratfun_sqrt(const RatFun& r) {
  auto a = poly_sqrt(r.num()), b = poly_sqrt(r.den());
  if (a && b) return RatFun(*a) / RatFun(*b);
  auto c = poly_sqrt(-r.num()), d = poly_sqrt(-r.den());
  if (c && d) return RatFun(*c) / RatFun(*d);
  return std::nullopt;
}

Vec combine(const std::vector<Vec>& Ys, const std::vector<RatFun>& lam) {
  Vec Y(Ys.front().size());
  for (size_t a = 0; a < Ys.size(); ++a)
    if (!lam[a].is_zero())
      for (size_t I = 0; I < Y.size(); ++I) Y[I] += lam[a] * Ys[a][I];
  return Y;
}

// The Plücker quadric on the coordinates {0,1,2,3} of a 2-vector.
RatFun plucker(const Exterior& X, const Vec& Y) {
  auto c = [&](int i, int j) { return Y[X.index.at({i, j})]; };
  return c(0, 1) * c(2, 3) - c(0, 2) * c(1, 3) + c(0, 3) * c(1, 2);
}

// Decomposable members of the pencil A + mu B, mu in the coefficient field.
std::vector<Vec> pencil_points(const Exterior& X, const Vec& A, const Vec& B, const Rat& x0) {
  VarId x = X.p->var;
  std::vector<Vec> out;
  if (X.p->order() < 4) {
    out.push_back(A);
    out.push_back(B);
    return out;
  }
  Vec AB(A.size());
  for (size_t I = 0; I < A.size(); ++I) AB[I] = A[I] + B[I];
  RatFun q0 = plucker(X, A).eval(x, x0), q2 = plucker(X, B).eval(x, x0);
  RatFun q1 = plucker(X, AB).eval(x, x0) - q0 - q2;
  auto add = [&](const RatFun& mu) {
    Vec Y(A.size());
    for (size_t I = 0; I < A.size(); ++I) Y[I] = A[I] + mu * B[I];
    out.push_back(Y);
  };
  if (q0.is_zero()) out.push_back(A);
  if (q2.is_zero()) {
    out.push_back(B);
    if (!q1.is_zero()) add(-q0 / q1);
    return out;
  }
  RatFun disc = q1 * q1 - RatFun(4) * q0 * q2;
  if (auto sq = ratfun_sqrt(disc)) {
    add((-q1 + *sq) / (RatFun(2) * q2));
    if (!sq->is_zero()) add((-q1 - *sq) / (RatFun(2) * q2));
  }
  return out;
}

// Members of span(Ys) whose first coordinate (times d) is kappa * prod (x - a)^m_a over the
// singular points: right factors without apparent singularities.
std::vector<Vec> special_members(const Exterior& X, const std::vector<Vec>& Ys, const Poly& d, int deg) {
  const LinearOperatorEq& p = *X.p;
  VarId x = p.var;
  std::vector<Vec> out;
  auto sing = fixed_roots(p.canonical().lead().num(), x);
  std::vector<Poly> N;
  for (auto& Y : Ys) N.push_back((Y[0] * RatFun(d)).num());
  Rat x0 = 0;
  for (long t = 0; t < 20; ++t) {
    x0 = Rat(2 * t + 1, 7);
    if (!d.subs(x, Poly(x0)).is_zero() && !p.canonical().lead().num().subs(x, Poly(x0)).is_zero()) break;
  }
  std::vector<int> m(sing.size(), 0);
  while (true) {
    int total = 0;
    for (int k : m) total += k;
    if (total <= deg) {
      Poly target(1);
      for (size_t i = 0; i < sing.size(); ++i)
        target *= (Poly::variable(x) - Poly(sing[i].first)).pow(m[i]);
      std::vector<Poly> cols = N;
      cols.push_back(-target);
      auto ns = nullspace(rows_in(cols, x), cols.size());
      std::vector<Vec> lam_vecs;
      for (auto& v : ns) {
        if (v.back().is_zero()) continue;
        std::vector<RatFun> lam;
        for (size_t a = 0; a < Ys.size(); ++a) lam.push_back(RatFun(v[a]));
        lam_vecs.push_back(combine(Ys, lam));
      }
      if (ns.size() == 1 && !lam_vecs.empty()) {
        out.push_back(lam_vecs[0]);
      } else if (ns.size() == 2) {
        std::vector<RatFun> la, lb;
        for (size_t a = 0; a < Ys.size(); ++a) {
          la.push_back(RatFun(ns[0][a]));
          lb.push_back(RatFun(ns[1][a]));
        }
        for (auto& Y : pencil_points(X, combine(Ys, la), combine(Ys, lb), x0)) out.push_back(Y);
      } else {
        for (auto& Y : lam_vecs) out.push_back(Y);
      }
    }
    size_t i = 0;
    while (i < m.size() && ++m[i] > deg) m[i++] = 0;
    if (i == m.size()) break;
  }
  return out;
}

// Rational solutions Y = P/d of the system Y' = T Y on the exterior power (differential case).
std::vector<LinearOperatorEq> system_factors(Exterior& X, int r, int B) {
  const LinearOperatorEq& p = *X.p;
  VarId x = p.var;
  size_t M = X.sets.size();
  std::vector<Vec> T(M);
  for (size_t I = 0; I < M; ++I) {
    Vec u(M);
    u[I] = RatFun(1);
    T[I] = ext_step(X, u);
  }
  Poly L(1);
  for (auto& row : T) L = poly_lcm(L, lcm_den(row));
  std::vector<std::vector<Poly>> LT(M, std::vector<Poly>(M));
  for (size_t I = 0; I < M; ++I)
    for (size_t J = 0; J < M; ++J)
      if (!T[I][J].is_zero()) LT[I][J] = divide_exact(L, T[I][J].den()) * T[I][J].num();
  Poly sqf(1);
  for (auto& [f, k] : squarefree(p.canonical().lead().num(), x))
    if (f.degree(x) > 0) sqf *= f;
  std::vector<LinearOperatorEq> out;
  for (int s = 0; s <= 2 && out.empty(); ++s) {
    Poly d = sqf.pow(s), dd = d.derivative(x);
    int deg = B + s * sqf.degree(x);
    size_t ncols = M * (deg + 1);
    // rows: component I, coefficient of x^t
    std::vector<std::vector<Poly>> comp(M, std::vector<Poly>(ncols));
    for (size_t J = 0; J < M; ++J)
      for (int j = 0; j <= deg; ++j) {
        size_t col = J * (deg + 1) + j;
        Poly xj = Poly::variable(x).pow(j);
        for (size_t I = 0; I < M; ++I) {
          Poly e;
          if (I == J) {
            if (j > 0) e += L * d * Poly::variable(x).pow(j - 1).scale(Rat(j));
            e -= L * dd * xj;
          }
          if (!LT[I][J].is_zero()) e -= d * LT[I][J] * xj;
          comp[I][col] = e;
        }
      }
    PolyMatrix mat;
    for (size_t I = 0; I < M; ++I) {
      int top = 0;
      for (auto& e : comp[I])
        if (!e.is_zero()) top = std::max(top, e.degree(x));
      std::vector<std::vector<Poly>> rows(top + 1, std::vector<Poly>(ncols));
      for (size_t c = 0; c < ncols; ++c) {
        if (comp[I][c].is_zero()) continue;
        auto cs = comp[I][c].coefficients_in(x);
        for (size_t t = 0; t < cs.size(); ++t) rows[t][c] = cs[t];
      }
      for (auto& row : rows) mat.push_back(std::move(row));
    }
    auto ns = nullspace(mat, ncols);
    auto to_Y = [&](const std::vector<Poly>& v) {
      Vec Y(M);
      for (size_t J = 0; J < M; ++J) {
        Poly P;
        for (int j = 0; j <= deg; ++j) P += v[J * (deg + 1) + j] * Poly::variable(x).pow(j);
        Y[J] = RatFun(P) / RatFun(d);
      }
      return Y;
    };
    std::vector<Vec> Ys;
    for (auto& v : ns) Ys.push_back(to_Y(v));
    if (r == 2 && Ys.size() >= 2)
      for (auto& Y : special_members(X, Ys, d, deg)) Ys.push_back(Y);
    for (auto& Y : Ys)
      if (auto q = from_coordinates(X, Y, r)) out.push_back(*q);
  }
  return out;
}

std::vector<LinearOperatorEq> exterior_factors(const LinearOperatorEq& p, int r, int B, size_t cap) {
  int m = p.order();
  Exterior X;
  X.p = &p;
  std::vector<int> cur;
  subsets(m, r, 0, cur, X.sets);
  for (size_t i = 0; i < X.sets.size(); ++i) X.index[X.sets[i]] = i;
  for (int l = 0; l < m; ++l) X.red.push_back(-p.coeffs[l] / p.lead());
  size_t M = X.sets.size();

  // cyclic vector: single coordinates first, then a generic combination
  std::vector<Vec> starts;
  for (size_t i = 0; i < M; ++i) {
    Vec u(M);
    u[i] = RatFun(1);
    starts.push_back(u);
  }
  Vec mix(M);
  for (size_t i = 0; i < M; ++i) mix[i] = RatFun(Rat(static_cast<long>(i * i + 1)));
  starts.push_back(mix);
  std::vector<LinearOperatorEq> out;
  if (p.kind == OpKind::D) {
    out = system_factors(X, r, B);
    if (!out.empty()) return out;
  }
  for (auto& start : starts) {
    auto found = from_start(X, start, r, B, cap);
    for (auto& q : found) out.push_back(q);
    if (!found.empty()) break;
  }
  return out;
}

int max_coeff_degree(const LinearOperatorEq& p) {
  int d = 0;
  for (auto& c : p.canonical().poly_coeffs())
    if (!c.is_zero()) d = std::max(d, c.total_degree());
  return d;
}

}  // namespace

std::vector<RatFun> hyper_solutions(const LinearOperatorEq& p, int degree_bound, size_t max_candidates) {
  if (p.order() < 1) return {};
  return p.kind == OpKind::N ? shift_solutions(p, degree_bound, max_candidates)
                             : diff_solutions(p, degree_bound, max_candidates);
}

std::vector<LinearOperatorEq> right_factors(const LinearOperatorEq& p, int r, const FactorOptions& opt) {
  int m = p.order();
  if (r < 1 || r > m) throw Error(ErrorKind::Usage, "factor order must lie between 1 and the operator order");
  if (r == m) return {p.canonical()};
  int B = opt.degree_bound >= 0 ? opt.degree_bound : max_coeff_degree(p) + r;
  std::vector<LinearOperatorEq> cands;
  if (r == 1) {
    for (const RatFun& s : hyper_solutions(p, B, opt.max_candidates))
      cands.push_back(LinearOperatorEq(p.var, p.kind, {-s, RatFun(1)}).canonical());
  } else {
    cands = exterior_factors(p, r, B, opt.max_candidates);
  }
  std::vector<LinearOperatorEq> out;
  for (auto& q : cands) {
    bool dup = false;
    for (auto& o : out) dup = dup || o.same_as(q);
    if (dup || !right_divides(q, p)) continue;
    bool small = true;
    for (auto& c : q.poly_coeffs()) small = small && (c.is_zero() || c.total_degree() <= B);
    if (small) out.push_back(q);
  }
  std::sort(out.begin(), out.end(), [](const LinearOperatorEq& a, const LinearOperatorEq& b) { return a.str() < b.str(); });
  return out;
}

}  // namespace holo
