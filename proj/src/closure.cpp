#include "holo/linalg.hpp"
#include "holo/operator_eq.hpp"

namespace holo {

namespace {

using Vec = std::vector<RatFun>;

// Op^r f written in the basis f, Op f, ..., Op^(r-1) f.
Vec reduction_row(const LinearOperatorEq& p) {
  Vec a;
  for (int j = 0; j < p.order(); ++j) a.push_back(-p.coeffs[j] / p.lead());
  return a;
}

RatFun op_coeff(const LinearOperatorEq& p, const RatFun& u) {
  return p.kind == OpKind::N ? u.shift(p.var, Rat(1)) : u;
}

// Op applied to sum_j u_j Op^j f, reduced modulo p.
Vec step_single(const Vec& u, const LinearOperatorEq& p, const Vec& red) {
  int r = p.order();
  Vec out(r + 1);
  for (int j = 0; j < r; ++j) {
    if (u[j].is_zero()) continue;
    if (p.kind == OpKind::D) out[j] += u[j].derivative(p.var);
    out[j + 1] += op_coeff(p, u[j]);
  }
  if (!out[r].is_zero())
    for (int j = 0; j < r; ++j) out[j] += out[r] * red[j];
  out.resize(r);
  return out;
}

// Grid element sum u_ab Op^a f Op^b g (index a*r2 + b), Op applied and reduced.
Vec step_product(const Vec& u, const LinearOperatorEq& p, const LinearOperatorEq& q, const Vec& rp, const Vec& rq) {
  int r1 = p.order(), r2 = q.order();
  std::vector<Vec> g(r1 + 1, Vec(r2 + 1));
  for (int a = 0; a < r1; ++a)
    for (int b = 0; b < r2; ++b) {
      const RatFun& c = u[a * r2 + b];
      if (c.is_zero()) continue;
      if (p.kind == OpKind::D) {
        g[a][b] += c.derivative(p.var);
        g[a + 1][b] += c;
        g[a][b + 1] += c;
      } else {
        g[a + 1][b + 1] += c.shift(p.var, Rat(1));
      }
    }
  for (int b = 0; b <= r2; ++b) {
    if (g[r1][b].is_zero()) continue;
    for (int a = 0; a < r1; ++a) g[a][b] += g[r1][b] * rp[a];
  }
  for (int a = 0; a < r1; ++a) {
    if (g[a][r2].is_zero()) continue;
    for (int b = 0; b < r2; ++b) g[a][b] += g[a][r2] * rq[b];
  }
  Vec out;
  for (int a = 0; a < r1; ++a)
    for (int b = 0; b < r2; ++b) out.push_back(g[a][b]);
  return out;
}

// First linear dependence among the given vectors over the rational-function field.
std::optional<LinearOperatorEq> dependence(const std::vector<Vec>& vs, VarId v, OpKind k) {
  size_t dim = vs.front().size(), m = vs.size();
  PolyMatrix mat(dim, std::vector<Poly>(m));
  std::vector<Poly> scale(m);
  for (size_t i = 0; i < m; ++i) {
    Poly l(1);
    for (auto& e : vs[i])
      if (!e.is_zero()) l = poly_lcm(l, e.den());
    scale[i] = l;
    for (size_t r = 0; r < dim; ++r)
      if (!vs[i][r].is_zero()) mat[r][i] = divide_exact(l, vs[i][r].den()) * vs[i][r].num();
  }
  auto ns = nullspace(mat, m);
  if (ns.empty()) return std::nullopt;
  Vec c;
  for (size_t i = 0; i < m; ++i) c.push_back(RatFun(ns[0][i]) * RatFun(scale[i]));
  return LinearOperatorEq(v, k, std::move(c)).canonical();
}

void check_compatible(const LinearOperatorEq& p, const LinearOperatorEq& q) {
  if (p.var != q.var || p.kind != q.kind) throw Error(ErrorKind::RingMismatch, "closure of equations in different variables");
}

}  // namespace

LinearOperatorEq closure_sum(const LinearOperatorEq& p, const LinearOperatorEq& q) {
  check_compatible(p, q);
  if (p.order() <= 0) return q.canonical();
  if (q.order() <= 0) return p.canonical();
  if (p.same_as(q)) return p.canonical();
  Vec rp = reduction_row(p), rq = reduction_row(q);
  int r1 = p.order(), r2 = q.order();
  Vec u(r1), w(r2);
  u[0] = RatFun(1);
  w[0] = RatFun(1);
  std::vector<Vec> vs;
  for (int m = 0; m <= r1 + r2; ++m) {
    Vec joined = u;
    joined.insert(joined.end(), w.begin(), w.end());
    vs.push_back(joined);
    if (m >= 1)
      if (auto d = dependence(vs, p.var, p.kind)) return *d;
    u = step_single(u, p, rp);
    w = step_single(w, q, rq);
  }
  throw Error(ErrorKind::Internal, "closure_sum: no dependence found");
}

LinearOperatorEq closure_product(const LinearOperatorEq& p, const LinearOperatorEq& q) {
  check_compatible(p, q);
  if (p.order() <= 0 || q.order() <= 0) return LinearOperatorEq(p.var, p.kind, {RatFun(1)});
  Vec rp = reduction_row(p), rq = reduction_row(q);
  int r1 = p.order(), r2 = q.order();
  Vec u(r1 * r2);
  u[0] = RatFun(1);
  std::vector<Vec> vs;
  for (int m = 0; m <= r1 * r2; ++m) {
    vs.push_back(u);
    if (m >= 1)
      if (auto d = dependence(vs, p.var, p.kind)) return *d;
    u = step_product(u, p, q, rp, rq);
  }
  throw Error(ErrorKind::Internal, "closure_product: no dependence found");
}

LinearOperatorEq substitute_rational(const LinearOperatorEq& p, const RatFun& r, VarId x) {
  if (p.kind != OpKind::D) throw Error(ErrorKind::Usage, "substitution needs a differential equation");
  RatFun dr = r.derivative(x);
  if (dr.is_zero()) throw Error(ErrorKind::ConstantSubstitution, "substituted expression " + r.str() + " is constant in " + var_name(x));
  LinearOperatorEq M(x, OpKind::D, {RatFun(), dr.inverse()});
  LinearOperatorEq Mi(x, OpKind::D, {RatFun(1)});
  LinearOperatorEq out(x, OpKind::D, {});
  for (int i = 0; i <= p.order(); ++i) {
    if (i > 0) Mi = compose(M, Mi);
    if (p.coeffs[i].is_zero()) continue;
    out = out + scale_left(p.coeffs[i].subs(p.var, r), Mi);
  }
  return out.canonical();
}

}  // namespace holo
