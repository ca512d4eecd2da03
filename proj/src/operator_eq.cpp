#include "holo/operator_eq.hpp"

#include <algorithm>

#include "holo/linalg.hpp"

namespace holo {

namespace {
void trim(std::vector<RatFun>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::string compact(std::string s) {
  std::string r;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != ' ') r += s[i];
  return r;
}

Rat binom(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(r);
}
}  // namespace

LinearOperatorEq::LinearOperatorEq(VarId v, OpKind k, std::vector<RatFun> c) : var(v), kind(k), coeffs(std::move(c)) {
  trim(coeffs);
}

std::vector<Poly> LinearOperatorEq::poly_coeffs() const {
  auto p = primitive_vector(coeffs);
  Rat c = 0;
  for (auto& x : p) {
    if (x.is_zero()) continue;
    Rat k = x.content();
    if (k < 0) k = -k;
    if (c == 0) {
      c = k;
    } else {
      Int g, l;
      mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), k.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), c.get_den_mpz_t(), k.get_den_mpz_t());
      c = Rat(g, l);
      c.canonicalize();
    }
  }
  if (c != 0 && c != 1)
    for (auto& x : p) x = x.scale(1 / c);
  if (!p.empty() && p.back().canonical_lc() < 0)
    for (auto& x : p) x = -x;
  return p;
}

LinearOperatorEq LinearOperatorEq::canonical() const {
  std::vector<RatFun> c;
  for (auto& p : poly_coeffs()) c.emplace_back(p);
  return LinearOperatorEq(var, kind, std::move(c));
}

LinearOperatorEq LinearOperatorEq::normalized() const {
  Poly l(1);
  for (auto& c : coeffs)
    if (!c.is_zero()) l = poly_lcm(l, c.den());
  std::vector<Poly> p;
  for (auto& c : coeffs) p.push_back(c.is_zero() ? Poly() : divide_exact(l, c.den()) * c.num());
  Poly all;
  for (size_t i = 0; i < p.size(); ++i) all += p[i].mul_term(Monomial::of(holo::var("%normalize"), static_cast<int>(i)), Rat(1));
  Rat k = all.content();
  if (!p.empty() && p.back().canonical_lc() * k < 0) k = -k;
  std::vector<RatFun> out;
  for (auto& x : p) out.emplace_back(x.scale(1 / k));
  return LinearOperatorEq(var, kind, std::move(out));
}

bool LinearOperatorEq::same_as(const LinearOperatorEq& o) const {
  if (var != o.var || kind != o.kind || order() != o.order()) return false;
  return poly_coeffs() == o.poly_coeffs();
}

bool LinearOperatorEq::same_up_to_shift(const LinearOperatorEq& o) const {
  if (same_as(o)) return true;
  if (kind != OpKind::N || o.kind != OpKind::N || var != o.var || order() != o.order()) return false;
  for (int j = -6; j <= 6; ++j)
    if (j != 0 && same_as(shift_equation(o, Rat(j)))) return true;
  return false;
}

RatFun LinearOperatorEq::apply(const RatFun& f) const {
  RatFun r, d = f;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) r += coeffs[i] * d;
    if (i + 1 < coeffs.size()) d = kind == OpKind::D ? d.derivative(var) : d.shift(var, Rat(1));
  }
  return r;
}

std::string LinearOperatorEq::str(const std::string& fname) const {
  std::string f = fname.empty() ? (kind == OpKind::D ? "F" : "a") : fname;
  const std::string& v = var_name(var);
  auto sym = [&](int i) {
    if (kind == OpKind::N) return f + "(" + v + (i ? "+" + std::to_string(i) : "") + ")";
    if (i <= 3) return f + std::string(i, '\'');
    return f + "^(" + std::to_string(i) + ")";
  };
  std::vector<Poly> pc;
  for (auto& c : coeffs) {
    if (!c.is_polynomial()) {
      pc = poly_coeffs();
      break;
    }
  }
  if (pc.empty())
    for (auto& c : coeffs) pc.push_back(c.num());
  std::string out;
  for (size_t i = 0; i < pc.size(); ++i) {
    Poly c = pc[i];
    if (c.is_zero()) continue;
    bool neg = c.canonical_lc() < 0;
    if (neg) c = -c;
    std::string term;
    if (c.is_constant() && c.constant_value() == 1)
      term = sym(static_cast<int>(i));
    else if (c.size() == 1)
      term = compact(c.str()) + "*" + sym(static_cast<int>(i));
    else
      term = "(" + compact(c.str()) + ")*" + sym(static_cast<int>(i));
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

LinearOperatorEq scale_left(const RatFun& r, const LinearOperatorEq& a) {
  std::vector<RatFun> c;
  for (auto& x : a.coeffs) c.push_back(r * x);
  return LinearOperatorEq(a.var, a.kind, std::move(c));
}

LinearOperatorEq operator+(const LinearOperatorEq& a, const LinearOperatorEq& b) {
  if (a.var != b.var || a.kind != b.kind) throw Error(ErrorKind::RingMismatch, "operator sum over different variables");
  std::vector<RatFun> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return LinearOperatorEq(a.var, a.kind, std::move(c));
}

LinearOperatorEq compose(const LinearOperatorEq& a, const LinearOperatorEq& b) {
  if (a.var != b.var || a.kind != b.kind) throw Error(ErrorKind::RingMismatch, "operator product over different variables");
  if (a.coeffs.empty() || b.coeffs.empty()) return LinearOperatorEq(a.var, a.kind, {});
  std::vector<RatFun> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      if (b.coeffs[j].is_zero()) continue;
      if (a.kind == OpKind::N) {
        c[i + j] += a.coeffs[i] * b.coeffs[j].shift(a.var, Rat(static_cast<long>(i)));
      } else {
        RatFun d = b.coeffs[j];
        for (size_t l = 0; l <= i; ++l) {
          if (d.is_zero()) break;
          c[i + j - l] += a.coeffs[i] * RatFun(binom(static_cast<int>(i), static_cast<int>(l))) * d;
          d = d.derivative(a.var);
        }
      }
    }
  }
  return LinearOperatorEq(a.var, a.kind, std::move(c));
}

std::pair<LinearOperatorEq, LinearOperatorEq> divide_right(const LinearOperatorEq& p, const LinearOperatorEq& b) {
  if (b.coeffs.empty()) throw Error(ErrorKind::Internal, "division by zero operator");
  int rb = b.order();
  std::vector<RatFun> q(std::max(p.order() - rb + 1, 0));
  LinearOperatorEq r = p;
  while (r.order() >= rb) {
    int d = r.order() - rb;
    RatFun lb = p.kind == OpKind::N ? b.lead().shift(b.var, Rat(d)) : b.lead();
    RatFun t = r.lead() / lb;
    q[d] += t;
    std::vector<RatFun> mono(d + 1);
    mono[d] = t;
    LinearOperatorEq sub = compose(LinearOperatorEq(p.var, p.kind, mono), b);
    std::vector<RatFun> c = r.coeffs;
    for (size_t i = 0; i < sub.coeffs.size(); ++i) c[i] -= sub.coeffs[i];
    c.back() = RatFun();  // exact cancellation of the leading term
    r = LinearOperatorEq(p.var, p.kind, std::move(c));
  }
  return {LinearOperatorEq(p.var, p.kind, std::move(q)), r};
}

bool right_divides(const LinearOperatorEq& b, const LinearOperatorEq& p) { return divide_right(p, b).second.coeffs.empty(); }

LinearOperatorEq shift_equation(const LinearOperatorEq& p, const Rat& h) {
  std::vector<RatFun> c;
  for (auto& x : p.coeffs) c.push_back(x.shift(p.var, h));
  return LinearOperatorEq(p.var, p.kind, std::move(c));
}

namespace {
// Falling factorial ff(a, i) = a (a-1) ... (a-i+1) as a polynomial.
Poly falling(const Poly& a, int i) {
  Poly r(1);
  for (int k = 0; k < i; ++k) r *= a - Poly(k);
  return r;
}
}  // namespace

LinearOperatorEq de_to_re(const LinearOperatorEq& p, VarId n) {
  if (p.kind != OpKind::D) throw Error(ErrorKind::Usage, "de_to_re expects a differential equation");
  auto pc = p.poly_coeffs();
  VarId x = p.var;
  int dmin = 1 << 30, dmax = -(1 << 30);
  std::vector<std::vector<Poly>> cx;  // cx[i][j]: coefficient of x^j in p_i
  for (auto& c : pc) {
    cx.push_back(c.coefficients_in(x));
  }
  for (size_t i = 0; i < cx.size(); ++i)
    for (size_t j = 0; j < cx[i].size(); ++j)
      if (!cx[i][j].is_zero()) {
        int d = static_cast<int>(i) - static_cast<int>(j);
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
      }
  std::vector<RatFun> out(dmax - dmin + 1);
  Poly nn = Poly::variable(n);
  for (size_t i = 0; i < cx.size(); ++i)
    for (size_t j = 0; j < cx[i].size(); ++j) {
      if (cx[i][j].is_zero()) continue;
      int d = static_cast<int>(i) - static_cast<int>(j);
      int e = d - dmin;
      out[e] += RatFun(cx[i][j] * falling(nn + Poly(e), static_cast<int>(i)));
    }
  return LinearOperatorEq(n, OpKind::N, std::move(out));
}

LinearOperatorEq homogenize(const LinearOperatorEq& p, const RatFun& rhs) {
  if (rhs.is_zero()) return p;
  if (p.kind == OpKind::D) {
    LinearOperatorEq m(p.var, OpKind::D, {-rhs.derivative(p.var), rhs});
    return compose(m, p).canonical();
  }
  LinearOperatorEq m(p.var, OpKind::N, {-rhs.shift(p.var, Rat(1)), rhs});
  return compose(m, p).canonical();
}

LinearOperatorEq re_to_de(const LinearOperatorEq& p, VarId x) {
  if (p.kind != OpKind::N) throw Error(ErrorKind::Usage, "re_to_de expects a recurrence equation");
  auto pc = p.poly_coeffs();
  VarId n = p.var;
  int R = static_cast<int>(pc.size()) - 1;
  RatFun X = RatFun(Poly::variable(x));
  LinearOperatorEq theta(x, OpKind::D, {RatFun(), X});
  LinearOperatorEq L(x, OpKind::D, {});
  int gdeg = -1;
  for (int i = 0; i <= R; ++i) {
    if (pc[i].is_zero()) continue;
    // c_i(theta - i) by Horner
    auto cs = pc[i].coefficients_in(n);
    LinearOperatorEq T = theta + LinearOperatorEq(x, OpKind::D, {RatFun(Rat(-i))});
    LinearOperatorEq acc(x, OpKind::D, {});
    for (size_t k = cs.size(); k-- > 0;) {
      acc = compose(acc, T);
      acc = acc + LinearOperatorEq(x, OpKind::D, {RatFun(cs[k])});
    }
    L = L + scale_left(X.pow(R - i), acc);
    for (int m = 0; m < i; ++m)
      if (!pc[i].subs(n, Poly(m - i)).is_zero()) gdeg = std::max(gdeg, m + R - i);
  }
  if (gdeg >= 0) {
    std::vector<RatFun> dpow(gdeg + 2);
    dpow.back() = RatFun(1);
    L = compose(LinearOperatorEq(x, OpKind::D, dpow), L);
  }
  return L.canonical();
}

}  // namespace holo
