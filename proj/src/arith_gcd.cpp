#include <algorithm>

#include "holo/arith.hpp"

namespace holo {

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::Internal, "division by zero polynomial");
  if (b.is_constant()) return a.scale(1 / b.constant_value());
  Poly q, r = a;
  while (!r.is_zero()) {
    if (!b.lm().divides(r.lm())) return std::nullopt;
    Monomial t = r.lm() / b.lm();
    Rat c = r.lc() / b.lc();
    q += Poly::monomial(t, c);
    r -= b.mul_term(t, c);
  }
  return q;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorKind::Internal, "inexact division of " + a.str() + " by " + b.str());
  return *q;
}

Poly prem(const Poly& a, const Poly& b, VarId v) {
  int db = b.degree(v);
  Poly lb = b.lc_in(v);
  Poly r = a;
  while (!r.is_zero() && r.degree(v) >= db) {
    int dr = r.degree(v);
    Poly lr = r.lc_in(v);
    r = r * lb - (lr * b).mul_term(Monomial::of(v, dr - db), Rat(1));
  }
  return r;
}

namespace {

Poly content_in(const Poly& p, VarId v) {
  Poly g;
  for (auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : poly_gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly primpart_in(const Poly& p, VarId v) {
  Poly c = content_in(p, v);
  return c.is_constant() ? p.primitive() : divide_exact(p, c).primitive();
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  auto va = a.variables(), vb = b.variables();
  std::vector<VarId> shared;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
  if (shared.empty()) return Poly(1);
  if (a.size() <= b.size()) {
    if (auto q = try_divide(b, a)) return a.primitive();
  } else if (auto q = try_divide(a, b)) {
    return b.primitive();
  }
  VarId v = shared.front();
  int best = -1;
  for (VarId s : shared) {
    int d = std::min(a.degree(s), b.degree(s));
    if (best < 0 || d < best) {
      best = d;
      v = s;
    }
  }
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly pa = ca.is_constant() ? a : divide_exact(a, ca);
  Poly pb = cb.is_constant() ? b : divide_exact(b, cb);
  Poly c = poly_gcd(ca, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Poly g;
  while (true) {
    if (pb.is_zero()) {
      g = primpart_in(pa, v);
      break;
    }
    if (pb.degree(v) == 0) {
      g = Poly(1);
      break;
    }
    Poly r = prem(pa, pb, v);
    pa = pb;
    pb = r.is_zero() ? r : primpart_in(r, v);
  }
  return (c * g).primitive();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return (divide_exact(a, poly_gcd(a, b)) * b).primitive();
}

namespace {
Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  size_t n = m.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Poly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}
}  // namespace

Poly resultant(const Poly& a, const Poly& b, VarId v) {
  auto ca = a.coefficients_in(v), cb = b.coefficients_in(v);
  int da = static_cast<int>(ca.size()) - 1, db = static_cast<int>(cb.size()) - 1;
  if (da < 0 || db < 0) return Poly();
  if (da == 0) return ca[0].pow(db);
  if (db == 0) return cb[0].pow(da);
  int n = da + db;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = ca[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = cb[db - j];
  return bareiss_det(std::move(m));
}

std::vector<std::pair<Poly, int>> squarefree(const Poly& p, VarId v) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree(v) <= 0) return out;
  Poly dp = p.derivative(v);
  Poly b = poly_gcd(p, dp);
  Poly c = divide_exact(p, b);
  Poly d = divide_exact(dp, b) - c.derivative(v);
  for (int i = 1; c.degree(v) > 0; ++i) {
    Poly a = poly_gcd(c, d);
    if (a.degree(v) > 0) out.emplace_back(a.primitive(), i);
    c = divide_exact(c, a);
    d = divide_exact(d, a) - c.derivative(v);
  }
  return out;
}

std::vector<Int> divisors(const Int& n0) {
  Int n = abs(n0);
  std::vector<std::pair<Int, int>> f;
  for (Int p = 2; p * p <= n && p < 2000000; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  std::vector<Int> ds{1};
  for (auto& [p, e] : f) {
    size_t k = ds.size();
    Int pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < k; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace {
// Integer coefficient vector c_0..c_d of a univariate polynomial.
std::vector<Int> int_coeffs(const Poly& p, VarId v) {
  for (VarId w : p.variables())
    if (w != v) throw Error(ErrorKind::Internal, "expected univariate polynomial in " + var_name(v));
  Poly q = p.primitive();
  std::vector<Int> c;
  for (auto& x : q.coefficients_in(v)) c.push_back(x.constant_value().get_num());
  return c;
}

Rat horner(const std::vector<Int>& c, const Rat& x) {
  Rat r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}
}  // namespace

std::vector<Rat> rational_roots(const Poly& p, VarId v) {
  if (p.is_zero()) throw Error(ErrorKind::Internal, "roots of zero polynomial");
  auto c = int_coeffs(p, v);
  std::vector<Rat> out;
  size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) out.push_back(Rat(0));
  c.erase(c.begin(), c.begin() + lo);
  if (c.size() <= 1) return out;
  auto num = divisors(c.front()), den = divisors(c.back());
  std::set<Rat> found;
  for (auto& a : num)
    for (auto& b : den)
      for (int s : {1, -1}) {
        Rat x(a * s, b);
        x.canonicalize();
        if (horner(c, x) == 0) found.insert(x);
      }
  out.insert(out.end(), found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> integer_roots(const Poly& p, VarId v) {
  auto c = int_coeffs(p, v);
  std::vector<Int> out;
  size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) out.push_back(0);
  c.erase(c.begin(), c.begin() + lo);
  if (c.size() <= 1) return out;
  for (auto& a : divisors(c.front()))
    for (int s : {1, -1}) {
      Int x = a * s;
      if (c.back() != 0 && (c.front() % x) == 0 && horner(c, Rat(x)) == 0) out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> common_integer_roots(const Poly& p, VarId v) {
  if (p.is_zero()) throw Error(ErrorKind::Internal, "roots of zero polynomial");
  std::map<Monomial, Poly, MonoLess> slices;
  for (auto& [m, c] : p.terms()) slices[m.without(v)] += Poly::monomial(Monomial::of(v, m.exponent(v)), c);
  Poly g;
  for (auto& [m, s] : slices) g = poly_gcd(g, s);
  if (g.degree(v) <= 0) return {};
  return integer_roots(g, v);
}

std::vector<int> shift_dispersion(const Poly& q, const Poly& r, VarId v) {
  if (q.degree(v) <= 0 || r.degree(v) <= 0) return {};
  VarId h = var("%h");
  Poly res = resultant(q, r.subs(v, Poly::variable(v) + Poly::variable(h)), v);
  std::vector<int> out;
  if (res.is_zero()) return out;
  for (auto& j : common_integer_roots(res, h)) {
    if (j < 0 || !j.fits_sint_p()) continue;
    int jj = static_cast<int>(j.get_si());
    if (poly_gcd(q, r.shift(v, Rat(jj))).degree(v) > 0) out.push_back(jj);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(const Poly& n, const Poly& d) : num_(n), den_(d) {
  if (d.is_zero()) throw Error(ErrorKind::Internal, "rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rat c = den_.content();
  if (c != 1) {
    num_ = num_.scale(1 / c);
    den_ = den_.scale(1 / c);
  }
}

std::set<VarId> RatFun::variables() const {
  auto s = num_.variables();
  auto d = den_.variables();
  s.insert(d.begin(), d.end());
  return s;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Raw{}); }

RatFun RatFun::operator+(const RatFun& o) const {
  if (den_ == o.den_) {
    if (den_.is_constant()) return RatFun(num_ + o.num_, den_, Raw{});
    return RatFun(num_ + o.num_, den_);
  }
  if (den_.is_constant() || o.den_.is_constant()) return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly g = poly_gcd(den_, o.den_);
  Poly a = divide_exact(den_, g), b = divide_exact(o.den_, g);
  return RatFun(num_ * b + o.num_ * a, den_ * b);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun();
  if (den_.is_constant() && o.den_.is_constant()) return RatFun(num_ * o.num_, Poly(1), Raw{});
  Poly g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
  Poly n1 = g1.is_constant() ? num_ : divide_exact(num_, g1);
  Poly d2 = g1.is_constant() ? o.den_ : divide_exact(o.den_, g1);
  Poly n2 = g2.is_constant() ? o.num_ : divide_exact(o.num_, g2);
  Poly d1 = g2.is_constant() ? den_ : divide_exact(den_, g2);
  RatFun r(n1 * n2, d1 * d2, Raw{});
  Rat c = r.den_.content();
  if (c != 1) {
    r.num_ = r.num_.scale(1 / c);
    r.den_ = r.den_.scale(1 / c);
  }
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Internal, "inverse of zero");
  RatFun r(den_, num_, Raw{});
  Rat c = r.den_.content();
  r.num_ = r.num_.scale(1 / c);
  r.den_ = r.den_.scale(1 / c);
  return r;
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFun(num_.pow(e), den_.pow(e), Raw{});
}

RatFun RatFun::derivative(VarId v) const {
  if (den_.is_constant()) return RatFun(num_.derivative(v), den_, Raw{});
  return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

namespace {
RatFun horner_rf(const Poly& p, VarId v, const RatFun& val) {
  auto cs = p.coefficients_in(v);
  RatFun r;
  for (size_t i = cs.size(); i-- > 0;) r = r * val + RatFun(cs[i]);
  return r;
}
}  // namespace

RatFun RatFun::subs(VarId v, const RatFun& val) const {
  if (!has_var(v)) return *this;
  if (val.is_polynomial()) {
    Poly pv = val.num().scale(1 / val.den().constant_value());
    return RatFun(num_.subs(v, pv), den_.subs(v, pv));
  }
  return horner_rf(num_, v, val) / horner_rf(den_, v, val);
}

RatFun RatFun::shift(VarId v, const Rat& h) const {
  if (!has_var(v)) return *this;
  Poly pv = Poly::variable(v) + Poly(h);
  if (den_.is_constant()) return RatFun(num_.subs(v, pv), den_, Raw{});
  return RatFun(num_.subs(v, pv), den_.subs(v, pv));
}

RatFun RatFun::eval(VarId v, const Rat& val) const {
  Poly d = den_.subs(v, Poly(val));
  if (d.is_zero())
    throw Error(ErrorKind::PoleAtExpansionPoint, "denominator " + den_.str() + " vanishes at " + var_name(v) + "=" + rat_str(val));
  return RatFun(num_.subs(v, Poly(val)), d);
}

std::string RatFun::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1 || d.find_first_of("*/") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace holo
