#pragma once
// Exact arithmetic: rationals, sparse multivariate polynomials, rational functions.
#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holo/error.hpp"

namespace holo {

using Int = mpz_class;
using Rat = mpq_class;

using VarId = int;

// Indeterminates are interned process-wide by name.
VarId var(const std::string& name);
const std::string& var_name(VarId v);
bool var_less_by_name(VarId a, VarId b);

std::string rat_str(const Rat& r);

class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId v, int e = 1);

  int degree() const { return deg_; }
  int exponent(VarId v) const;
  bool is_one() const { return e_.empty(); }
  const std::vector<std::pair<VarId, int>>& powers() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides
  Monomial lcm(const Monomial& o) const;
  Monomial without(VarId v) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  // Internal graded order (id based); true if *this ranks above o.
  bool grlex_greater(const Monomial& o) const;
  // Name based graded order, used for printing and sign normalization.
  bool name_greater(const Monomial& o) const;

  std::string str() const;

 private:
  std::vector<std::pair<VarId, int>> e_;  // sorted by VarId, exponents > 0
  int deg_ = 0;
};

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return b.grlex_greater(a); }
};

class Poly {
 public:
  using Term = std::pair<Monomial, Rat>;

  Poly() = default;
  Poly(long c);
  Poly(const Rat& c);
  Poly(const Int& c) : Poly(Rat(c)) {}
  static Poly variable(VarId v);
  static Poly variable(const std::string& name) { return variable(var(name)); }
  static Poly monomial(const Monomial& m, const Rat& c);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  Rat constant_value() const;  // requires is_constant
  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }

  const Monomial& lm() const { return t_.front().first; }
  const Rat& lc() const { return t_.front().second; }
  // Leading coefficient under the name-based order.
  Rat canonical_lc() const;
  Rat coefficient(const Monomial& m) const;

  int total_degree() const;
  int degree(VarId v) const;
  std::set<VarId> variables() const;
  bool has_var(VarId v) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scale(const Rat& c) const;
  Poly mul_term(const Monomial& m, const Rat& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(VarId v) const;
  Poly subs(VarId v, const Poly& val) const;
  Poly subs(const std::map<VarId, Poly>& vals) const;
  Poly shift(VarId v, const Rat& h) const { return subs(v, variable(v) + Poly(h)); }
  Rat eval(const std::map<VarId, Rat>& vals) const;  // all variables must be bound

  // Coefficients of v^0..v^d as polynomials in the remaining variables.
  std::vector<Poly> coefficients_in(VarId v) const;
  static Poly from_coefficients(VarId v, const std::vector<Poly>& cs);
  Poly lc_in(VarId v) const;

  // Rational content (gcd of numerators / lcm of denominators), sign from canonical_lc.
  Rat content() const;
  Poly primitive() const;  // integer coefficients, content 1, canonical_lc > 0

  std::string str() const;

 private:
  std::vector<Term> t_;  // sorted descending in grlex_greater order, nonzero coefficients
  friend Poly from_sorted(std::vector<Term>&& t);
};

Poly from_sorted(std::vector<Poly::Term>&& t);

// Exact division; throws Error(Internal) if b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);
std::optional<Poly> try_divide(const Poly& a, const Poly& b);
// Pseudo remainder of a by b w.r.t. v.
Poly prem(const Poly& a, const Poly& b, VarId v);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);
Poly resultant(const Poly& a, const Poly& b, VarId v);
// Squarefree factors with multiplicities (primitive parts).
std::vector<std::pair<Poly, int>> squarefree(const Poly& p, VarId v);

// Integer / rational roots of a univariate polynomial with rational coefficients.
std::vector<Int> integer_roots(const Poly& p, VarId v);
std::vector<Rat> rational_roots(const Poly& p, VarId v);
// Integer roots common to every parameter slice of p (p in v and other variables).
std::vector<Int> common_integer_roots(const Poly& p, VarId v);
// Nonnegative j with deg gcd(q(v), r(v+j)) > 0.
std::vector<int> shift_dispersion(const Poly& q, const Poly& r, VarId v);
// Positive divisors of |n| (n != 0).
std::vector<Int> divisors(const Int& n);

class RatFun {
 public:
  RatFun() : num_(0), den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}
  RatFun(const Rat& c) : num_(c), den_(1) {}
  RatFun(const Poly& p) : num_(p), den_(1) {}
  RatFun(const Poly& n, const Poly& d);
  static RatFun variable(const std::string& name) { return RatFun(Poly::variable(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool has_var(VarId v) const { return num_.has_var(v) || den_.has_var(v); }
  std::set<VarId> variables() const;

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  RatFun pow(int e) const;
  RatFun inverse() const;

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun derivative(VarId v) const;
  RatFun subs(VarId v, const RatFun& val) const;
  RatFun shift(VarId v, const Rat& h) const;
  // Throws PoleAtExpansionPoint if the denominator vanishes.
  RatFun eval(VarId v, const Rat& val) const;

  std::string str() const;

 private:
  Poly num_, den_;
  struct Raw {};
  RatFun(const Poly& n, const Poly& d, Raw) : num_(n), den_(d) {}
  void normalize();
};

}  // namespace holo
