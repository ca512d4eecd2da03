#pragma once
// Normal-ordered polynomials in base variables and D/shift operators.
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "holo/operator_eq.hpp"
#include "holo/series.hpp"

namespace holo {

struct OpDecl {
  std::string name;
  OpKind kind;       // D: d/d base, N: base -> base + 1
  std::string base;  // the base variable it acts on
};

class OreRing {
 public:
  // Generator order: base variables, then operators, as declared.
  OreRing(std::vector<std::string> base, std::vector<OpDecl> ops);

  size_t size() const { return names_.size(); }
  size_t num_base() const { return nbase_; }
  const std::string& name(size_t i) const { return names_[i]; }
  bool is_operator(size_t i) const { return i >= nbase_; }
  OpKind op_kind(size_t i) const { return ops_[i - nbase_].kind; }
  size_t op_base(size_t i) const { return op_base_[i - nbase_]; }
  // -1 if absent
  int index(const std::string& name) const;
  // operator acting on base variable i, or -1
  int operator_of(size_t base) const;
  bool operator==(const OreRing& o) const { return names_ == o.names_ && kinds_ == o.kinds_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> kinds_;
  size_t nbase_;
  std::vector<OpDecl> ops_;
  std::vector<size_t> op_base_;
};

using RingPtr = std::shared_ptr<const OreRing>;
RingPtr make_ring(std::vector<std::string> base, std::vector<OpDecl> ops);

using Exps = std::vector<int>;

class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(RingPtr r) : ring_(std::move(r)) {}
  OrePoly(RingPtr r, const Rat& c);
  static OrePoly generator(RingPtr r, const std::string& name);
  static OrePoly monomial(RingPtr r, Exps e, const Rat& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Exps, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const OrePoly& o) const { return t_ == o.t_; }
  bool operator!=(const OrePoly& o) const { return !(*this == o); }

  OrePoly operator+(const OrePoly& o) const;
  OrePoly operator-(const OrePoly& o) const;
  OrePoly operator-() const;
  OrePoly scale(const Rat& c) const;
  OrePoly operator*(const OrePoly& o) const;  // normal-ordered product

  void add_term(const Exps& e, const Rat& c);
  // Highest exponent of generator i.
  int degree(size_t i) const;
  bool involves(size_t i) const { return degree(i) > 0; }
  // Integer coefficients with gcd 1.
  OrePoly primitive() const;

  // Base-variables-first text, operator monomials by descending degree.
  std::string str() const;

 private:
  RingPtr ring_;
  std::map<Exps, Rat> t_;
};

OrePoly nc_mul(const OrePoly& a, const OrePoly& b);
// Product of a normal-ordered monomial (left) with p.
OrePoly mul_monomial_left(const Exps& m, const OrePoly& p);

// Monomial orders on all generators.
struct TermOrder {
  enum Kind { Lex, Weighted } kind = Lex;
  std::vector<size_t> perm;  // generator indices, highest priority first
  std::vector<long> weight;  // per generator (Weighted)

  // Throws InadmissibleOrder unless this is a well-founded monomial order.
  static TermOrder lex(const OreRing& r, const std::vector<std::string>& names);
  static TermOrder weighted(const OreRing& r, const std::vector<long>& w, const std::vector<std::string>& names);
  // "lex:k,N,n,K" or "weighted:3,1,0,0:x,N,n,D"
  static TermOrder parse(const OreRing& r, const std::string& spec);

  // a > b
  bool greater(const Exps& a, const Exps& b) const;
};

Exps leading_exps(const OrePoly& p, const TermOrder& o);
Rat leading_coeff(const OrePoly& p, const TermOrder& o);

// Text in normal-ordered form; products are read with base variables left of operators.
OrePoly parse_ore(RingPtr r, const std::string& text);

// Denominators cleared, content removed.
OrePoly lift_to_ore(const LinearOperatorEq& e, RingPtr r);
// Back to an ordinary equation in the single operator op; every other operator must be absent.
LinearOperatorEq to_operator_eq(const OrePoly& p, const std::string& op);
// Set operator op to a constant (K = 1, D = 0). The operator sits rightmost in normal order.
OrePoly substitute_operator(const OrePoly& p, const std::string& op, const Rat& value);

// Action on data. A table gives f at integer values of the discrete variables as a rational
// function of the continuous ones.
using Table = std::function<RatFun(const std::map<std::string, long>&)>;
RatFun apply(const OrePoly& p, const Table& f, const std::map<std::string, long>& at);
// Action on a power series in one continuous base variable; other base variables stay symbolic.
Series apply(const OrePoly& p, const SeriesPrefix& s);

}  // namespace holo
