#include "holo/ore.hpp"

#include <algorithm>
#include <sstream>

#include "holo/parser.hpp"

namespace holo {

namespace {

Rat binom(long n, long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(r);
}

Rat falling(long c, long t) {
  Rat r = 1;
  for (long i = 0; i < t; ++i) r *= c - i;
  return r;
}

Rat rpow(const Rat& b, long e) {
  Rat r = 1;
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

using TermList = std::vector<std::pair<Exps, Rat>>;

// (x^alpha d^beta) * (x^gamma d^delta), normal ordered
TermList mono_mul(const OreRing& r, const Exps& a, const Exps& b) {
  Exps base(a.size());
  for (size_t i = 0; i < a.size(); ++i) base[i] = a[i] + b[i];
  TermList out{{base, Rat(1)}};
  for (size_t i = 0; i < r.num_base(); ++i) {
    int j = r.operator_of(i);
    if (j < 0) continue;
    int be = a[j], ga = b[i];
    if (be == 0 || ga == 0) continue;
    TermList opts;  // exps delta relative to the naive product
    if (r.op_kind(j) == OpKind::D) {
      for (int t = 0; t <= std::min(be, ga); ++t) {
        Exps d(a.size());
        d[i] = -t;
        d[j] = -t;
        opts.push_back({d, binom(be, t) * falling(ga, t)});
      }
    } else {
      for (int s = 0; s <= ga; ++s) {
        Exps d(a.size());
        d[i] = s - ga;
        opts.push_back({d, binom(ga, s) * rpow(Rat(be), ga - s)});
      }
    }
    TermList next;
    for (auto& [e, c] : out)
      for (auto& [d, k] : opts) {
        Exps f = e;
        for (size_t t = 0; t < f.size(); ++t) f[t] += d[t];
        next.push_back({f, c * k});
      }
    out.swap(next);
  }
  return out;
}

std::string compact(const Poly& p) {
  std::string s = p.str(), o;
  for (char c : s)
    if (c != ' ') o += c;
  return o;
}

}  // namespace

OreRing::OreRing(std::vector<std::string> base, std::vector<OpDecl> ops) : nbase_(base.size()), ops_(std::move(ops)) {
  names_ = std::move(base);
  kinds_.assign(names_.size(), 0);
  for (auto& o : ops_) {
    auto it = std::find(names_.begin(), names_.begin() + nbase_, o.base);
    if (it == names_.begin() + nbase_)
      throw Error(ErrorKind::Usage, "operator " + o.name + " acts on undeclared variable " + o.base);
    size_t b = it - names_.begin();
    if (std::find(op_base_.begin(), op_base_.end(), b) != op_base_.end())
      throw Error(ErrorKind::Usage, "two operators act on " + o.base);
    op_base_.push_back(b);
  }
  for (auto& o : ops_) {
    if (std::find(names_.begin(), names_.end(), o.name) != names_.end())
      throw Error(ErrorKind::Usage, "duplicate generator " + o.name);
    names_.push_back(o.name);
    kinds_.push_back(o.kind == OpKind::D ? 1 : 2);
  }
}

int OreRing::index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int OreRing::operator_of(size_t base) const {
  for (size_t j = 0; j < op_base_.size(); ++j)
    if (op_base_[j] == base) return static_cast<int>(nbase_ + j);
  return -1;
}

RingPtr make_ring(std::vector<std::string> base, std::vector<OpDecl> ops) {
  return std::make_shared<const OreRing>(std::move(base), std::move(ops));
}

OrePoly::OrePoly(RingPtr r, const Rat& c) : ring_(std::move(r)) {
  if (c != 0) t_[Exps(ring_->size())] = c;
}

OrePoly OrePoly::generator(RingPtr r, const std::string& name) {
  int i = r->index(name);
  if (i < 0) throw Error(ErrorKind::Usage, "unknown generator " + name);
  Exps e(r->size());
  e[i] = 1;
  return monomial(std::move(r), e, 1);
}

OrePoly OrePoly::monomial(RingPtr r, Exps e, const Rat& c) {
  OrePoly p(std::move(r));
  p.add_term(e, c);
  return p;
}

void OrePoly::add_term(const Exps& e, const Rat& c) {
  if (c == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) t_.erase(it);
}

static void same_ring(const OrePoly& a, const OrePoly& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw Error(ErrorKind::RingMismatch, "operands live in different Ore algebras");
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
  same_ring(*this, o);
  OrePoly r = ring_ ? *this : OrePoly(o.ring_);
  for (auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

OrePoly OrePoly::operator-() const { return scale(-1); }
OrePoly OrePoly::operator-(const OrePoly& o) const { return *this + (-o); }

OrePoly OrePoly::scale(const Rat& c) const {
  OrePoly r(ring_);
  if (c == 0) return r;
  for (auto& [e, k] : t_) r.t_.emplace(e, k * c);
  return r;
}

OrePoly OrePoly::operator*(const OrePoly& o) const { return nc_mul(*this, o); }

int OrePoly::degree(size_t i) const {
  int d = 0;
  for (auto& [e, c] : t_) d = std::max(d, e[i]);
  return d;
}

OrePoly OrePoly::primitive() const {
  if (t_.empty()) return *this;
  Int g = 0, l = 1;
  for (auto& [e, c] : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return scale(Rat(l, g));
}

OrePoly nc_mul(const OrePoly& a, const OrePoly& b) {
  same_ring(a, b);
  const RingPtr& r = a.ring() ? a.ring() : b.ring();
  OrePoly out(r);
  for (auto& [ea, ca] : a.terms())
    for (auto& [eb, cb] : b.terms())
      for (auto& [e, c] : mono_mul(*r, ea, eb)) out.add_term(e, ca * cb * c);
  return out;
}

OrePoly mul_monomial_left(const Exps& m, const OrePoly& p) {
  OrePoly out(p.ring());
  for (auto& [e, c] : p.terms())
    for (auto& [f, k] : mono_mul(*p.ring(), m, e)) out.add_term(f, c * k);
  return out;
}

std::string OrePoly::str() const {
  if (t_.empty()) return "0";
  const OreRing& r = *ring_;
  // group by operator part
  std::map<Exps, Poly> groups;
  for (auto& [e, c] : t_) {
    Exps op(e.begin() + r.num_base(), e.end());
    Monomial m;
    for (size_t i = 0; i < r.num_base(); ++i)
      if (e[i]) m = m * Monomial::of(var(r.name(i)), e[i]);
    groups[op] += Poly::monomial(m, c);
  }
  std::vector<std::pair<Exps, Poly>> g(groups.begin(), groups.end());
  std::stable_sort(g.begin(), g.end(), [](auto& a, auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::vector<std::pair<bool, std::string>> parts;  // negative, body
  for (auto& [op, coef] : g) {
    std::string os;
    for (size_t j = 0; j < op.size(); ++j) {
      if (!op[j]) continue;
      if (!os.empty()) os += "*";
      os += r.name(r.num_base() + j);
      if (op[j] > 1) os += "^" + std::to_string(op[j]);
    }
    if (os.empty()) {
      for (auto& [m, c] : coef.terms()) {
        Poly t = Poly::monomial(m, c < 0 ? Rat(-c) : c);
        parts.push_back({c < 0, compact(t)});
      }
      continue;
    }
    bool neg = coef.canonical_lc() < 0;
    Poly a = neg ? -coef : coef;
    std::string cs;
    if (a.is_constant()) {
      Rat v = a.constant_value();
      cs = v == 1 ? "" : v.get_str() + "*";
    } else if (a.size() == 1) {
      cs = compact(a) + "*";
    } else {
      cs = "(" + compact(a) + ")*";
    }
    parts.push_back({neg, cs + os});
  }
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i == 0)
      s = (parts[i].first ? "-" : "") + parts[i].second;
    else
      s += (parts[i].first ? " - " : " + ") + parts[i].second;
  }
  return s;
}

// ---------------------------------------------------------------- orders

TermOrder TermOrder::lex(const OreRing& r, const std::vector<std::string>& names) {
  TermOrder o;
  o.kind = Lex;
  std::vector<bool> seen(r.size());
  for (auto& n : names) {
    int i = r.index(n);
    if (i < 0) throw Error(ErrorKind::InadmissibleOrder, "term order names unknown generator " + n);
    if (seen[i]) throw Error(ErrorKind::InadmissibleOrder, "term order lists " + n + " twice");
    seen[i] = true;
    o.perm.push_back(i);
  }
  for (size_t i = 0; i < r.size(); ++i)
    if (!seen[i]) o.perm.push_back(i);
  o.weight.assign(r.size(), 0);
  return o;
}

TermOrder TermOrder::weighted(const OreRing& r, const std::vector<long>& w, const std::vector<std::string>& names) {
  if (w.size() != names.size())
    throw Error(ErrorKind::InadmissibleOrder, "weighted order needs one weight per listed generator");
  TermOrder o = lex(r, names);
  o.kind = Weighted;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) throw Error(ErrorKind::InadmissibleOrder, "negative weight for " + names[i] + " is not well-founded");
    o.weight[o.perm[i]] = w[i];
  }
  return o;
}

TermOrder TermOrder::parse(const OreRing& r, const std::string& spec) {
  auto split = [](const std::string& s, char d) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string x;
    while (std::getline(ss, x, d)) {
      x.erase(0, x.find_first_not_of(' '));
      x.erase(x.find_last_not_of(' ') + 1);
      if (!x.empty()) out.push_back(x);
    }
    return out;
  };
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "lex") return lex(r, split(parts[1], ','));
  if (parts.size() == 3 && parts[0] == "weighted") {
    std::vector<long> w;
    for (auto& x : split(parts[1], ',')) {
      try {
        w.push_back(std::stol(x));
      } catch (...) {
        throw Error(ErrorKind::InadmissibleOrder, "bad weight '" + x + "'");
      }
    }
    return weighted(r, w, split(parts[2], ','));
  }
  throw Error(ErrorKind::InadmissibleOrder, "term order must be lex:<gens> or weighted:<weights>:<gens>, got '" + spec + "'");
}

bool TermOrder::greater(const Exps& a, const Exps& b) const {
  if (kind == Weighted) {
    long wa = 0, wb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      wa += weight[i] * a[i];
      wb += weight[i] * b[i];
    }
    if (wa != wb) return wa > wb;
  }
  for (size_t i : perm)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Exps leading_exps(const OrePoly& p, const TermOrder& o) {
  const Exps* best = nullptr;
  for (auto& [e, c] : p.terms())
    if (!best || o.greater(e, *best)) best = &e;
  if (!best) throw Error(ErrorKind::Internal, "leading monomial of zero");
  return *best;
}

Rat leading_coeff(const OrePoly& p, const TermOrder& o) { return p.terms().at(leading_exps(p, o)); }

// ---------------------------------------------------------------- conversions

namespace {

OrePoly from_poly(RingPtr r, const Poly& p, int extra_index = -1, int extra_exp = 0) {
  OrePoly out(r);
  for (auto& [m, c] : p.terms()) {
    Exps e(r->size());
    for (auto& [v, k] : m.powers()) {
      int i = r->index(var_name(v));
      if (i < 0) throw Error(ErrorKind::RingMismatch, "variable " + var_name(v) + " is not a generator of the ring");
      e[i] += k;
    }
    if (extra_index >= 0) e[extra_index] += extra_exp;
    out.add_term(e, c);
  }
  return out;
}

}  // namespace

OrePoly parse_ore(RingPtr r, const std::string& text) {
  auto rf = to_ratfun(parse(text));
  if (!rf || !rf->is_polynomial()) throw Error(ErrorKind::Syntax, "operator '" + text + "' is not a polynomial");
  return from_poly(r, rf->num().scale(1 / rf->den().constant_value()));
}

OrePoly lift_to_ore(const LinearOperatorEq& e, RingPtr r) {
  int b = r->index(var_name(e.var));
  if (b < 0 || r->is_operator(b)) throw Error(ErrorKind::RingMismatch, "ring lacks base variable " + var_name(e.var));
  int op = r->operator_of(b);
  if (op < 0 || r->op_kind(op) != e.kind)
    throw Error(ErrorKind::RingMismatch, "ring lacks the operator acting on " + var_name(e.var));
  auto pc = e.canonical().poly_coeffs();
  OrePoly out(r);
  for (size_t i = 0; i < pc.size(); ++i) out = out + from_poly(r, pc[i], op, static_cast<int>(i));
  return out.primitive();
}

LinearOperatorEq to_operator_eq(const OrePoly& p, const std::string& op) {
  const OreRing& r = *p.ring();
  int j = r.index(op);
  if (j < 0 || !r.is_operator(j)) throw Error(ErrorKind::Usage, op + " is not an operator of the ring");
  std::vector<Poly> cs(p.degree(j) + 1);
  for (auto& [e, c] : p.terms()) {
    Monomial m;
    for (size_t i = 0; i < r.size(); ++i) {
      if (!e[i] || static_cast<int>(i) == j) continue;
      if (r.is_operator(i)) throw Error(ErrorKind::Usage, "operator " + r.name(i) + " still present");
      m = m * Monomial::of(var(r.name(i)), e[i]);
    }
    cs[e[j]] += Poly::monomial(m, c);
  }
  std::vector<RatFun> rc;
  for (auto& c : cs) rc.push_back(RatFun(c));
  return LinearOperatorEq(var(r.name(r.op_base(j))), r.op_kind(j), rc);
}

OrePoly substitute_operator(const OrePoly& p, const std::string& op, const Rat& value) {
  int j = p.ring()->index(op);
  if (j < 0 || !p.ring()->is_operator(j)) throw Error(ErrorKind::Usage, op + " is not an operator of the ring");
  OrePoly out(p.ring());
  for (auto& [e, c] : p.terms()) {
    Exps f = e;
    f[j] = 0;
    out.add_term(f, c * rpow(value, e[j]));
  }
  return out;
}

// ---------------------------------------------------------------- actions

RatFun apply(const OrePoly& p, const Table& f, const std::map<std::string, long>& at) {
  const OreRing& r = *p.ring();
  RatFun acc;
  for (auto& [e, c] : p.terms()) {
    auto pt = at;
    for (size_t j = r.num_base(); j < r.size(); ++j)
      if (e[j] && r.op_kind(j) == OpKind::N) {
        const std::string& b = r.name(r.op_base(j));
        if (!pt.count(b)) throw Error(ErrorKind::Usage, "no index value for " + b);
        pt[b] += e[j];
      }
    RatFun v = f(pt);
    for (size_t j = r.num_base(); j < r.size(); ++j)
      if (e[j] && r.op_kind(j) == OpKind::D)
        for (int t = 0; t < e[j]; ++t) v = v.derivative(var(r.name(r.op_base(j))));
    for (size_t i = 0; i < r.num_base(); ++i) {
      if (!e[i]) continue;
      auto it = at.find(r.name(i));
      RatFun b = it != at.end() ? RatFun(Rat(it->second)) : RatFun::variable(r.name(i));
      v *= b.pow(e[i]);
    }
    acc += v * RatFun(c);
  }
  return acc;
}

Series apply(const OrePoly& p, const SeriesPrefix& s) {
  const OreRing& r = *p.ring();
  if (s.discrete) throw Error(ErrorKind::Usage, "series action needs a continuous prefix");
  int b = r.index(var_name(s.var));
  if (b < 0) throw Error(ErrorKind::RingMismatch, "ring lacks " + var_name(s.var));
  int maxd = 0;
  for (auto& [e, c] : p.terms())
    for (size_t j = r.num_base(); j < r.size(); ++j) {
      if (!e[j]) continue;
      if (r.op_kind(j) != OpKind::D || static_cast<int>(r.op_base(j)) != b)
        throw Error(ErrorKind::Usage, "operator " + r.name(j) + " does not act on " + var_name(s.var));
      maxd = std::max(maxd, e[j]);
    }
  int L = s.depth() - maxd + 1;
  if (L <= 0) throw Error(ErrorKind::InsufficientDepth, "prefix too short for operator order " + std::to_string(maxd));
  Series out(L);
  Series xs(L);
  xs[0] = RatFun(s.point);
  if (L > 1) xs[1] = RatFun(1);
  for (auto& [e, c] : p.terms()) {
    int d = 0;
    for (size_t j = r.num_base(); j < r.size(); ++j) d += e[j];
    Series t(L);
    for (int m = 0; m < L; ++m) t[m] = s.a[m + d] * RatFun(falling(m + d, d));
    RatFun k(c);
    for (size_t i = 0; i < r.num_base(); ++i) {
      if (!e[i]) continue;
      if (static_cast<int>(i) == b)
        for (int q = 0; q < e[i]; ++q) t = series_mul(t, xs);
      else
        k *= RatFun::variable(r.name(i)).pow(e[i]);
    }
    for (int m = 0; m < L; ++m) out[m] += t[m] * k;
  }
  return out;
}

}  // namespace holo
