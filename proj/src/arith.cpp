#include "holo/arith.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace holo {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownPrimitive: return "UnknownPrimitive";
    case ErrorKind::NonHolonomicInput: return "NonHolonomicInput";
    case ErrorKind::ConstantSubstitution: return "ConstantSubstitution";
    case ErrorKind::InsufficientDepth: return "InsufficientDepth";
    case ErrorKind::PoleAtExpansionPoint: return "PoleAtExpansionPoint";
    case ErrorKind::NotHypergeometric: return "NotHypergeometric";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::ExtendedAlgorithmRequired: return "ExtendedAlgorithmRequired";
    case ErrorKind::InadmissibleOrder: return "InadmissibleOrder";
    case ErrorKind::NoKFreeElement: return "NoKFreeElement";
    case ErrorKind::NoXFreeElement: return "NoXFreeElement";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::NotTwoTerm: return "NotTwoTerm";
    case ErrorKind::DiagnosticAbort: return "DiagnosticAbort";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

namespace {
struct VarTable {
  std::mutex mu;
  std::unordered_map<std::string, VarId> ids;
  std::deque<std::string> names;  // stable references for var_name
};
VarTable& vt() {
  static VarTable t;
  return t;
}
}  // namespace

VarId var(const std::string& name) {
  auto& t = vt();
  std::lock_guard<std::mutex> lk(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  VarId id = static_cast<VarId>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& var_name(VarId v) {
  auto& t = vt();
  std::lock_guard<std::mutex> lk(t.mu);
  return t.names.at(v);
}

bool var_less_by_name(VarId a, VarId b) { return var_name(a) < var_name(b); }

std::string rat_str(const Rat& r) { return r.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, int e) {
  Monomial m;
  if (e > 0) {
    m.e_.emplace_back(v, e);
    m.deg_ = e;
  }
  return m;
}

int Monomial::exponent(VarId v) const {
  for (auto& [id, e] : e_)
    if (id == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
      ++i;
      ++j;
    }
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  size_t j = 0;
  for (auto& [v, e] : e_) {
    while (j < o.e_.size() && o.e_[j].first < v) ++j;
    if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  size_t j = 0;
  for (auto& [v, e] : e_) {
    int d = e;
    if (j < o.e_.size() && o.e_[j].first == v) d -= o.e_[j++].second;
    if (d < 0) throw Error(ErrorKind::Internal, "monomial division");
    if (d > 0) r.e_.emplace_back(v, d);
  }
  if (j != o.e_.size()) throw Error(ErrorKind::Internal, "monomial division");
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < e_.size() || j < o.e_.size()) {
    if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
      r.e_.push_back(e_[i++]);
    } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
      r.e_.push_back(o.e_[j++]);
    } else {
      r.e_.emplace_back(e_[i].first, std::max(e_[i].second, o.e_[j].second));
      ++i;
      ++j;
    }
  }
  for (auto& p : r.e_) r.deg_ += p.second;
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  for (auto& p : e_)
    if (p.first != v) {
      r.e_.push_back(p);
      r.deg_ += p.second;
    }
  return r;
}

bool Monomial::grlex_greater(const Monomial& o) const {
  if (deg_ != o.deg_) return deg_ > o.deg_;
  size_t n = std::min(e_.size(), o.e_.size());
  for (size_t i = 0; i < n; ++i) {
    if (e_[i].first != o.e_[i].first) return e_[i].first < o.e_[i].first;
    if (e_[i].second != o.e_[i].second) return e_[i].second > o.e_[i].second;
  }
  return e_.size() > o.e_.size();
}

bool Monomial::name_greater(const Monomial& o) const {
  if (deg_ != o.deg_) return deg_ > o.deg_;
  auto sorted = [](const std::vector<std::pair<VarId, int>>& e) {
    std::vector<std::pair<std::string, int>> s;
    for (auto& [v, k] : e) s.emplace_back(var_name(v), k);
    std::sort(s.begin(), s.end());
    return s;
  };
  auto a = sorted(e_), b = sorted(o.e_);
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  return a.size() > b.size();
}

std::string Monomial::str() const {
  std::vector<std::pair<std::string, int>> s;
  for (auto& [v, k] : e_) s.emplace_back(var_name(v), k);
  std::sort(s.begin(), s.end());
  std::string out;
  for (auto& [n, k] : s) {
    if (!out.empty()) out += "*";
    out += n;
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------- Poly

Poly from_sorted(std::vector<Poly::Term>&& t) {
  Poly p;
  p.t_ = std::move(t);
  return p;
}

Poly::Poly(long c) {
  if (c != 0) t_.emplace_back(Monomial(), Rat(c));
}

Poly::Poly(const Rat& c) {
  if (c != 0) t_.emplace_back(Monomial(), c);
}

Poly Poly::variable(VarId v) { return monomial(Monomial::of(v), Rat(1)); }

Poly Poly::monomial(const Monomial& m, const Rat& c) {
  Poly p;
  if (c != 0) p.t_.emplace_back(m, c);
  return p;
}

Rat Poly::constant_value() const {
  if (t_.empty()) return Rat(0);
  if (!t_[0].first.is_one()) throw Error(ErrorKind::Internal, "not a constant: " + str());
  return t_[0].second;
}

Rat Poly::canonical_lc() const {
  if (t_.empty()) return Rat(0);
  size_t best = 0;
  for (size_t i = 1; i < t_.size(); ++i) {
    if (t_[i].first.degree() < t_[best].first.degree()) break;
    if (t_[i].first.name_greater(t_[best].first)) best = i;
  }
  return t_[best].second;
}

Rat Poly::coefficient(const Monomial& m) const {
  for (auto& [mm, c] : t_)
    if (mm == m) return c;
  return Rat(0);
}

int Poly::total_degree() const { return t_.empty() ? -1 : t_[0].first.degree(); }

int Poly::degree(VarId v) const {
  if (t_.empty()) return -1;
  int d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.exponent(v));
  return d;
}

std::set<VarId> Poly::variables() const {
  std::set<VarId> s;
  for (auto& [m, c] : t_)
    for (auto& [v, e] : m.powers()) s.insert(v);
  return s;
}

bool Poly::has_var(VarId v) const {
  for (auto& [m, c] : t_)
    if (m.exponent(v)) return true;
  return false;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

namespace {
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool sub) {
  std::vector<Poly::Term> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first.grlex_greater(b[j].first))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first.grlex_greater(a[i].first)) {
      r.emplace_back(b[j].first, sub ? Rat(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rat c = sub ? Rat(a[i].second - b[j].second) : Rat(a[i].second + b[j].second);
      if (c != 0) r.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}
}  // namespace

Poly Poly::operator+(const Poly& o) const { return from_sorted(merge(t_, o.t_, false)); }
Poly Poly::operator-(const Poly& o) const { return from_sorted(merge(t_, o.t_, true)); }

Poly Poly::operator*(const Poly& o) const {
  if (t_.empty() || o.t_.empty()) return Poly();
  if (o.t_.size() == 1) return mul_term(o.t_[0].first, o.t_[0].second);
  if (t_.size() == 1) return o.mul_term(t_[0].first, t_[0].second);
  std::map<Monomial, Rat, MonoLess> acc;
  for (auto& [m1, c1] : t_)
    for (auto& [m2, c2] : o.t_) {
      auto [it, ins] = acc.try_emplace(m1 * m2, c1 * c2);
      if (!ins) it->second += c1 * c2;
    }
  std::vector<Term> r;
  r.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) r.emplace_back(it->first, it->second);
  return from_sorted(std::move(r));
}

Poly Poly::scale(const Rat& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) t.second *= c;
  return r;
}

Poly Poly::mul_term(const Monomial& m, const Rat& c) const {
  if (c == 0) return Poly();
  Poly r;
  r.t_.reserve(t_.size());
  for (auto& [mm, cc] : t_) r.t_.emplace_back(mm * m, cc * c);
  return r;  // multiplication by a monomial preserves the order
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].first != o.t_[i].first || t_[i].second != o.t_[i].second) return false;
  return true;
}

Poly Poly::derivative(VarId v) const {
  Poly r;
  for (auto& [m, c] : t_) {
    int e = m.exponent(v);
    if (!e) continue;
    r += monomial(m / Monomial::of(v), c * e);
  }
  return r;
}

Poly Poly::subs(VarId v, const Poly& val) const {
  if (!has_var(v)) return *this;
  auto cs = coefficients_in(v);
  Poly r;
  for (size_t i = cs.size(); i-- > 0;) r = r * val + cs[i];
  return r;
}

Poly Poly::subs(const std::map<VarId, Poly>& vals) const {
  Poly r;
  std::map<std::pair<VarId, int>, Poly> cache;
  for (auto& [m, c] : t_) {
    Poly term(c);
    Monomial rest;
    for (auto& [v, e] : m.powers()) {
      auto it = vals.find(v);
      if (it == vals.end()) {
        rest = rest * Monomial::of(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto ct = cache.find(key);
      if (ct == cache.end()) ct = cache.emplace(key, it->second.pow(e)).first;
      term = term * ct->second;
    }
    r += term.mul_term(rest, Rat(1));
  }
  return r;
}

Rat Poly::eval(const std::map<VarId, Rat>& vals) const {
  Rat r = 0;
  for (auto& [m, c] : t_) {
    Rat t = c;
    for (auto& [v, e] : m.powers()) {
      auto it = vals.find(v);
      if (it == vals.end()) throw Error(ErrorKind::Internal, "unbound variable " + var_name(v));
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      t *= p;
    }
    r += t;
  }
  return r;
}

std::vector<Poly> Poly::coefficients_in(VarId v) const {
  int d = degree(v);
  std::vector<std::vector<Term>> parts(std::max(d + 1, 0));
  for (auto& [m, c] : t_) parts[m.exponent(v)].emplace_back(m.without(v), c);
  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return a.first.grlex_greater(b.first); });
    out.push_back(from_sorted(std::move(p)));
  }
  return out;
}

Poly Poly::from_coefficients(VarId v, const std::vector<Poly>& cs) {
  Poly r;
  for (size_t i = 0; i < cs.size(); ++i) r += cs[i].mul_term(Monomial::of(v, static_cast<int>(i)), Rat(1));
  return r;
}

Poly Poly::lc_in(VarId v) const {
  if (t_.empty()) return Poly();
  return coefficients_in(v).back();
}

Rat Poly::content() const {
  if (t_.empty()) return Rat(0);
  Int g = 0, l = 1;
  for (auto& [m, c] : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat r(g, l);
  r.canonicalize();
  if (canonical_lc() < 0) r = -r;
  return r;
}

Poly Poly::primitive() const {
  if (t_.empty()) return Poly();
  return scale(1 / content());
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::vector<const Term*> ord;
  for (auto& t : t_) ord.push_back(&t);
  std::stable_sort(ord.begin(), ord.end(), [](const Term* a, const Term* b) { return a->first.name_greater(b->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ord) {
    Rat c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (t->first.is_one()) {
      os << rat_str(c);
    } else {
      if (c != 1) os << rat_str(c) << "*";
      os << t->first.str();
    }
  }
  return os.str();
}

}  // namespace holo
