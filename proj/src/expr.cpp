#include "holo/expr.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace holo {

namespace {
Expr make(ExprKind k) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  return n;
}

Expr make_num(const Rat& r) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Number;
  n->value = r;
  return n;
}

bool is_int(const Rat& r) { return r.get_den() == 1; }

// term = coefficient * rest
std::pair<Rat, Expr> split_coeff(const Expr& t) {
  if (t->kind == ExprKind::Number) return {t->value, nullptr};
  if (t->kind == ExprKind::Mul && t->args.front()->kind == ExprKind::Number) {
    std::vector<Expr> rest(t->args.begin() + 1, t->args.end());
    Expr r = rest.size() == 1 ? rest[0] : [&] {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprKind::Mul;
      n->args = rest;
      return Expr(n);
    }();
    return {t->args.front()->value, r};
  }
  return {Rat(1), t};
}

std::pair<Expr, Expr> split_pow(const Expr& f) {
  if (f->kind == ExprKind::Pow) return {f->args[0], f->args[1]};
  return {f, make_num(Rat(1))};
}

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};
}  // namespace

namespace ex {

Expr num(const Rat& r) { return make_num(r); }
Expr num(long v) { return make_num(Rat(v)); }

Expr infinity(int sign) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Infinity;
  n->sign = sign < 0 ? -1 : 1;
  return n;
}

Expr sym(const std::string& name) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Symbol;
  n->name = name;
  return n;
}

Expr add(std::vector<Expr> xs) {
  std::vector<Expr> flat;
  for (auto& x : xs) {
    if (x->kind == ExprKind::Add)
      flat.insert(flat.end(), x->args.begin(), x->args.end());
    else
      flat.push_back(x);
  }
  Rat c = 0;
  std::map<Expr, Rat, ExprLess> coll;
  std::vector<Expr> order;
  for (auto& t : flat) {
    if (t->kind == ExprKind::Infinity) return t;
    auto [k, rest] = split_coeff(t);
    if (!rest) {
      c += k;
      continue;
    }
    auto it = coll.find(rest);
    if (it == coll.end()) {
      coll.emplace(rest, k);
    } else {
      it->second += k;
    }
  }
  std::vector<Expr> terms;
  for (auto& [rest, k] : coll)
    if (k != 0) terms.push_back(k == 1 ? rest : mul(num(k), rest));
  if (c != 0) terms.push_back(num(c));
  if (terms.empty()) return num(0);
  if (terms.size() == 1) return terms[0];
  auto n = make(ExprKind::Add);
  std::const_pointer_cast<ExprNode>(n)->args = std::move(terms);
  return n;
}

Expr mul(std::vector<Expr> xs) {
  std::vector<Expr> flat;
  for (auto& x : xs) {
    if (x->kind == ExprKind::Mul)
      flat.insert(flat.end(), x->args.begin(), x->args.end());
    else
      flat.push_back(x);
  }
  Rat c = 1;
  std::map<Expr, std::vector<Expr>, ExprLess> pw;
  for (auto& f : flat) {
    if (f->kind == ExprKind::Number) {
      c *= f->value;
      continue;
    }
    auto [b, e] = split_pow(f);
    pw[b].push_back(e);
  }
  if (c == 0) return num(0);
  std::vector<Expr> factors;
  for (auto& [b, es] : pw) {
    Expr p = pow(b, add(es));
    if (p->kind == ExprKind::Number) {
      c *= p->value;
    } else if (p->kind == ExprKind::Mul) {
      for (auto& a : p->args) {
        if (a->kind == ExprKind::Number)
          c *= a->value;
        else
          factors.push_back(a);
      }
    } else {
      factors.push_back(p);
    }
  }
  std::sort(factors.begin(), factors.end(), ExprLess());
  if (c == 0) return num(0);
  if (factors.empty()) return num(c);
  if (c != 1) factors.insert(factors.begin(), num(c));
  if (factors.size() == 1) return factors[0];
  auto n = make(ExprKind::Mul);
  std::const_pointer_cast<ExprNode>(n)->args = std::move(factors);
  return n;
}

Expr pow(const Expr& b, const Expr& e) {
  if (e->kind == ExprKind::Number) {
    const Rat& q = e->value;
    if (q == 0) return num(1);
    if (q == 1) return b;
    if (b->kind == ExprKind::Number && is_int(q)) {
      if (b->value == 0) {
        if (q < 0) throw Error(ErrorKind::PoleAtExpansionPoint, "division by zero");
        return num(0);
      }
      long k = q.get_num().get_si();
      Rat base = k < 0 ? Rat(1 / b->value) : b->value;
      unsigned long m = static_cast<unsigned long>(k < 0 ? -k : k);
      Rat r;
      mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), m);
      mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), m);
      return num(r);
    }
    if (b->kind == ExprKind::Number && b->value == 1) return num(1);
    if (b->kind == ExprKind::Pow && is_int(q)) return pow(b->args[0], mul(b->args[1], e));
    if (b->kind == ExprKind::Mul && is_int(q)) {
      std::vector<Expr> fs;
      for (auto& f : b->args) fs.push_back(pow(f, e));
      return mul(fs);
    }
  }
  auto n = make(ExprKind::Pow);
  std::const_pointer_cast<ExprNode>(n)->args = {b, e};
  return n;
}

Expr call(const std::string& name, std::vector<Expr> args) {
  auto n = make(ExprKind::Call);
  auto m = std::const_pointer_cast<ExprNode>(n);
  m->name = name;
  m->args = std::move(args);
  return n;
}

Expr sum(const Expr& body, const std::string& var, const Expr& lo, const Expr& hi) {
  auto n = make(ExprKind::Sum);
  std::const_pointer_cast<ExprNode>(n)->args = {body, sym(var), lo, hi};
  return n;
}

Expr integral(const Expr& body, const std::string& var, const Expr& lo, const Expr& hi) {
  auto n = make(ExprKind::Integral);
  std::const_pointer_cast<ExprNode>(n)->args = {body, sym(var), lo, hi};
  return n;
}

Expr add(const Expr& a, const Expr& b) { return add(std::vector<Expr>{a, b}); }
Expr sub(const Expr& a, const Expr& b) { return add(a, neg(b)); }
Expr mul(const Expr& a, const Expr& b) { return mul(std::vector<Expr>{a, b}); }
Expr div(const Expr& a, const Expr& b) { return mul(a, pow(b, num(-1))); }
Expr neg(const Expr& a) { return mul(num(-1), a); }

}  // namespace ex

int compare(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
  switch (a->kind) {
    case ExprKind::Number: return a->value < b->value ? -1 : (a->value == b->value ? 0 : 1);
    case ExprKind::Infinity: return a->sign < b->sign ? -1 : (a->sign == b->sign ? 0 : 1);
    case ExprKind::Symbol: return a->name < b->name ? -1 : (a->name == b->name ? 0 : 1);
    default: break;
  }
  if (a->name != b->name) return a->name < b->name ? -1 : 1;
  size_t n = std::min(a->args.size(), b->args.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = compare(a->args[i], b->args[i])) return c;
  if (a->args.size() != b->args.size()) return a->args.size() < b->args.size() ? -1 : 1;
  return 0;
}

bool is_number(const Expr& e) { return e->kind == ExprKind::Number; }

bool depends_on(const Expr& e, const std::string& v) {
  switch (e->kind) {
    case ExprKind::Number:
    case ExprKind::Infinity: return false;
    case ExprKind::Symbol: return e->name == v;
    case ExprKind::Sum:
    case ExprKind::Integral:
      if (depends_on(e->args[2], v) || depends_on(e->args[3], v)) return true;
      return e->args[1]->name != v && depends_on(e->args[0], v);
    default:
      for (auto& a : e->args)
        if (depends_on(a, v)) return true;
      return false;
  }
}

std::set<std::string> free_symbols(const Expr& e) {
  std::set<std::string> s;
  switch (e->kind) {
    case ExprKind::Number:
    case ExprKind::Infinity: break;
    case ExprKind::Symbol: s.insert(e->name); break;
    case ExprKind::Sum:
    case ExprKind::Integral: {
      s = free_symbols(e->args[0]);
      s.erase(e->args[1]->name);
      for (int i : {2, 3}) {
        auto t = free_symbols(e->args[i]);
        s.insert(t.begin(), t.end());
      }
      break;
    }
    default:
      for (auto& a : e->args) {
        auto t = free_symbols(a);
        s.insert(t.begin(), t.end());
      }
  }
  return s;
}

Expr substitute(const Expr& e, const std::string& v, const Expr& val) {
  switch (e->kind) {
    case ExprKind::Number:
    case ExprKind::Infinity: return e;
    case ExprKind::Symbol: return e->name == v ? val : e;
    case ExprKind::Add: {
      std::vector<Expr> xs;
      for (auto& a : e->args) xs.push_back(substitute(a, v, val));
      return ex::add(xs);
    }
    case ExprKind::Mul: {
      std::vector<Expr> xs;
      for (auto& a : e->args) xs.push_back(substitute(a, v, val));
      return ex::mul(xs);
    }
    case ExprKind::Pow: return ex::pow(substitute(e->args[0], v, val), substitute(e->args[1], v, val));
    case ExprKind::Call: {
      std::vector<Expr> xs;
      for (auto& a : e->args) xs.push_back(substitute(a, v, val));
      return ex::call(e->name, xs);
    }
    case ExprKind::Sum:
    case ExprKind::Integral: {
      const std::string& b = e->args[1]->name;
      Expr body = b == v ? e->args[0] : substitute(e->args[0], v, val);
      Expr lo = substitute(e->args[2], v, val), hi = substitute(e->args[3], v, val);
      return e->kind == ExprKind::Sum ? ex::sum(body, b, lo, hi) : ex::integral(body, b, lo, hi);
    }
  }
  return e;
}

std::optional<RatFun> to_ratfun(const Expr& e) {
  switch (e->kind) {
    case ExprKind::Number: return RatFun(e->value);
    case ExprKind::Symbol: return RatFun::variable(e->name);
    case ExprKind::Add: {
      RatFun r;
      for (auto& a : e->args) {
        auto t = to_ratfun(a);
        if (!t) return std::nullopt;
        r += *t;
      }
      return r;
    }
    case ExprKind::Mul: {
      RatFun r(1);
      for (auto& a : e->args) {
        auto t = to_ratfun(a);
        if (!t) return std::nullopt;
        r *= *t;
      }
      return r;
    }
    case ExprKind::Pow: {
      if (e->args[1]->kind != ExprKind::Number || !is_int(e->args[1]->value)) return std::nullopt;
      auto b = to_ratfun(e->args[0]);
      if (!b) return std::nullopt;
      long k = e->args[1]->value.get_num().get_si();
      if (k < 0 && b->is_zero()) throw Error(ErrorKind::PoleAtExpansionPoint, "division by zero");
      return b->pow(static_cast<int>(k));
    }
    default: return std::nullopt;
  }
}

namespace {
std::mutex const_mu;
std::map<std::string, Expr>& const_table() {
  static std::map<std::string, Expr> t;
  return t;
}
}  // namespace

Expr from_poly(const Poly& p) {
  std::vector<Expr> terms;
  for (auto& [m, c] : p.terms()) {
    std::vector<Expr> fs{ex::num(c)};
    for (auto& [v, k] : m.powers()) {
      const std::string& nm = var_name(v);
      auto ce = constant_symbol_expr(nm);
      fs.push_back(ex::pow(ce ? *ce : ex::sym(nm), ex::num(k)));
    }
    terms.push_back(ex::mul(fs));
  }
  return ex::add(terms);
}

Expr from_ratfun(const RatFun& r) { return ex::div(from_poly(r.num()), from_poly(r.den())); }

std::string constant_symbol_name(const Expr& e) {
  std::string name = "$" + to_string(e);
  std::lock_guard<std::mutex> lk(const_mu);
  const_table().emplace(name, e);
  return name;
}

std::optional<Expr> constant_symbol_expr(const std::string& name) {
  if (name.empty() || name[0] != '$') return std::nullopt;
  std::lock_guard<std::mutex> lk(const_mu);
  auto it = const_table().find(name);
  if (it == const_table().end()) return std::nullopt;
  return it->second;
}

}  // namespace holo
