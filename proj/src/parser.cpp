#include "holo/parser.hpp"

#include <cctype>
#include <map>
#include <regex>

#include "holo/registry.hpp"

namespace holo {

// ---------------------------------------------------------------- printer

namespace {

enum Prec { kAdd = 1, kMul = 2, kPow = 3, kAtom = 4 };

std::string print(const Expr& e, int& prec);

std::string wrap(const Expr& e, int need) {
  int p;
  std::string s = print(e, p);
  return p < need ? "(" + s + ")" : s;
}

bool negative_term(const Expr& t) {
  if (t->kind == ExprKind::Number) return t->value < 0;
  return t->kind == ExprKind::Mul && t->args[0]->kind == ExprKind::Number && t->args[0]->value < 0;
}

std::string print_mul(const Expr& e) {
  Rat c = 1;
  std::vector<Expr> numf, denf;
  for (auto& f : e->args) {
    if (f->kind == ExprKind::Number)
      c *= f->value;
    else if (f->kind == ExprKind::Pow && f->args[1]->kind == ExprKind::Number && f->args[1]->value < 0)
      denf.push_back(ex::pow(f->args[0], ex::num(-f->args[1]->value)));
    else
      numf.push_back(f);
  }
  std::string s = c < 0 ? "-" : "";
  Int p = abs(c.get_num()), q = c.get_den();
  std::string top;
  if (p != 1 || numf.empty()) top = p.get_str();
  for (auto& f : numf) top += (top.empty() ? "" : "*") + wrap(f, kPow);
  s += top;
  if (q != 1 || !denf.empty()) {
    std::vector<std::string> ds;
    if (q != 1) ds.push_back(q.get_str());
    for (auto& f : denf) ds.push_back(wrap(f, kPow));
    std::string d;
    for (auto& x : ds) d += (d.empty() ? "" : "*") + x;
    s += "/" + (ds.size() > 1 ? "(" + d + ")" : d);
  }
  return s;
}

std::string print(const Expr& e, int& prec) {
  switch (e->kind) {
    case ExprKind::Number: {
      prec = (e->value < 0 || e->value.get_den() != 1) ? kMul : kAtom;
      return e->value.get_str();
    }
    case ExprKind::Infinity: prec = e->sign < 0 ? kMul : kAtom; return e->sign < 0 ? "-Infinity" : "Infinity";
    case ExprKind::Symbol: prec = kAtom; return e->name;
    case ExprKind::Add: {
      prec = kAdd;
      std::string s;
      for (size_t i = 0; i < e->args.size(); ++i) {
        const Expr& t = e->args[i];
        if (i == 0) {
          s = wrap(t, kMul);
        } else if (negative_term(t)) {
          s += " - " + wrap(ex::neg(t), kMul);
        } else {
          s += " + " + wrap(t, kMul);
        }
      }
      return s;
    }
    case ExprKind::Mul: prec = kMul; return print_mul(e);
    case ExprKind::Pow: {
      const Expr& x = e->args[1];
      if (x->kind == ExprKind::Number && x->value < 0) {
        prec = kMul;
        return "1/" + wrap(ex::pow(e->args[0], ex::num(-x->value)), kPow);
      }
      prec = kPow;
      std::string b = wrap(e->args[0], kAtom);
      std::string xs = wrap(x, kAtom);
      return b + "^" + xs;
    }
    case ExprKind::Call: {
      prec = kAtom;
      std::string s = display_name(e->name) + "(";
      for (size_t i = 0; i < e->args.size(); ++i) s += (i ? ", " : "") + to_string(e->args[i]);
      return s + ")";
    }
    case ExprKind::Sum:
    case ExprKind::Integral: {
      prec = kAtom;
      std::string s = e->kind == ExprKind::Sum ? "Sum(" : "Integrate(";
      for (size_t i = 0; i < 4; ++i) s += (i ? ", " : "") + to_string(e->args[i]);
      return s + ")";
    }
  }
  prec = kAtom;
  return "?";
}

}  // namespace

std::string to_string(const Expr& e) {
  int p;
  return print(e, p);
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const std::string& s, const ParseOptions& o) : s_(s), opt_(o) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  ParseOptions opt_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax, msg + " at position " + std::to_string(i_));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    Expr e = term();
    while (true) {
      if (eat('+'))
        e = ex::add(e, term());
      else if (eat('-'))
        e = ex::sub(e, term());
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    while (true) {
      if (eat('*'))
        e = ex::mul(e, unary());
      else if (eat('/'))
        e = ex::div(e, unary());
      else
        return e;
    }
  }

  Expr unary() {
    if (eat('-')) return ex::neg(unary());
    if (eat('+')) return unary();
    return power();
  }

  Expr power() {
    Expr b = postfix();
    if (eat('^')) return ex::pow(b, unary());
    return b;
  }

  Expr postfix() {
    Expr e = primary();
    while (eat('!')) e = ex::call("factorial", {e});
    return e;
  }

  Expr primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string id = s_.substr(start, i_ - start);
      if (eat('(')) {
        std::vector<Expr> args;
        if (!eat(')')) {
          do args.push_back(expr());
          while (eat(','));
          expect(')');
        }
        return function(id, args, start);
      }
      std::string low = lower(id);
      if (low == "infinity" || low == "inf" || low == "oo") return ex::infinity(1);
      return ex::sym(id);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Expr number() {
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string ip = s_.substr(start, i_ - start), fp;
    if (i_ < s_.size() && s_[i_] == '.') {
      size_t f0 = ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      fp = s_.substr(f0, i_ - f0);
    }
    if (ip.empty() && fp.empty()) fail("malformed number");
    Int n(ip.empty() ? "0" : ip), d = 1;
    for (char ch : fp) {
      n = n * 10 + (ch - '0');
      d *= 10;
    }
    Rat r(n, d);
    r.canonicalize();
    return ex::num(r);
  }

  static std::string lower(const std::string& s) {
    std::string r = s;
    for (auto& ch : r) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return r;
  }

  void arity(const std::string& name, const std::vector<Expr>& a, size_t lo, size_t hi, size_t pos) {
    if (a.size() < lo || a.size() > hi) {
      i_ = pos;
      fail(name + " expects " + std::to_string(lo) + (hi != lo ? ".." + std::to_string(hi) : "") + " arguments");
    }
  }

  static Expr fact(const Expr& a) { return ex::call("factorial", {a}); }

  Expr function(const std::string& id, std::vector<Expr>& a, size_t pos) {
    std::string f = lower(id);
    if (f == "asin") f = "arcsin";
    if (f == "atan") f = "arctan";
    if (f == "sqrt") {
      arity(id, a, 1, 1, pos);
      return ex::pow(a[0], ex::num(Rat(1, 2)));
    }
    if (f == "pow") {
      arity(id, a, 2, 2, pos);
      return ex::pow(a[0], a[1]);
    }
    if (f == "tan") {
      arity(id, a, 1, 1, pos);
      if (!opt_.rewrite_tan) return ex::call("tan", a);
      return ex::div(ex::call("sin", a), ex::call("cos", a));
    }
    if (f == "binomial") {
      arity(id, a, 2, 2, pos);
      return ex::mul({fact(a[0]), ex::pow(fact(a[1]), ex::num(-1)), ex::pow(fact(ex::sub(a[0], a[1])), ex::num(-1))});
    }
    if (f == "gamma") {
      arity(id, a, 1, 1, pos);
      return fact(ex::sub(a[0], ex::num(1)));
    }
    if (f == "pochhammer") {
      arity(id, a, 2, 2, pos);
      Expr am1 = ex::sub(a[0], ex::num(1));
      return ex::div(fact(ex::add(am1, a[1])), fact(am1));
    }
    if (f == "sum" || f == "integrate") {
      arity(id, a, 2, 4, pos);
      if (a[1]->kind != ExprKind::Symbol) {
        i_ = pos;
        fail(id + ": second argument must be a variable");
      }
      if (a.size() == 3) {
        i_ = pos;
        fail(id + " expects 2 or 4 arguments");
      }
      Expr lo = a.size() == 4 ? a[2] : ex::infinity(-1);
      Expr hi = a.size() == 4 ? a[3] : ex::infinity(1);
      return f == "sum" ? ex::sum(a[0], a[1]->name, lo, hi) : ex::integral(a[0], a[1]->name, lo, hi);
    }
    const PrimitiveEntry* p = find_primitive(f);
    if (!p) {
      i_ = pos;
      throw Error(ErrorKind::UnknownPrimitive, "unknown function '" + id + "' at position " + std::to_string(pos));
    }
    arity(id, a, p->arity, p->arity, pos);
    return ex::call(p->name, a);
  }
};

}  // namespace

Expr parse(const std::string& text, const ParseOptions& opt) { return Parser(text, opt).run(); }

LinearOperatorEq parse_equation(const std::string& text, const std::string& v, OpKind kind, const std::string& fname,
                                const std::string& op) {
  const std::string marker = "op_";
  std::string f = fname.empty() ? (kind == OpKind::D ? "F" : "a") : fname;
  std::string body = text;
  long lowest = 0;
  auto eqpos = text.find('=');
  if (eqpos != std::string::npos) {
    body = "(" + text.substr(0, eqpos) + ") - (" + text.substr(eqpos + 1) + ")";
    std::string out;
    if (kind == OpKind::D) {
      std::regex term("\\b" + f + "(\\^\\(\\s*(\\d+)\\s*\\)|('+))?(?![\\w(])");
      auto it = std::sregex_iterator(body.begin(), body.end(), term);
      size_t at = 0;
      for (; it != std::sregex_iterator(); ++it) {
        auto& m = *it;
        long k = m[2].matched ? std::stol(m[2].str()) : static_cast<long>(m[3].length());
        out += body.substr(at, m.position() - at) + "(" + marker + "^" + std::to_string(k) + ")";
        at = m.position() + m.length();
      }
      body = out + body.substr(at);
    } else {
      std::regex term("\\b" + f + "\\(\\s*" + v + "\\s*(([+-])\\s*(\\d+))?\\s*\\)");
      std::vector<std::pair<std::smatch, long>> ms;
      for (auto it = std::sregex_iterator(body.begin(), body.end(), term); it != std::sregex_iterator(); ++it) {
        long j = (*it)[1].matched ? std::stol((*it)[3].str()) * ((*it)[2].str() == "-" ? -1 : 1) : 0;
        lowest = std::min(lowest, j);
        ms.push_back({*it, j});
      }
      size_t at = 0;
      for (auto& [m, j] : ms) {
        out += body.substr(at, m.position() - at) + "(" + marker + "^" + std::to_string(j - lowest) + ")";
        at = m.position() + m.length();
      }
      body = out + body.substr(at);
    }
  } else {
    std::string o = op.empty() ? (kind == OpKind::D ? "D" : "N") : op;
    body = std::regex_replace(text, std::regex("\\b" + o + "\\b"), marker);
  }
  auto r = to_ratfun(parse(body));
  if (!r) throw Error(ErrorKind::Syntax, "equation coefficients must be rational: " + text);
  VarId m = var(marker), x = var(v);
  if (r->den().degree(m) > 0) throw Error(ErrorKind::Syntax, "operator in a denominator: " + text);
  auto cs = r->num().coefficients_in(m);
  if (cs.empty()) throw Error(ErrorKind::Syntax, "empty equation: " + text);
  std::vector<RatFun> coeffs;
  for (auto& c : cs) {
    Poly p = lowest ? c.shift(x, Rat(-lowest)) : c;
    coeffs.push_back(RatFun(p) / RatFun(lowest ? r->den().shift(x, Rat(-lowest)) : r->den()));
  }
  return LinearOperatorEq(x, kind, coeffs);
}

}  // namespace holo
