#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "holo/factor.hpp"
#include "holo/groebner.hpp"
#include "holo/holonomic.hpp"
#include "holo/hyper.hpp"
#include "holo/identify.hpp"
#include "holo/parser.hpp"
#include "holo/series.hpp"

using json = nlohmann::ordered_json;
using namespace holo;

namespace {

enum Exit { kOk = 0, kError = 1, kInconclusive = 2 };

struct Globals {
  bool json = false;
  int depth = kDefaultDepth;
  std::string point;
  int jobs = 1;
  std::string trace_file;
  int order_max = kDefaultOrderMax;
  int degree_bound = -1;
  std::string term_order;
  bool no_tan_rewrite = false;
};

struct Result {
  json j;
  std::vector<std::string> lines;
  int code = kOk;
};

// "-" or an empty argument reads the whole of stdin.
std::string text_arg(const std::string& s) {
  if (!s.empty() && s != "-") return s;
  std::string in((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  while (!in.empty() && std::isspace(static_cast<unsigned char>(in.back()))) in.pop_back();
  return in;
}

Expr expr_arg(const Globals& g, const std::string& s) {
  ParseOptions o;
  o.rewrite_tan = !g.no_tan_rewrite;
  return parse(text_arg(s), o);
}

Rat rat_arg(const std::string& s) {
  Expr e = parse(s);
  auto r = to_ratfun(e);
  if (!r || !r->is_constant()) throw Error(ErrorKind::Usage, "expected a rational number, got " + s);
  return r->constant_value();
}

OpKind kind_arg(const std::string& s) {
  if (s == "D" || s == "d" || s == "diff") return OpKind::D;
  if (s == "N" || s == "n" || s == "shift") return OpKind::N;
  throw Error(ErrorKind::Usage, "operator kind must be D or N, got " + s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

json notes_json(const std::vector<std::string>& notes) { return json(notes); }

Result equation_result(const std::string& cmd, json input, const LinearOperatorEq& eq,
                       const std::vector<std::string>& notes, const std::string& fname = "") {
  Result r;
  r.j["command"] = cmd;
  r.j["input"] = std::move(input);
  r.j["operators"] = json::array({eq.str(fname)});
  r.j["notes"] = notes_json(notes);
  r.lines.push_back(eq.str(fname));
  return r;
}

// ---------------------------------------------------------------- derivations

struct DeriveArgs {
  std::string expr, var;
  bool no_verify = false;
};

Result run_derive(const Globals& g, const DeriveArgs& a, bool discrete) {
  DeriveOptions o;
  o.depth = g.depth;
  o.verify = !a.no_verify;
  o.order_max = g.order_max;
  Expr e = expr_arg(g, a.expr);
  Derivation d = discrete ? derive_re(e, a.var, o) : derive_de(e, a.var, o);
  auto notes = d.notes;
  if (o.verify)
    notes.push_back(std::string("oracle check ") + (d.verified ? "passed" : "not performed") +
                    (discrete ? " from " + a.var + " = " + std::to_string(d.start)
                              : " at " + a.var + " = " + d.point.get_str()));
  Result r = equation_result(discrete ? "holo-re" : "holo-de", {{"expr", to_string(e)}, {"var", a.var}}, d.eq, notes);
  r.j["verified"] = d.verified;
  return r;
}

struct ConvertArgs {
  std::string eq, var, target, fname;
};

Result run_de2re(const Globals&, const ConvertArgs& a) {
  LinearOperatorEq p = parse_equation(text_arg(a.eq), a.var, OpKind::D, a.fname);
  LinearOperatorEq q = de_to_re(p, var(a.target)).canonical();
  return equation_result("de2re", {{"equation", p.str()}, {"var", a.var}, {"n", a.target}}, q,
                         {"recurrence for the Taylor coefficients at " + a.var + " = 0"});
}

Result run_re2de(const Globals&, const ConvertArgs& a) {
  LinearOperatorEq p = parse_equation(text_arg(a.eq), a.var, OpKind::N, a.fname);
  LinearOperatorEq q = re_to_de(p, var(a.target)).canonical();
  return equation_result("re2de", {{"equation", p.str()}, {"var", a.var}, {"x", a.target}}, q,
                         {"equation for the generating function sum a(" + a.var + ")*" + a.target + "^" + a.var});
}

// ---------------------------------------------------------------- summation

struct SumArgs {
  std::string expr, n = "n", k = "k";
  std::string support;  // "a..b": also check the recurrence on sums over k = a..b only
};

// Recurrence applied to s(n) = sum_{k=lo}^{hi} F(n,k) for the first few n.
bool support_check(const Expr& e, const SumArgs& a, const LinearOperatorEq& rec, std::string& range) {
  auto dots = a.support.find("..");
  if (dots == std::string::npos) throw Error(ErrorKind::Usage, "--support expects a..b, got " + a.support);
  long lo = std::stol(a.support.substr(0, dots)), hi = std::stol(a.support.substr(dots + 2));
  if (lo > hi) throw Error(ErrorKind::Usage, "--support range is empty: " + a.support);
  const long count = rec.order() + 6;
  std::vector<RatFun> s;
  for (long n = 0; n < count; ++n) {
    RatFun acc = 0;
    for (long k = lo; k <= hi; ++k) acc = acc + sequence_value(e, {{a.n, n}, {a.k, k}});
    s.push_back(acc);
  }
  range = a.k + " = " + std::to_string(lo) + ".." + std::to_string(hi) + ", " + a.n + " = 0.." +
          std::to_string(count - 1 - rec.order());
  for (long n = 0; n + rec.order() < count; ++n) {
    RatFun acc = 0;
    for (int j = 0; j <= rec.order(); ++j) acc = acc + rec.coeffs[j].eval(rec.var, Rat(n)) * s[n + j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

Result run_gosper(const Globals& g, const SumArgs& a) {
  Expr e = expr_arg(g, a.expr);
  RatFun ratio = term_ratio(e, a.k);
  GosperResult s = gosper(ratio, var(a.k));
  Result r;
  r.j["command"] = "gosper";
  r.j["input"] = {{"expr", to_string(e)}, {"k", a.k}};
  r.j["operators"] = json::array();
  if (s.summable) {
    bool ok = gosper_check(ratio, s.certificate, var(a.k));
    r.j["certificate"] = s.certificate.str();
    r.j["certificate_check"] = ok;
    r.lines.push_back("G(" + a.k + ") = R(" + a.k + ")*F(" + a.k + "), R = " + s.certificate.str());
    r.lines.push_back(std::string("certificate check: ") + (ok ? "passed" : "FAILED"));
    if (!ok) r.code = kError;
  } else {
    r.j["certificate"] = nullptr;
    r.j["no_solution"] = {{"a", s.a.str()}, {"b", s.b.str()}, {"c", s.c.str()},
                          {"degree_bound", s.degree_bound}, {"reason", s.reason}};
    r.lines.push_back("NoSolution: " + s.reason);
    r.lines.push_back("Gosper form a = " + s.a.str() + ", b = " + s.b.str() + ", c = " + s.c.str());
  }
  r.j["notes"] = json::array();
  return r;
}

Result run_zeilberger(const Globals& g, const SumArgs& a) {
  Expr e = expr_arg(g, a.expr);
  HyperTerm t = hyper_term(e, a.n, a.k);
  TelescopeResult z = zeilberger(t, g.order_max);
  bool ok = z.certificate && zeilberger_check(t, z.recurrence, *z.certificate);
  Result r = equation_result("zeilberger", {{"expr", to_string(e)}, {"n", a.n}, {"k", a.k}}, z.recurrence, z.notes);
  r.j["certificate"] = z.certificate ? json(z.certificate->str()) : json(nullptr);
  r.j["certificate_check"] = ok;
  if (z.certificate) r.lines.push_back("certificate: R = " + z.certificate->str());
  r.lines.push_back(std::string("certificate check: ") + (ok ? "passed" : "FAILED"));
  if (!a.support.empty()) {
    std::string range;
    bool sup = support_check(e, a, z.recurrence, range);
    r.j["support_check"] = {{"range", range}, {"passed", sup}};
    r.lines.push_back("support check (" + range + "): " + (sup ? "passed" : "FAILED"));
    ok = ok && sup;
  }
  if (!ok) r.code = kError;
  return r;
}

// ---------------------------------------------------------------- Ore algebra

struct OreArgs {
  std::vector<std::string> gens;
  std::string base;
  std::vector<std::string> ops;  // name:kind:base, e.g. N:shift:n
  std::string kill;
  // telescoping
  std::string v, kill_op, keep_op;
};

RingPtr ring_arg(const OreArgs& a) {
  std::vector<OpDecl> ops;
  for (auto& s : a.ops) {
    auto parts = split(s, ':');
    if (parts.size() != 3) throw Error(ErrorKind::Usage, "--op expects name:kind:base, got " + s);
    ops.push_back({parts[0], kind_arg(parts[1]), parts[2]});
  }
  return make_ring(split(a.base, ','), ops);
}

std::vector<OrePoly> gens_arg(RingPtr r, const OreArgs& a) {
  std::vector<OrePoly> out;
  for (auto& s : a.gens) out.push_back(parse_ore(r, text_arg(s)));
  if (out.empty()) throw Error(ErrorKind::Usage, "no generators given");
  return out;
}

TermOrder order_arg(const Globals& g, const OreRing& r) {
  if (!g.term_order.empty()) return TermOrder::parse(r, g.term_order);
  std::vector<std::string> names;
  for (size_t i = 0; i < r.size(); ++i) names.push_back(r.name(i));
  return TermOrder::lex(r, names);
}

json ring_json(const OreArgs& a) { return {{"base", a.base}, {"ops", a.ops}, {"generators", a.gens}}; }

Result run_groebner(const Globals& g, const OreArgs& a, bool elim) {
  RingPtr ring = ring_arg(a);
  TermOrder o = order_arg(g, *ring);
  LeftIdealBasis b = groebner(gens_arg(ring, a), o);
  std::vector<OrePoly> out = elim ? eliminate(b, split(a.kill, ',')) : b.gens;
  Result r;
  r.j["command"] = elim ? "eliminate" : "groebner";
  r.j["input"] = ring_json(a);
  if (!g.term_order.empty()) r.j["input"]["term_order"] = g.term_order;
  if (elim) r.j["input"]["kill"] = a.kill;
  r.j["operators"] = json::array();
  for (auto& p : out) {
    r.j["operators"].push_back(p.str());
    r.lines.push_back(p.str());
  }
  r.j["notes"] = json::array({std::to_string(b.gens.size()) + " elements in the reduced basis"});
  if (elim && out.empty()) r.lines.push_back("(no element free of " + a.kill + ")");
  return r;
}

struct TeleArgs {
  std::string expr, n, k = "k", x = "x", y;
};

Result telescope_result(const std::string& cmd, json input, const TelescopeOre& t) {
  Result r = equation_result(cmd, std::move(input), t.recurrence, t.notes);
  r.j["element"] = t.element.str();
  return r;
}

Result run_telescope_sum(const Globals& g, const TeleArgs& t, const OreArgs& a) {
  if (!a.ops.empty()) {
    RingPtr ring = ring_arg(a);
    std::string K = a.kill_op.empty() ? "K" : a.kill_op, N = a.keep_op.empty() ? "N" : a.keep_op;
    TermOrder o = g.term_order.empty() ? default_sum_order(*ring, a.v, K, N) : TermOrder::parse(*ring, g.term_order);
    auto res = telescope_sum(gens_arg(ring, a), a.v, K, N, o);
    return telescope_result("telescope-sum", ring_json(a), res);
  }
  std::vector<std::string> notes;
  Expr e = expr_arg(g, t.expr);
  std::string n = t.n.empty() ? "n" : t.n;
  LinearOperatorEq eq = telescope_sum_expr(e, n, t.k, &notes);
  return equation_result("telescope-sum", {{"expr", to_string(e)}, {"n", n}, {"k", t.k}}, eq, notes);
}

Result run_telescope_int(const Globals& g, const TeleArgs& t, const OreArgs& a) {
  if (!a.ops.empty()) {
    RingPtr ring = ring_arg(a);
    std::string Dx = a.kill_op.empty() ? "D" + a.v : a.kill_op, Y = a.keep_op;
    if (Y.empty()) throw Error(ErrorKind::Usage, "--keep names the operator of the result");
    TermOrder o =
        g.term_order.empty() ? default_integral_order(*ring, a.v, Dx, Y) : TermOrder::parse(*ring, g.term_order);
    auto res = telescope_integral(gens_arg(ring, a), a.v, Dx, Y, o);
    return telescope_result("telescope-int", ring_json(a), res);
  }
  if (t.n.empty() == t.y.empty()) throw Error(ErrorKind::Usage, "give exactly one of --n (discrete) or --y");
  std::vector<std::string> notes;
  Expr e = expr_arg(g, t.expr);
  bool discrete = !t.n.empty();
  std::string y = discrete ? t.n : t.y;
  LinearOperatorEq eq = telescope_integral_expr(e, y, discrete, t.x, &notes);
  return equation_result("telescope-int", {{"expr", to_string(e)}, {discrete ? "n" : "y", y}, {"x", t.x}}, eq,
                         notes);
}

// ---------------------------------------------------------------- factorization

struct FactorArgs {
  std::string eq, var, kind = "D", right, expr;
  int order = 0;
  long start = 0;
};

Result run_factor(const Globals& g, const FactorArgs& a) {
  OpKind k = kind_arg(a.kind);
  LinearOperatorEq p = parse_equation(text_arg(a.eq), a.var, k).canonical();
  Result r;
  r.j["command"] = "factor";
  r.j["input"] = {{"equation", p.str()}, {"var", a.var}};
  r.j["operators"] = json::array();
  if (!a.right.empty()) {
    LinearOperatorEq q = parse_equation(a.right, a.var, k);
    auto f = factor_with(p, q);
    r.j["input"]["right"] = q.str();
    if (!f) {
      r.lines.push_back("not a right factor");
      r.j["factorization"] = nullptr;
      r.j["notes"] = json::array();
      return r;
    }
    bool ok = scale_left(f->content, compose(f->left, f->right)).same_as(p);
    r.j["factorization"] = {{"content", f->content.str()}, {"left", f->left.str()}, {"right", f->right.str()},
                            {"reexpansion_check", ok}};
    r.j["operators"] = json::array({f->left.str(), f->right.str()});
    r.lines.push_back("content: " + f->content.str());
    r.lines.push_back("left:    " + f->left.str());
    r.lines.push_back("right:   " + f->right.str());
    r.lines.push_back(std::string("re-expansion check: ") + (ok ? "passed" : "FAILED"));
    if (!ok) r.code = kError;
    r.j["notes"] = json::array();
    return r;
  }
  FactorOptions o;
  o.degree_bound = g.degree_bound;
  int lo = a.order > 0 ? a.order : 1, hi = a.order > 0 ? a.order : p.order() - 1;
  json fs = json::array();
  for (int order = lo; order <= hi; ++order)
    for (auto& q : right_factors(p, order, o)) {
      fs.push_back({{"order", order}, {"factor", q.str()}});
      r.j["operators"].push_back(q.str());
      r.lines.push_back("order " + std::to_string(order) + ": " + q.str());
    }
  r.j["right_factors"] = fs;
  if (fs.empty()) r.lines.push_back("no right factor found within the degree bound");
  r.j["notes"] = json::array({"right factors with coefficient degree within the bound; not a completeness claim"});
  return r;
}

Result run_normal_form(const Globals& g, const FactorArgs& a) {
  OpKind k = kind_arg(a.kind);
  LinearOperatorEq p = parse_equation(text_arg(a.eq), a.var, k);
  Expr f = expr_arg(g, a.expr);
  FactorOptions o;
  o.degree_bound = g.degree_bound;
  NormalForm nf = normal_form(p, f, o);
  Result r = equation_result("normal-form", {{"equation", p.canonical().str()}, {"expr", to_string(f)}, {"var", a.var}},
                             nf.eq, nf.notes);
  r.j["certified_minimal"] = nf.certified_minimal;
  r.j["degree_bound"] = nf.degree_bound;
  r.lines.push_back(std::string("certified minimal: ") + (nf.certified_minimal ? "yes" : "no"));
  // closed form for two-term recurrences
  bool two_term = k == OpKind::N && nf.eq.order() >= 1;
  for (int i = 1; two_term && i < nf.eq.order(); ++i) two_term = nf.eq.coeffs[i].is_zero();
  if (two_term) {
    try {
      std::vector<Expr> init;
      for (int i = 0; i < nf.eq.order(); ++i)
        init.push_back(from_ratfun(sequence_value(f, {{a.var, a.start + i}})));
      TwoTermSolution s = solve_two_term(nf.eq, a.start, init);
      r.j["closed_form"] = s.display;
      for (auto& d : s.display) r.lines.push_back(d);
    } catch (const Error& e) {
      r.j["notes"].push_back(std::string("no closed form: ") + e.what());
    }
  }
  return r;
}

// ---------------------------------------------------------------- identities and series

struct ProveArgs {
  std::string f, g, var;
  bool discrete = false, continuous = false;
};

Result run_prove(const Globals& gl, const ProveArgs& a) {
  Expr f = expr_arg(gl, a.f), g = expr_arg(gl, a.g);
  ProveOptions o;
  o.depth = gl.depth;
  o.jobs = gl.jobs;
  if (a.discrete) o.discrete = true;
  if (a.continuous) o.discrete = false;
  Verdict v = prove_equal(f, g, a.var, o);
  Result r;
  r.j["command"] = "prove";
  r.j["input"] = {{"lhs", to_string(f)}, {"rhs", to_string(g)}, {"var", a.var}};
  r.j["operators"] = v.common ? json::array({v.common->str()}) : json::array();
  r.j["verdict"] = verdict_name(v.kind);
  r.j["method"] = v.method;
  r.j["initial_values"] = v.initial;
  if (v.kind == VerdictKind::Refuted)
    r.j["witness"] = {{"index", v.witness_index}, {"lhs", v.witness_f}, {"rhs", v.witness_g}};
  if (v.kind == VerdictKind::Inconclusive) r.j["reason"] = v.reason;
  r.j["trace"] = v.trace;
  r.j["notes"] = json::array();
  r.lines.push_back(verdict_name(v.kind));
  for (auto& t : v.trace) r.lines.push_back("  " + t);
  for (auto& t : v.initial) r.lines.push_back("  " + t);
  if (v.kind == VerdictKind::Inconclusive) {
    r.lines.push_back("  reason: " + v.reason);
    r.code = kInconclusive;
  }
  return r;
}

struct SeriesArgs {
  std::string expr, var;
  bool discrete = false;
  long start = 0;
};

Result run_series(const Globals& g, const SeriesArgs& a) {
  Expr e = expr_arg(g, a.expr);
  Rat pt = g.point.empty() ? Rat(0) : rat_arg(g.point);
  SeriesPrefix s = a.discrete ? sequence_oracle(e, a.var, a.start, g.depth + 1) : series_oracle(e, a.var, g.depth, pt);
  Result r;
  r.j["command"] = "series";
  r.j["input"] = {{"expr", to_string(e)}, {"var", a.var}, {"depth", g.depth}};
  if (a.discrete)
    r.j["input"]["start"] = a.start;
  else
    r.j["input"]["point"] = pt.get_str();
  r.j["operators"] = json::array();
  json vals = json::array();
  for (size_t i = 0; i < s.a.size(); ++i) {
    std::string v = to_string(from_ratfun(s.a[i]));
    vals.push_back(v);
    std::string at = a.discrete ? a.var + " = " + std::to_string(a.start + static_cast<long>(i))
                                : "[(" + a.var + (sgn(pt) < 0 ? " + " : " - ") + Rat(abs(pt)).get_str() + ")^" + std::to_string(i) + "]";
    if (!a.discrete && pt == 0) at = "[" + a.var + "^" + std::to_string(i) + "]";
    r.lines.push_back(at + " " + v);
  }
  r.j["values"] = vals;
  r.j["notes"] = json::array();
  return r;
}

bool inconclusive_kind(ErrorKind k) {
  return k == ErrorKind::ExtendedAlgorithmRequired || k == ErrorKind::DiagnosticAbort ||
         k == ErrorKind::OrderExceeded || k == ErrorKind::DegreeBoundExceeded;
}

void emit(const Globals& g, const Result& r) {
  if (g.json)
    std::cout << r.j.dump(2) << "\n";
  else
    for (auto& l : r.lines) std::cout << l << "\n";
  if (!g.trace_file.empty()) {
    std::ofstream out(g.trace_file, std::ios::app);
    if (!out) throw Error(ErrorKind::Usage, "cannot open trace file " + g.trace_file);
    out << r.j.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomic functions: derivation, summation, elimination, factorization and identities"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--depth", g.depth, "Oracle depth (series terms / sequence values)")->check(CLI::Range(1, 100000));
  app.add_option("--point", g.point, "Expansion point for series");
  app.add_option("--jobs", g.jobs, "Worker threads (prove derives both sides concurrently)")->check(CLI::Range(1, 256));
  app.add_option("--trace-file", g.trace_file, "Append each result as a JSON line");
  app.add_option("--order-max", g.order_max, "Zeilberger order limit")->check(CLI::Range(1, 64));
  app.add_option("--degree-bound", g.degree_bound, "Coefficient degree bound for factor searches");
  app.add_option("--term-order", g.term_order, "lex:a,b,... or weighted:w1,w2,...:a,b,...");
  app.add_flag("--no-tan-rewrite", g.no_tan_rewrite, "Keep tan(u) instead of sin(u)/cos(u)");

  std::function<Result()> job;

  DeriveArgs de, re;
  for (auto [name, args, discrete] : {std::tuple{"holo-de", &de, false}, std::tuple{"holo-re", &re, true}}) {
    auto* c = app.add_subcommand(name, discrete ? "Holonomic recurrence of an expression"
                                                : "Holonomic differential equation of an expression");
    c->add_option("expr", args->expr, "Expression ('-' reads stdin)")->required();
    c->add_option("--var", args->var, "Variable")->required();
    c->add_flag("--no-verify", args->no_verify, "Skip the oracle check");
    c->callback([&g, args, discrete, &job] { job = [&g, args, discrete] { return run_derive(g, *args, discrete); }; });
  }

  ConvertArgs d2r, r2d;
  {
    auto* c = app.add_subcommand("de2re", "Recurrence for the Taylor coefficients of a differential equation");
    c->add_option("equation", d2r.eq)->required();
    c->add_option("--var", d2r.var)->default_val("x");
    c->add_option("--n", d2r.target)->default_val("n");
    c->add_option("--fname", d2r.fname, "Unknown function name in printed equations");
    c->callback([&] { job = [&] { return run_de2re(g, d2r); }; });
    auto* e = app.add_subcommand("re2de", "Generating-function equation of a recurrence");
    e->add_option("equation", r2d.eq)->required();
    e->add_option("--var", r2d.var)->default_val("n");
    e->add_option("--x", r2d.target)->default_val("x");
    e->add_option("--fname", r2d.fname, "Unknown sequence name in printed equations");
    e->callback([&] { job = [&] { return run_re2de(g, r2d); }; });
  }

  SumArgs gs, zs;
  {
    auto* c = app.add_subcommand("gosper", "Indefinite hypergeometric summation");
    c->add_option("expr", gs.expr)->required();
    c->add_option("--k", gs.k)->default_val("k");
    c->callback([&] { job = [&] { return run_gosper(g, gs); }; });
    auto* z = app.add_subcommand("zeilberger", "Recurrence for a definite hypergeometric sum");
    z->add_option("expr", zs.expr)->required();
    z->add_option("--n", zs.n)->default_val("n");
    z->add_option("--k", zs.k)->default_val("k");
    z->add_option("--support", zs.support, "Also check the recurrence on sums over k = a..b only");
    z->callback([&] { job = [&] { return run_zeilberger(g, zs); }; });
  }

  OreArgs gb, el, ts_ore, ti_ore;
  auto ore_opts = [](CLI::App* c, OreArgs& a) {
    c->add_option("--base", a.base, "Base variables, comma separated")->required();
    c->add_option("--op", a.ops, "Operator name:kind:base, kind D or N (repeatable)");
  };
  {
    auto* c = app.add_subcommand("groebner", "Reduced left Gröbner basis in an Ore algebra");
    c->add_option("generators", gb.gens)->required();
    ore_opts(c, gb);
    c->callback([&] { job = [&] { return run_groebner(g, gb, false); }; });
    auto* e = app.add_subcommand("eliminate", "Gröbner basis elements free of some generators");
    e->add_option("generators", el.gens)->required();
    ore_opts(e, el);
    e->add_option("--kill", el.kill, "Generators to eliminate, comma separated")->required();
    e->callback([&] { job = [&] { return run_groebner(g, el, true); }; });
  }

  TeleArgs tsum, tint;
  {
    auto* c = app.add_subcommand("telescope-sum", "Recurrence of a sum by elimination");
    c->add_option("input", tsum.expr, "Summand expression, or annihilators with --op")->required();
    c->add_option("more", ts_ore.gens, "Further annihilators");
    c->add_option("--n", tsum.n);
    c->add_option("--k", tsum.k)->default_val("k");
    c->add_option("--base", ts_ore.base);
    c->add_option("--op", ts_ore.ops);
    c->add_option("--kill", ts_ore.kill_op, "Shift operator in k (default K)");
    c->add_option("--keep", ts_ore.keep_op, "Shift operator in n (default N)");
    c->callback([&] {
      job = [&] {
        ts_ore.gens.insert(ts_ore.gens.begin(), tsum.expr);
        ts_ore.v = tsum.k;
        return run_telescope_sum(g, tsum, ts_ore);
      };
    });
    auto* t = app.add_subcommand("telescope-int", "Equation of an integral by elimination");
    t->add_option("input", tint.expr, "Integrand expression, or annihilators with --op")->required();
    t->add_option("more", ti_ore.gens, "Further annihilators");
    t->add_option("--x", tint.x)->default_val("x");
    t->add_option("--n", tint.n, "Discrete outer variable");
    t->add_option("--y", tint.y, "Continuous outer variable");
    t->add_option("--base", ti_ore.base);
    t->add_option("--op", ti_ore.ops);
    t->add_option("--kill", ti_ore.kill_op, "Derivative in x (default D<x>)");
    t->add_option("--keep", ti_ore.keep_op, "Operator of the result");
    t->callback([&] {
      job = [&] {
        ti_ore.gens.insert(ti_ore.gens.begin(), tint.expr);
        ti_ore.v = tint.x;
        return run_telescope_int(g, tint, ti_ore);
      };
    });
  }

  FactorArgs fa, nfa;
  {
    auto* c = app.add_subcommand("factor", "Right factors of an operator");
    c->add_option("equation", fa.eq)->required();
    c->add_option("--var", fa.var)->required();
    c->add_option("--kind", fa.kind, "D or N")->default_val("D");
    c->add_option("--order", fa.order, "Order of the right factors (default: all proper orders)");
    c->add_option("--right", fa.right, "Divide by this right factor instead of searching");
    c->callback([&] { job = [&] { return run_factor(g, fa); }; });
    auto* n = app.add_subcommand("normal-form", "Lowest-order equation compatible with an expression");
    n->add_option("equation", nfa.eq)->required();
    n->add_option("expr", nfa.expr)->required();
    n->add_option("--var", nfa.var)->required();
    n->add_option("--kind", nfa.kind, "D or N")->default_val("D");
    n->add_option("--start", nfa.start, "First index for closed forms")->default_val(0);
    n->callback([&] { job = [&] { return run_normal_form(g, nfa); }; });
  }

  ProveArgs pa;
  {
    auto* c = app.add_subcommand("prove", "Decide f = g");
    c->add_option("lhs", pa.f)->required();
    c->add_option("rhs", pa.g)->required();
    c->add_option("--var", pa.var)->required();
    c->add_flag("--discrete", pa.discrete, "Treat var as a sequence index");
    c->add_flag("--continuous", pa.continuous, "Treat var as continuous");
    c->callback([&] { job = [&] { return run_prove(g, pa); }; });
  }

  SeriesArgs sa;
  {
    auto* c = app.add_subcommand("series", "Exact Taylor coefficients or sequence values");
    c->add_option("expr", sa.expr)->required();
    c->add_option("--var", sa.var)->required();
    c->add_flag("--discrete", sa.discrete, "Sequence values instead of Taylor coefficients");
    c->add_option("--start", sa.start, "First index (discrete)")->default_val(0);
    c->callback([&] { job = [&] { return run_series(g, sa); }; });
  }

  // An expression such as "-n*x + y" would otherwise be taken for an option.
  std::vector<std::string> args(argv, argv + argc);
  std::vector<char*> av;
  for (auto& a : args) {
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a.find_first_of("*+^()/ '=") != std::string::npos)
      a.insert(a.begin(), ' ');
    av.push_back(a.data());
  }
  try {
    app.parse(static_cast<int>(av.size()), av.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    Result r = job();
    emit(g, r);
    return r.code;
  } catch (const Error& e) {
    bool soft = inconclusive_kind(e.kind());
    if (g.json) {
      json j{{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
      if (soft) j["verdict"] = "INCONCLUSIVE";
      std::cout << j.dump(2) << "\n";
    }
    std::cerr << (soft ? "inconclusive: " : "error: ") << e.what() << "\n";
    return soft ? kInconclusive : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
