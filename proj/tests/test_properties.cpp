// Randomized invariants, 200+ instances each, fixed seeds.
#include <random>
#include <string>

#include "doctest.h"
#include "holo/factor.hpp"
#include "holo/groebner.hpp"
#include "holo/holonomic.hpp"
#include "holo/hyper.hpp"
#include "holo/parser.hpp"
#include "holo/series.hpp"

using namespace holo;

namespace {

constexpr int kInstances = 200;

struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  int nonzero(int lo, int hi) {
    int v = 0;
    while (v == 0) v = uniform(lo, hi);
    return v;
  }
  std::string rat() {
    int d = uniform(1, 3);
    return "(" + std::to_string(nonzero(-4, 4)) + "/" + std::to_string(d) + ")";
  }
  // Polynomial in the given variable, degree <= deg.
  std::string poly(const std::string& v, int deg) {
    std::string s = std::to_string(uniform(-3, 3));
    for (int i = 1; i <= deg; ++i) s += " + (" + std::to_string(uniform(-3, 3)) + ")*" + v + "^" + std::to_string(i);
    return s;
  }
  // Random element of an Ore ring with base variable v and operator op.
  OrePoly ore(const RingPtr& r, const std::string& v, const std::string& op, int bdeg, int odeg) {
    OrePoly p(r);
    while (p.is_zero()) {
      std::string s = "0";
      for (int j = 0; j <= odeg; ++j)
        if (uniform(0, 3)) s += " + (" + poly(v, bdeg) + ")*" + op + "^" + std::to_string(j);
      p = parse_ore(r, s);
    }
    return p;
  }
  // Holonomic atom in x.
  std::string atom() {
    switch (uniform(0, 6)) {
      case 0: return "exp(" + rat() + "*x)";
      case 1: return "sin(" + rat() + "*x)";
      case 2: return "cos(" + rat() + "*x)";
      case 3: return "(1 + " + rat() + "*x)^(" + std::to_string(nonzero(-3, 3)) + "/" + std::to_string(uniform(2, 3)) + ")";
      case 4: return "arctan(" + rat() + "*x)";
      case 5: return "airyai(x)";
      default: return "(" + poly("x", 2) + ")";
    }
  }
};

OrePoly from_poly(const RingPtr& r, const Poly& p) { return parse_ore(r, p.str()); }

}  // namespace

TEST_CASE("property: normal ordering is associative and distributive") {
  Gen g(11);
  auto r = make_ring({"x", "n"}, {{"D", OpKind::D, "x"}, {"N", OpKind::N, "n"}});
  auto rd = make_ring({"x"}, {{"D", OpKind::D, "x"}});
  auto e = series_oracle(parse("exp(2*x)/(1-x)"), "x", 24);
  for (int i = 0; i < kInstances; ++i) {
    auto mixed = [&] {
      OrePoly p = g.ore(r, "x", "D", 1, 1);
      return p * g.ore(r, "n", "N", 1, 1);
    };
    OrePoly a = mixed(), b = mixed(), c = g.ore(r, "x", "N", 1, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    // the product acts as the composition of the actions
    OrePoly p = g.ore(rd, "x", "D", 2, 2), q = g.ore(rd, "x", "D", 2, 2);
    Series lhs = apply(p * q, e);
    SeriesPrefix qe = e;
    qe.a = apply(q, e);
    Series rhs = apply(p, qe);
    size_t m = std::min(lhs.size(), rhs.size());
    REQUIRE(m >= 10);
    for (size_t j = 0; j < m; ++j) CHECK(lhs[j] == rhs[j]);
  }
}

TEST_CASE("property: closure order bounds and annihilation") {
  Gen g(23);
  for (int i = 0; i < kInstances; ++i) {
    std::string fs = g.atom(), gs = g.atom();
    auto p = holonomic_de(parse(fs), "x"), q = holonomic_de(parse(gs), "x");
    auto s = closure_sum(p, q), m = closure_product(p, q);
    CHECK(s.order() <= p.order() + q.order());
    CHECK(m.order() <= p.order() * q.order());
    CHECK(check_annihilates(s, series_oracle(parse("(" + fs + ") + (" + gs + ")"), "x", 30)));
    CHECK(check_annihilates(m, series_oracle(parse("(" + fs + ") * (" + gs + ")"), "x", 30)));
  }
}

TEST_CASE("property: derived equations have zero series residual at depth 30") {
  Gen g(37);
  DeriveOptions opt;
  opt.verify = false;
  for (int i = 0; i < kInstances; ++i) {
    std::string f = g.atom();
    switch (g.uniform(0, 2)) {
      case 0: f = "(" + f + ") + (" + g.poly("x", 1) + ")*(" + g.atom() + ")"; break;
      case 1: f = "(" + f + ")*(" + g.atom() + ")"; break;
      default: f = "(" + f + ")^2"; break;
    }
    auto d = derive_de(parse(f), "x", opt);
    auto s = series_oracle(parse(f), "x", 30);
    REQUIRE(s.depth() >= d.eq.order() + kVerifyMargin);
    bool zero = true;
    for (auto& v : residual(d.eq, s)) zero = zero && v.is_zero();
    INFO(f << " : " << d.eq.str());
    CHECK(zero);
  }
}

TEST_CASE("property: groebner bases, S-polynomials and ideal equality") {
  Gen g(41);
  auto r = make_ring({"x", "n"}, {{"D", OpKind::D, "x"}, {"N", OpKind::N, "n"}});
  auto o1 = TermOrder::lex(*r, {"D", "N", "x", "n"});
  auto o2 = TermOrder::parse(*r, "weighted:1,1,2,2:x,n,D,N");
  GroebnerLimits lim;
  lim.max_pairs = 400;
  int done = 0, tries = 0;
  while (done < kInstances && tries < 4 * kInstances) {
    ++tries;
    std::vector<OrePoly> gens{g.ore(r, "x", "D", 1, 1) * g.ore(r, "n", "N", 0, 1), g.ore(r, "n", "N", 1, 1),
                              g.ore(r, "x", "D", 1, 1)};
    gens.resize(g.uniform(2, 3));
    LeftIdealBasis b1, b2, back;
    try {
      b1 = groebner(gens, o1, lim);
      b2 = groebner(gens, o2, lim);
      back = groebner(b1.gens, o2, lim);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::DiagnosticAbort);
      continue;
    }
    ++done;
    CHECK(is_groebner_basis(b1.gens, o1));
    CHECK(is_groebner_basis(b2.gens, o2));
    for (auto& p : gens) {
      CHECK(left_reduce(p, b1).is_zero());
      CHECK(left_reduce(p, b2).is_zero());
    }
    // reduced bases are unique, so the two routes to o2 agree
    CHECK(back.gens == b2.gens);
  }
  CHECK(done >= kInstances);
}

TEST_CASE("property: right division re-expands") {
  Gen g(53);
  auto rd = make_ring({"x"}, {{"D", OpKind::D, "x"}});
  auto rn = make_ring({"n"}, {{"N", OpKind::N, "n"}});
  for (int i = 0; i < kInstances; ++i) {
    bool diff = i % 2 == 0;
    auto& r = diff ? rd : rn;
    std::string v = diff ? "x" : "n", op = diff ? "D" : "N";
    OrePoly p = g.ore(r, v, op, 2, g.uniform(1, 4)), q = g.ore(r, v, op, 2, g.uniform(1, 2));
    size_t opi = 1;
    if (q.degree(opi) == 0) continue;
    auto d = nc_divide_right(p, q);
    CHECK(from_poly(r, d.multiplier) * p == d.quotient * q + d.remainder);
    CHECK(d.remainder.degree(opi) < q.degree(opi));
    // exact multiples divide with zero remainder
    OrePoly a = g.ore(r, v, op, 1, 2);
    auto e = nc_divide_right(a * q, q);
    CHECK(e.remainder.is_zero());
    CHECK(from_poly(r, e.multiplier) * (a * q) == e.quotient * q);
  }
}

TEST_CASE("property: gosper certificates on constructed summable terms") {
  Gen g(67);
  VarId k = var("k");
  for (int i = 0; i < kInstances; ++i) {
    // h(k+1)/h(k) = s(k); F = G(k+1) - G(k) with G = rho(k) h(k)
    RatFun s = *to_ratfun(parse("(" + g.poly("k", 1) + " + 5*k)/(k + " + std::to_string(g.uniform(1, 4)) + ")"));
    if (s.is_zero()) continue;
    RatFun rho = *to_ratfun(parse("(" + g.poly("k", 2) + ")/(k + " + std::to_string(g.uniform(1, 3)) + ")"));
    if (rho.is_zero()) continue;
    RatFun t = rho.shift(k, 1) * s - rho;  // F/h
    if (t.is_zero()) continue;
    RatFun ratio = s * t.shift(k, 1) / t;
    auto res = gosper(ratio, k);
    INFO("ratio " << ratio.str());
    REQUIRE(res.summable);
    CHECK(gosper_check(ratio, res.certificate, k));
  }
  // arbitrary ratios: any claimed certificate must check
  for (int i = 0; i < kInstances; ++i) {
    RatFun ratio = *to_ratfun(parse("(" + g.poly("k", 2) + ")/(" + g.poly("k", 2) + " + k^3 + 1)"));
    if (ratio.is_zero()) continue;
    GosperResult res;
    try {
      res = gosper(ratio, k);
    } catch (const Error&) {
      continue;
    }
    if (res.summable) CHECK(gosper_check(ratio, res.certificate, k));
  }
}
