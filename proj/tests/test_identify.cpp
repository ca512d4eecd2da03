#include "doctest.h"
#include "holo/identify.hpp"
#include "holo/parser.hpp"

using namespace holo;

namespace {
Verdict prove(const char* f, const char* g, const char* v) { return prove_equal(parse(f), parse(g), v); }
}  // namespace

TEST_CASE("identities in a continuous variable") {
  auto t = prove("tan(x+y)", "(tan(x)+tan(y))/(1-tan(x)*tan(y))", "x");
  CHECK(t.kind == VerdictKind::Proved);
  REQUIRE(t.common);
  CHECK(t.common->order() == 3);
  CHECK(recheck(t, parse("tan(x+y)"), parse("(tan(x)+tan(y))/(1-tan(x)*tan(y))")));

  auto s = prove("cos(y)*sin(y)", "sin(2*y)/2", "y");
  CHECK(s.kind == VerdictKind::Proved);
  CHECK(recheck(s, parse("cos(y)*sin(y)"), parse("sin(2*y)/2")));

  auto e = prove("exp(x)", "exp(x) + x/10^1000", "x");
  CHECK(e.kind == VerdictKind::Refuted);
  CHECK(e.witness_index == 1);

  CHECK(prove("arcsin(x)^2", "arcsin(x)^2", "x").kind == VerdictKind::Proved);
  CHECK(prove("sin(x)^2 + cos(x)^2", "1", "x").kind == VerdictKind::Proved);
}

TEST_CASE("identities in a discrete variable") {
  const char* a = "Sum(Binomial(n,k)^3, k, 0, n)";
  const char* b = "Sum(Binomial(n,k)^2*Binomial(2*k,n), k, 0, n)";
  auto v = prove(a, b, "n");
  CHECK(v.kind == VerdictKind::Proved);
  CHECK(v.discrete);
  REQUIRE(v.common);
  CHECK(v.common->order() == 2);
  CHECK(recheck(v, parse(a), parse(b)));
  CHECK(prove(b, a, "n").kind == VerdictKind::Proved);

  for (int d : {3, 4, 5}) {
    std::string s = "Sum((-1)^k*Binomial(n,k)*Binomial(" + std::to_string(d) + "*k,n), k)";
    std::string c = "(-" + std::to_string(d) + ")^n";
    CHECK(prove_equal(parse(s), parse(c), "n").kind == VerdictKind::Proved);
  }
  auto w = prove("Sum(Binomial(n,k), k, 0, n)", "3^n", "n");
  CHECK(w.kind == VerdictKind::Refuted);
}

TEST_CASE("inconclusive verdicts") {
  auto v = prove("tan(x)", "tan(x)", "x");
  CHECK(v.kind == VerdictKind::Proved);
  ParseOptions raw;
  raw.rewrite_tan = false;
  auto u = prove_equal(parse("tan(x)", raw), parse("sin(x)", raw), "x");
  CHECK(u.kind == VerdictKind::Inconclusive);
  CHECK(u.reason.find("NonHolonomicInput") != std::string::npos);
}
