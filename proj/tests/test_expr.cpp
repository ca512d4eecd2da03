#include "doctest.h"
#include "holo/parser.hpp"
#include "holo/registry.hpp"

using namespace holo;

TEST_CASE("parse canonical forms") {
  CHECK(to_string(parse("ArcSin(x)^2")) == "arcsin(x)^2");
  Expr b = parse("Binomial(n,k)^2");
  Expr want = ex::pow(ex::mul({ex::call("factorial", {ex::sym("n")}),
                               ex::pow(ex::call("factorial", {ex::sym("k")}), ex::num(-1)),
                               ex::pow(ex::call("factorial", {ex::sub(ex::sym("n"), ex::sym("k"))}), ex::num(-1))}),
                      ex::num(2));
  CHECK(equal(b, want));
  Expr t = parse("tan(x+y)");
  CHECK(equal(t, ex::mul(ex::call("sin", {parse("x+y")}), ex::pow(ex::call("cos", {parse("x+y")}), ex::num(-1)))));
  CHECK(equal(parse("x/y"), ex::mul(ex::sym("x"), ex::pow(ex::sym("y"), ex::num(-1)))));
  CHECK(equal(parse("n!"), ex::call("factorial", {ex::sym("n")})));
  CHECK(equal(parse("Gamma(n+1)"), parse("factorial(n)")));
  CHECK(equal(parse("SIN(x)"), parse("sin(x)")));
  CHECK(equal(parse("sqrt(1+x)"), parse("(1+x)^(1/2)")));
  CHECK(equal(parse("0.25"), ex::num(Rat(1, 4))));
  CHECK(parse("tan(x)", ParseOptions{false})->name == "tan");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("x + "), Error);
  CHECK_THROWS_AS(parse("foo(x)"), Error);
  try {
    parse("sin(x))");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
  try {
    parse("frob(x)");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownPrimitive);
  }
}

TEST_CASE("printer round trip") {
  const char* inputs[] = {
      "ArcSin(x)^2",
      "sin(x+y)*(sin(x)*sin(y) - cos(x)*cos(y))",
      "sqrt(1+x) + 1/sqrt(1+x)",
      "(n! + k!^2)/k",
      "(-1)^k*Binomial(n,k)*Binomial(3*k,n)",
      "Sum(Binomial(n,k)^3, k, 0, n)",
      "Integrate(exp(-x^2)*HermiteH(n,x), x, -Infinity, Infinity)",
      "x^n*exp(-x^2-y/x)",
      "GegenbauerC(n+1,-1/2,x) - GegenbauerC(n,-1/2,x)",
      "exp(x) + x/10^1000",
      "-x^2/3 + 2*y/(x+1)^3",
  };
  for (auto* s : inputs) {
    Expr e = parse(s);
    CHECK_MESSAGE(equal(parse(to_string(e)), e), s, " -> ", to_string(e));
  }
}

TEST_CASE("registry contents") {
  for (auto* n : {"exp", "sin", "cos", "arcsin", "arctan", "airyai", "legendrep", "hermiteh", "gegenbauerc", "factorial"})
    CHECK(find_primitive(n) != nullptr);
  VarId u = var("u");
  auto e = find_primitive("exp")->de({}, u);
  CHECK(e.str() == "-F + F' = 0");
  auto a = find_primitive("arcsin")->de({}, u);
  CHECK(a.str() == "u*F' + (u^2-1)*F'' = 0");
  auto l = find_primitive("legendrep")->re({RatFun::variable("x")}, var("n"));
  CHECK(l.str() == "(n+1)*a(n) - (2*n*x+3*x)*a(n+1) + (n+2)*a(n+2) = 0");
}

TEST_CASE("equation text") {
  auto d = parse_equation("F' + 3*x*F'' + (x^2-1)*F''' = 0", "x", OpKind::D);
  CHECK(d.order() == 3);
  CHECK(parse_equation(d.str(), "x", OpKind::D).same_as(d));
  CHECK(parse_equation("(x^2-1)*F^(4) - F = 0", "x", OpKind::D).order() == 4);
  auto o = parse_equation("(x^2-1)*D^2 - (1+x)*D + 1 - n^2", "x", OpKind::D);
  CHECK(o.order() == 2);
  CHECK(o.coeffs[1] == *to_ratfun(parse("-(1+x)")));
  auto r = parse_equation("(n+1)*a(n+1) - a(n) = 0", "n", OpKind::N);
  CHECK(r.order() == 1);
  CHECK(parse_equation(r.str(), "n", OpKind::N).same_as(r));
  // a(n-1) shifts the whole equation
  auto s = parse_equation("n*a(n) - a(n-1) = 0", "n", OpKind::N);
  CHECK(s.same_as(r));
  CHECK(parse_equation("N + 3", "n", OpKind::N).coeffs[0] == RatFun(3));
  CHECK_THROWS_AS(parse_equation("1/D", "x", OpKind::D), Error);
}
