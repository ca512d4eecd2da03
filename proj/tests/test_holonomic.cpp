#include "doctest.h"
#include "holo/holonomic.hpp"
#include "holo/hyper.hpp"
#include "holo/parser.hpp"
#include "holo/series.hpp"

using namespace holo;

namespace {
RatFun R(const char* s) { return *to_ratfun(parse(s)); }
LinearOperatorEq eq(const char* v, OpKind k, std::vector<const char*> cs) {
  std::vector<RatFun> c;
  for (auto* s : cs) c.push_back(R(s));
  return LinearOperatorEq(var(v), k, c);
}
LinearOperatorEq D(const char* x, std::vector<const char*> cs) { return eq(x, OpKind::D, cs); }
LinearOperatorEq N(const char* n, std::vector<const char*> cs) { return eq(n, OpKind::N, cs); }
}  // namespace

TEST_CASE("holonomic_de examples") {
  auto d = derive_de(parse("ArcSin(x)^2"), "x");
  CHECK(d.verified);
  CHECK(d.eq.str() == "F' + 3*x*F'' + (x^2-1)*F''' = 0");
  CHECK(holonomic_de(parse("AiryAi(x)"), "x").same_as(D("x", {"-x", "0", "1"})));
  CHECK(holonomic_de(parse("AiryAi(x)^2"), "x").same_as(D("x", {"2", "4*x", "0", "-1"})));
  CHECK(holonomic_de(parse("sin(x+y)*(sin(x)*sin(y)-cos(x)*cos(y))"), "x").same_as(D("x", {"0", "4", "0", "1"})));
  CHECK(holonomic_de(parse("cos(x+y)*(sin(x)*cos(y)+cos(x)*sin(y))"), "x").same_as(D("x", {"0", "4", "0", "1"})));
  CHECK(holonomic_de(parse("sin(y)*cos(y)"), "y").same_as(D("y", {"0", "4", "0", "1"})));
  CHECK(holonomic_de(parse("sin(2*y)/2"), "y").same_as(D("y", {"4", "0", "1"})));
  CHECK(holonomic_de(parse("sqrt(1+x)+1/sqrt(1+x)"), "x").same_as(D("x", {"-1", "4*(1+x)", "4*(1+x)^2"})));
  auto lp = holonomic_de(parse("LegendreP(n,x)+LegendreP(n+1,x)"), "x");
  CHECK(lp.order() == 4);
  CHECK(lp.canonical().poly_coeffs()[4] == (Poly::variable("x") - Poly(1)).pow(2) * (Poly::variable("x") + Poly(1)).pow(2));
}

TEST_CASE("holonomic_de rejects") {
  try {
    derive_de(parse("tan(x)", ParseOptions{false}), "x");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonHolonomicInput);
  }
  try {
    derive_de(parse("tan(x)"), "x");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonHolonomicInput);
  }
  try {
    derive_re(parse("Hypergeometric1F1(n/2+m/2, n+1, -b^2/(4*a^2))"), "n");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ExtendedAlgorithmRequired);
  }
}

TEST_CASE("holonomic_re examples") {
  CHECK(holonomic_re(parse("Binomial(n,k)^2"), "n").same_as(N("n", {"(1+n)^2", "-(1-k+n)^2"})));
  CHECK(holonomic_re(parse("Binomial(n,k)^2"), "k").same_as(N("k", {"(n-k)^2", "-(1+k)^2"})));
  auto d = derive_re(parse("(n! + k!^2)/k"), "n");
  CHECK(d.verified);
  CHECK(d.eq.same_up_to_shift(N("n", {"(1+n)^2", "-(1+3*n+n^2)", "n"})));
  auto e = derive_re(parse("(n! + k!^2)/k"), "k");
  CHECK(e.verified);
  CHECK(e.eq.same_up_to_shift(N("k", {"k*(1+k)^3*(3+k)", "-(1+k)*(1+3*k+k^2)*(3+3*k+k^2)", "k*(2+k)^2"})));
  CHECK(holonomic_re(parse("LegendreP(n,x)"), "n").same_as(N("n", {"n+1", "-(2*n+3)*x", "n+2"})));
}

TEST_CASE("term ratio and gosper") {
  CHECK(term_ratio(parse("Binomial(n,k)^2"), "k") == R("(n-k)^2/(k+1)^2"));
  CHECK(term_ratio(parse("a^n"), "n") == R("a"));
  CHECK(term_ratio(parse("(-1)^k*Binomial(n,k)*Binomial(3*k,n)"), "k") ==
        R("-((n-k)/(k+1))*(3*k+3)*(3*k+2)*(3*k+1)/((3*k+3-n)*(3*k+2-n)*(3*k+1-n))"));
  CHECK_THROWS_AS(term_ratio(parse("n!+k!^2"), "n"), Error);
  CHECK_THROWS_AS(term_ratio(parse("(n/2)!"), "n"), Error);
  VarId k = var("k");
  auto g = gosper(term_ratio(parse("k*k!"), "k"), k);
  CHECK(g.summable);
  CHECK(g.certificate == R("1/k"));
  auto h = gosper(term_ratio(parse("1/k"), "k"), k);
  CHECK_FALSE(h.summable);
  CHECK(h.degree_bound == 0);
  auto l = gosper(term_ratio(parse("k"), "k"), k);
  CHECK(l.summable);
  CHECK(l.certificate == R("(k-1)/2"));
}

TEST_CASE("zeilberger examples") {
  auto z1 = zeilberger(hyper_term(parse("Binomial(n,k)^2"), "n", "k"));
  CHECK(z1.certified);
  CHECK(z1.recurrence.same_as(N("n", {"-2*(1+2*n)", "1+n"})));
  auto z2 = zeilberger(hyper_term(parse("Binomial(n,k)^3"), "n", "k"));
  CHECK(z2.order == 2);
  auto out16 = N("n", {"-8*(1+n)^2", "-(16+21*n+7*n^2)", "(2+n)^2"});
  CHECK(z2.recurrence.same_as(out16));
  auto z3 = zeilberger(hyper_term(parse("Binomial(n,k)^2*Binomial(2*k,n)"), "n", "k"));
  CHECK(z3.recurrence.same_as(out16));
  auto z4 = zeilberger(hyper_term(parse("(-1)^k*Binomial(n,k)*Binomial(3*k,n)"), "n", "k"));
  CHECK(z4.recurrence.same_as(N("n", {"9*(n+1)", "3*(5*n+7)", "2*(2*n+3)"})));
  auto s = sum_initial_values(parse("Binomial(n,k)^3"), "n", "k", 0, 5);
  std::vector<long> want{1, 2, 10, 56, 346};
  for (int i = 0; i < 5; ++i) CHECK(s[i] == RatFun(Rat(want[i])));
  CHECK(sum_initial_values(parse("Binomial(n,k)^2*Binomial(2*k,n)"), "n", "k", 1, 1)[0] == RatFun(2));
  CHECK(sum_initial_values(parse("(-1)^k*Binomial(n,k)*Binomial(3*k,n)"), "n", "k", 1, 1)[0] == RatFun(-3));
  auto d = derive_re(parse("Sum(Binomial(n,k)^3,k,0,n)"), "n");
  CHECK(d.verified);
}
