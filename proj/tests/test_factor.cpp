#include "doctest.h"
#include "holo/factor.hpp"
#include "holo/holonomic.hpp"
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
bool contains(const std::vector<LinearOperatorEq>& fs, const LinearOperatorEq& q) {
  for (auto& f : fs)
    if (f.same_as(q)) return true;
  return false;
}
const char* kGegenbauer[] = {"(n-1)*n^2*(n+1)", "0", "2*(n-1)*(n+1)*(1-x)*(1+x)", "4*(x-1)*x*(x+1)",
                             "(x-1)^2*(x+1)^2"};
LinearOperatorEq gegenbauer4() {
  return eq("x", OpKind::D, {kGegenbauer[0], kGegenbauer[1], kGegenbauer[2], kGegenbauer[3], kGegenbauer[4]});
}
}  // namespace

TEST_CASE("nc division") {
  auto r = make_ring({"n"}, {{"N", OpKind::N, "n"}});
  auto d = nc_divide_right(parse_ore(r, "2*(2*n+3)*N^2 + 3*(5*n+7)*N + 9*(n+1)"), parse_ore(r, "N + 3"));
  CHECK(d.quotient == parse_ore(r, "(4*n+6)*N + 3*(n+1)"));
  CHECK(d.remainder.is_zero());
  CHECK(d.multiplier == Poly(1));
  auto e = nc_divide_right(parse_ore(r, "N^2"), parse_ore(r, "N - n"));
  CHECK(e.remainder == parse_ore(r, "n*(n+1)"));
  CHECK(e.quotient * parse_ore(r, "N - n") + e.remainder == parse_ore(r, "N^2"));
  auto s = make_ring({"x"}, {{"D", OpKind::D, "x"}});
  auto f = nc_divide_right(parse_ore(s, "D^2 - 1"), parse_ore(s, "D - 1"));
  CHECK(f.quotient == parse_ore(s, "D + 1"));
  CHECK(f.remainder.is_zero());
  // non-monic divisor: the multiplier clears denominators
  auto g = nc_divide_right(parse_ore(s, "D^2"), parse_ore(s, "x*D - 1"));
  CHECK(g.quotient * parse_ore(s, "x*D - 1") + g.remainder == parse_ore(s, g.multiplier.str()) * parse_ore(s, "D^2"));
}

TEST_CASE("right factors") {
  auto p = eq("n", OpKind::N, {"9*(n+1)", "3*(5*n+7)", "2*(2*n+3)"});
  auto fs = right_factors(p, 1);
  CHECK(contains(fs, eq("n", OpKind::N, {"3", "1"})));
  auto fw = factor_with(p, eq("n", OpKind::N, {"3", "1"}));
  REQUIRE(fw);
  CHECK(fw->left.same_as(eq("n", OpKind::N, {"3*(n+1)", "4*n+6"})));
  CHECK(scale_left(fw->content, compose(fw->left, fw->right)).coeffs == p.coeffs);

  auto cubic = eq("n", OpKind::N, {"-(n+2)*(n+1)^2", "(3*n+5)*(n+2)", "-(3*n+7)", "1"});
  auto cf = right_factors(cubic, 1);
  CHECK(contains(cf, eq("n", OpKind::N, {"-n-1", "1"})));
  CHECK(contains(cf, eq("n", OpKind::N, {"-n-2", "1"})));
  CHECK(right_factors(cubic, 3).front().same_as(cubic));

  auto g = right_factors(gegenbauer4(), 2);
  CHECK(contains(g, eq("x", OpKind::D, {"1-n^2", "-(1+x)", "x^2-1"})));
  for (auto& q : g) CHECK(right_divides(q, gegenbauer4()));

  auto ex = right_factors(eq("x", OpKind::D, {"-1", "0", "1"}), 1);
  CHECK(contains(ex, eq("x", OpKind::D, {"-1", "1"})));
  CHECK(contains(ex, eq("x", OpKind::D, {"1", "1"})));
}

TEST_CASE("compatibility") {
  CHECK(compatible(eq("x", OpKind::D, {"-x", "2*(2+x)*(1+x)"}), parse("sqrt(1+x)+1/sqrt(1+x)")));
  CHECK(compatible(eq("x", OpKind::D, {"1-n^2", "-(1+x)", "x^2-1"}),
                   parse("GegenbauerC(n+1,-1/2,x) - GegenbauerC(n,-1/2,x)")));
  CHECK(!compatible(eq("x", OpKind::D, {"-1", "1"}), parse("sin(x)")));
  CHECK_THROWS_AS(check_compatible(eq("x", OpKind::D, {"1", "x"}), parse("1/x"), CompatOptions{Rat(0)}), Error);
  CHECK(compatible(eq("n", OpKind::N, {"3", "1"}), parse("Sum((-1)^k*Binomial(n,k)*Binomial(3*k,n), k)")));
}

TEST_CASE("normal form") {
  Expr h = parse("GegenbauerC(n+1,-1/2,x) - GegenbauerC(n,-1/2,x)");
  auto nf = normal_form(gegenbauer4(), h);
  CHECK(nf.eq.same_as(eq("x", OpKind::D, {"1-n^2", "-(1+x)", "x^2-1"})));
  CHECK(normal_form(nf.eq, h).eq.same_as(nf.eq));

  Expr s = parse("sqrt(1+x)+1/sqrt(1+x)");
  auto ns = normal_form(holonomic_de(s, "x"), s);
  CHECK(ns.eq.same_as(eq("x", OpKind::D, {"-x", "2*(2+x)*(1+x)"})));
  CHECK(ns.certified_minimal);

  auto ne = normal_form(eq("x", OpKind::D, {"-1", "1"}), parse("exp(x)"));
  CHECK(ne.eq.same_as(eq("x", OpKind::D, {"-1", "1"})));

  Expr z = parse("Sum((-1)^k*Binomial(n,k)*Binomial(3*k,n), k)");
  auto nz = normal_form(eq("n", OpKind::N, {"9*(n+1)", "3*(5*n+7)", "2*(2*n+3)"}), z);
  CHECK(nz.eq.same_as(eq("n", OpKind::N, {"3", "1"})));
}

TEST_CASE("two-term recurrences") {
  auto a = solve_two_term(eq("n", OpKind::N, {"3", "1"}), 0, {ex::num(1)});
  for (long n = 0; n <= 8; ++n) {
    Rat want = 1;
    for (long i = 0; i < n; ++i) want *= -3;
    CHECK(sequence_value(a.branches[0], {{"n", n}}) == RatFun(want));
  }
  auto g = solve_two_term(eq("n", OpKind::N, {"-(n+1)", "1"}), 0, {parse("sqrt(pi)")});
  CHECK(to_string(g.branches[0]).find("factorial(n)") != std::string::npos);
  CHECK(to_string(g.branches[0]).find("pi") != std::string::npos);
  // arcsin^2 coefficients on even indices from a(2) = 1
  auto s = solve_two_term(eq("n", OpKind::N, {"n^3", "0", "-n*(n+1)*(n+2)"}), 2, {ex::num(1), ex::num(0)});
  Expr want = parse("4^n*n!^2/((1+n)*(1+2*n)!)");
  for (long n = 0; n <= 8; ++n)
    CHECK(sequence_value(s.branches[0], {{"n", n}}) == sequence_value(want, {{"n", n}}));
  CHECK(s.display[0].rfind("a(2*n+2) = ", 0) == 0);
  CHECK_THROWS_AS(solve_two_term(eq("n", OpKind::N, {"1", "1", "1"}), 0, {}), Error);
}
