#include "doctest.h"
#include "holo/operator_eq.hpp"
#include "holo/parser.hpp"
#include "holo/series.hpp"

using namespace holo;

namespace {
RatFun R(const char* s) { return *to_ratfun(parse(s)); }
LinearOperatorEq D(const char* x, std::vector<const char*> cs) {
  std::vector<RatFun> c;
  for (auto* s : cs) c.push_back(R(s));
  return LinearOperatorEq(var(x), OpKind::D, c);
}
LinearOperatorEq N(const char* n, std::vector<const char*> cs) {
  std::vector<RatFun> c;
  for (auto* s : cs) c.push_back(R(s));
  return LinearOperatorEq(var(n), OpKind::N, c);
}
}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure_sum(D("x", {"-1", "1"}), D("x", {"-1", "1"})).same_as(D("x", {"-1", "1"})));
  CHECK(closure_sum(D("x", {"-1", "1"}), D("x", {"1", "1"})).same_as(D("x", {"-1", "0", "1"})));
  CHECK(closure_product(D("x", {"-1", "1"}), D("x", {"-1", "1"})).same_as(D("x", {"-2", "1"})));
  auto airy = D("x", {"-x", "0", "1"});
  CHECK(closure_product(airy, airy).same_as(D("x", {"2", "4*x", "0", "-1"})));
  auto sc = D("y", {"1", "0", "1"});
  CHECK(closure_product(sc, sc).same_as(D("y", {"0", "4", "0", "1"})));
}

TEST_CASE("substitution") {
  VarId x = var("x");
  CHECK(substitute_rational(D("x", {"-1", "1"}), R("2*x"), x).same_as(D("x", {"-2", "1"})));
  CHECK(substitute_rational(D("x", {"1", "0", "1"}), R("x+y"), x).same_as(D("x", {"1", "0", "1"})));
  auto s = substitute_rational(D("x", {"1", "0", "1"}), R("x^2"), x);
  CHECK(s.same_as(D("x", {"4*x^3", "-1", "x"})));
  CHECK(check_annihilates(s, series_oracle(parse("sin(x^2)"), "x", 30)));
  CHECK_THROWS_AS(substitute_rational(D("x", {"1", "0", "1"}), R("y"), x), Error);
}

TEST_CASE("de_to_re and re_to_de") {
  auto a2 = D("x", {"0", "1", "3*x", "x^2-1"});
  auto re = de_to_re(a2, var("n"));
  CHECK(re.same_as(N("n", {"n^3", "0", "-n*(n+1)*(n+2)"})));
  CHECK(re.normalized().str() == "-n^3*a(n) + (n^3+3*n^2+2*n)*a(n+2) = 0");
  CHECK(de_to_re(D("x", {"-1", "1"}), var("n")).same_as(N("n", {"1", "-(n+1)"})));
  CHECK(re_to_de(N("n", {"-1", "n+1"}), var("x")).same_as(D("x", {"-1", "1"})));
  auto cb = re_to_de(N("n", {"-2*(1+2*n)", "1+n"}), var("x"));
  CHECK(cb.same_as(D("x", {"-2", "1-4*x"})));
  CHECK(check_annihilates(cb, series_oracle(parse("(1-4*x)^(-1/2)"), "x", 30)));
  // factorial generating function: a(n+1) = (n+1) a(n)
  auto fg = re_to_de(N("n", {"-(n+1)", "1"}), var("x"));
  CHECK(fg.order() == 2);
  SeriesPrefix s;
  s.var = var("x");
  for (long k = 0; k <= 30; ++k) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), k);
    s.a.push_back(RatFun(Rat(f)));
  }
  CHECK(check_annihilates(fg, s));
  // x^2 f' + (x-1) f + 1 = 0 made homogeneous
  auto inh = homogenize(D("x", {"x-1", "x^2"}), R("1"));
  CHECK(check_annihilates(inh, s));
  auto rr = de_to_re(inh, var("n"));
  CHECK(check_annihilates(rr, SeriesPrefix{var("n"), true, 0, 0, s.a}));
}

TEST_CASE("series oracle") {
  auto s = series_oracle(parse("ArcSin(x)^2"), "x", 6);
  std::vector<Rat> want{0, 0, 1, 0, Rat(1, 3), 0, Rat(8, 45)};
  for (int i = 0; i <= 6; ++i) CHECK(s.a[i] == RatFun(want[i]));
  auto e = series_oracle(parse("exp(x)"), "x", 3);
  CHECK(e.a[3] == RatFun(Rat(1, 6)));
  auto b = sequence_oracle(parse("Binomial(4,k)"), "k", 0, 5);
  std::vector<long> bw{1, 4, 6, 4, 1};
  for (int i = 0; i < 5; ++i) CHECK(b.a[i] == RatFun(Rat(bw[i])));
  CHECK(sequence_value(parse("Binomial(n,k)"), {{"n", 3}, {"k", 5}}).is_zero());
  CHECK(sequence_value(parse("Binomial(-1,k)"), {{"k", 3}}) == RatFun(-1));
  auto ai = series_oracle(parse("AiryAi(x)"), "x", 20);
  CHECK(check_annihilates(D("x", {"-x", "0", "1"}), ai));
  CHECK_FALSE(check_annihilates(D("x", {"-1", "1"}), series_oracle(parse("sin(x)"), "x", 30)));
  CHECK(check_annihilates(D("x", {"-1", "4*(1+x)", "4*(1+x)^2"}), series_oracle(parse("sqrt(1+x)+1/sqrt(1+x)"), "x", 30)));
  CHECK_THROWS_AS(check_annihilates(D("x", {"-1", "1"}), series_oracle(parse("exp(x)"), "x", 5)), Error);
}
