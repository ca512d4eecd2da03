#include <random>

#include "doctest.h"
#include "holo/arith.hpp"
#include "holo/linalg.hpp"

using namespace holo;

namespace {
Poly X() { return Poly::variable("x"); }
Poly N() { return Poly::variable("n"); }
Poly K() { return Poly::variable("k"); }

Poly random_poly(std::mt19937& rng, int deg) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, deg);
  Poly p;
  for (int i = 0; i < 3; ++i) p += Poly(c(rng)) * X().pow(e(rng)) * N().pow(e(rng) / 2);
  return p;
}
}  // namespace

TEST_CASE("poly ring operations") {
  CHECK((X() + 1) + (X() - 1) == X().scale(2));
  CHECK((X() + 1) * (X() - 1) == X().pow(2) - 1);
  CHECK(((X().pow(2) - 1) - (X().pow(2) - 1)).is_zero());
  CHECK((X().pow(2) - 1).str() == "x^2 - 1");
}

TEST_CASE("gcd") {
  CHECK(poly_gcd(X().pow(2) - 1, X() - 1) == X() - 1);
  CHECK(poly_gcd(X().scale(2), X().pow(2).scale(4)) == X());
  CHECK(poly_gcd(N().pow(2) + N().scale(3) + 2, N() + 2) == N() + 2);
  CHECK(poly_gcd(Poly(), X().scale(6) + 4) == X().scale(3) + 2);
  Poly g = (X() * N() + 1);
  CHECK(poly_gcd(g * (X() + N()), g * (X() - N())) == g);
}

TEST_CASE("shift dispersion") {
  VarId k = var("k");
  CHECK(shift_dispersion(K() + 3, K(), k) == std::vector<int>{3});
  CHECK(shift_dispersion(K(), K(), k) == std::vector<int>{0});
  CHECK(shift_dispersion((K() + 1) * (K() + 4), K(), k) == std::vector<int>{1, 4});
  // parameter n inside: q = k + n + 2, r = k + n
  CHECK(shift_dispersion(K() + N() + 2, K() + N(), k) == std::vector<int>{2});
}

TEST_CASE("roots and resultant") {
  VarId x = var("x");
  auto r = rational_roots((X().scale(2) - 1) * (X() + 3) * X(), x);
  CHECK(r == std::vector<Rat>{Rat(-3), Rat(0), Rat(1, 2)});
  CHECK(integer_roots((X() - 5) * (X() + 2) * (X().scale(3) - 1), x) == std::vector<Int>{-2, 5});
  // Res(x - a, x - b) = a - b
  CHECK(resultant(X() - 2, X() - 5, x) == Poly(-3));
  auto sf = squarefree((X() - 1).pow(2) * (X() + 2), x);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].first == X() + 2);
  CHECK(sf[1].first == X() - 1);
  CHECK(sf[1].second == 2);
}

TEST_CASE("ratfun normalization is canonical") {
  RatFun a(X().pow(2) - 1, X().scale(2) - 2);
  CHECK(a.num() == (X() + 1).scale(Rat(1, 2)));
  CHECK(a.den() == Poly(1));
  RatFun b(-(X() + 1), -(X().scale(2) + 4));
  CHECK(b.den().canonical_lc() > 0);
  CHECK(RatFun(X() + 1, X() + 2) + RatFun(1, 1) - RatFun(1) == RatFun(X() + 1, X() + 2));
}

TEST_CASE("property: (a*b)/b == a and gcd associates" * doctest::description("200 random instances")) {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    Poly a = random_poly(rng, 3), b = random_poly(rng, 3), g = random_poly(rng, 2);
    if (b.is_zero() || g.is_zero()) continue;
    CHECK(RatFun(a * b, b) == RatFun(a));
    RatFun r(a, b);
    CHECK(RatFun(r.num(), r.den()) == r);
    Poly lhs = poly_gcd(a * g, b * g);
    Poly rhs = (g * poly_gcd(a, b)).primitive();
    if (!a.is_zero()) CHECK(lhs == rhs);
  }
}

TEST_CASE("nullspace") {
  // rows: [n, 1, -1]  -> solutions over Q(n)
  PolyMatrix m{{N(), Poly(1), Poly(-1)}};
  auto ns = nullspace(m, 3);
  CHECK(ns.size() == 2);
  for (auto& v : ns) CHECK((N() * v[0] + v[1] - v[2]).is_zero());
  RatMatrix q{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  auto nq = nullspace(q, 2);
  REQUIRE(nq.size() == 1);
  CHECK(nq[0][0] + 2 * nq[0][1] == 0);
}
