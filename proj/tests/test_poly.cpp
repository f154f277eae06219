#include <doctest.h>

#include <random>

#include "triple/poly.hpp"

using namespace triple;

namespace {

Poly P(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.push_back(Rat(x));
  return Poly(std::move(c));
}

LPoly LP(long offset, std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.push_back(Rat(x));
  return LPoly(offset, std::move(c));
}

Poly random_poly(std::mt19937_64& rng, int max_deg, bool nonzero_constant = false) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<long> coef_dist(-4, 4);
  int d = deg_dist(rng);
  std::vector<Rat> c(static_cast<size_t>(d) + 1);
  for (auto& x : c) x = Rat(coef_dist(rng));
  if (c.back() == 0) c.back() = 1;
  if (nonzero_constant && c.front() == 0) c.front() = 1;
  return Poly(std::move(c));
}

// Monic polynomial with the given rational roots; oracle for the resultant
// combinators on rational-root instances.
Poly from_roots(const std::vector<Rat>& roots) {
  Poly p = Poly::one();
  for (const Rat& r : roots) p = p * (Poly::t() - Poly::constant(r));
  return p;
}

}  // namespace

TEST_CASE("normalize_delta forces value one at 1 and nonzero constant term") {
  // t^4 + 1 -> (1/2) t^4 + 1/2
  Poly a = normalize_delta(LPoly(P({1, 0, 0, 0, 1})));
  CHECK(a == Rat(1, 2) * P({1, 0, 0, 0, 1}));
  // t + 2 + t^{-1} -> (1/4) t^2 + (1/2) t + 1/4
  Poly b = normalize_delta(LP(-1, {1, 2, 1}));
  CHECK(b == Rat(1, 4) * P({1, 2, 1}));
  CHECK_THROWS_AS(normalize_delta(LPoly(P({-1, 1}))), Error);   // t - 1 vanishes at 1
  CHECK_THROWS_AS(normalize_delta(LPoly()), Error);             // zero polynomial
  CHECK(normalize_delta(LPoly(P({5}))) == Poly::one());
}

TEST_CASE("symmetry_decompose finds (r, k) with f(1/t) = r t^k f(t)") {
  auto a = symmetry_decompose(LPoly(P({1, 0, 0, 0, 1})));
  REQUIRE(a.has_value());
  CHECK(a->first == 1);
  CHECK(a->second == -4);
  // expansion check: t^2 - 1 satisfies f(1/t) = -t^{-2} f(t)
  auto b = symmetry_decompose(LPoly(P({-1, 0, 1})));
  REQUIRE(b.has_value());
  CHECK(b->first == -1);
  CHECK(b->second == -2);
  // figure-eight polynomial
  auto c = symmetry_decompose(LPoly(P({1, -3, 1})));
  REQUIRE(c.has_value());
  CHECK(c->first == 1);
  CHECK(c->second == -2);
  CHECK_FALSE(symmetry_decompose(LPoly(P({2, 1, 1}))).has_value());  // t^2 + t + 2
  CHECK_FALSE(symmetry_decompose(LPoly(P({-1, 1, 1}))).has_value());

  // defining identity on random symmetric products
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    Poly f = random_poly(rng, 3, true);
    LPoly sym = LPoly(f) * LPoly(f).substitute_inverse();  // always symmetric
    auto rk = symmetry_decompose(sym);
    REQUIRE(rk.has_value());
    LPoly lhs = sym.substitute_inverse();
    LPoly rhs = rk->first * (LPoly(rk->second, {Rat(1)}) * sym);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("resultant uses the Sylvester convention with f-rows first") {
  CHECK(resultant(P({1, 0, 1}), P({-1, 1})) == 2);
  CHECK(resultant(P({-2, 1}), P({-2, 1})) == 0);
  // det [[1, -2], [1, -3]] = -1
  CHECK(resultant(P({-2, 1}), P({-3, 1})) == -1);
  CHECK_THROWS_AS(resultant(Poly(), P({1, 1})), Error);

  // resultant vanishes exactly when the gcd is nonconstant
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 120; ++iter) {
    Poly f = random_poly(rng, 3);
    Poly g = random_poly(rng, 3);
    if (iter % 3 == 0) {
      Poly common = random_poly(rng, 2);
      if (common.degree() < 1) common = P({1, 1});
      f = f * common;
      g = g * common;
    }
    if (f.degree() < 1 && g.degree() < 1) continue;
    bool shared = poly_gcd(f, g).degree() > 0;
    CHECK((resultant(f, g) == 0) == shared);
  }
}

TEST_CASE("recip reverses coefficients") {
  CHECK(recip(P({1, 0, 1})) == P({1, 0, 1}));
  CHECK(recip(P({-1, 2})) == P({2, -1}));
  CHECK(recip(P({1, -3, 1})) == P({1, -3, 1}));
  CHECK_THROWS_AS(recip(P({0, 1})), Error);
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    Poly f = random_poly(rng, 5, true);
    CHECK(recip(recip(f)) == f);
  }
}

TEST_CASE("prodpoly realizes products of root pairs") {
  CHECK(prodpoly(P({-2, 1}), P({-3, 1})) == P({-6, 1}));
  // roots of (t^2+1) x (t^2+1): {-1, -1, 1, 1}
  Poly a = prodpoly(P({1, 0, 1}), P({1, 0, 1}));
  CHECK(a == from_roots({Rat(-1), Rat(-1), Rat(1), Rat(1)}));
  // eisenstein pair: roots {1, 1} u {j, j^2} -> (t-1)^2 (t^2+t+1)
  Poly b = prodpoly(P({1, 1, 1}), P({1, 1, 1}));
  CHECK(b == P({-1, 1}) * P({-1, 1}) * P({1, 1, 1}).monic());

  // vanishing at z*w on rational-root instances
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> root_dist(-5, 5);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Rat> rf, rg;
    for (int k = 0; k < 2; ++k) {
      long r = root_dist(rng);
      rf.push_back(Rat(r == 0 ? 1 : r));
    }
    for (int k = 0; k < 2; ++k) {
      long r = root_dist(rng);
      rg.push_back(Rat(r == 0 ? 2 : r));
    }
    Poly f = from_roots(rf), g = from_roots(rg);
    Poly prod = prodpoly(f, g);
    CHECK(prod.degree() == 4);
    for (const Rat& z : rf)
      for (const Rat& w : rg) CHECK(prod.eval(z * w) == 0);
  }
}

TEST_CASE("rootpow realizes root powers") {
  CHECK(rootpow(P({1, 0, 1}), 2) == P({1, 1}) * P({1, 1}));
  CHECK(rootpow(P({1, 1, 1}), 3) == P({-1, 1}) * P({-1, 1}));
  CHECK(rootpow(P({-2, 1}), 2) == P({-4, 1}));

  // prodpoly(f, f) is divisible by rootpow(f, 2) for squarefree f
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> root_dist(-6, 6);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Rat> roots;
    for (long r = root_dist(rng);; r = root_dist(rng)) {
      if (r == 0) continue;
      Rat q(r);
      bool dup = false;
      for (const Rat& s : roots) dup = dup || s == q;
      if (!dup) roots.push_back(q);
      if (roots.size() == 3) break;
    }
    Poly f = from_roots(roots);
    Poly quot = poly_divexact(prodpoly(f, f), rootpow(f, 2));
    CHECK(quot.degree() == 6);
  }
}

TEST_CASE("mod_inverse via extended Euclid") {
  Poly f = P({1, 0, 1});
  Poly inv = mod_inverse(Poly::t(), f);
  CHECK(inv == P({0, -1}));
  CHECK(mod_inverse(Poly::one(), P({3, 1, 2})) == Poly::one());
  Poly g = P({1, 1, 1});
  Poly a = P({1, 1});
  Poly b = mod_inverse(a, g);
  CHECK(poly_mod(a * b, g) == Poly::one());
  CHECK_THROWS_AS(mod_inverse(P({1, 1}), P({1, 2, 1})), Error);  // t+1 divides (t+1)^2
}

TEST_CASE("ring laws and canonical forms") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 80; ++iter) {
    Poly p = random_poly(rng, 4);
    Poly q = random_poly(rng, 4);
    CHECK((p + q) - q == p);
    CHECK(p * q == q * p);
    LPoly lp = LP(-2, {1}) * LPoly(p);
    LPoly lq = LPoly(q);
    CHECK((lp + lq) - lq == lp);
    CHECK(lp * lq == lq * lp);
  }
  // canonical form: no leading/trailing zeros survive construction
  CHECK(Poly({Rat(0), Rat(0)}).is_zero());
  CHECK(LP(3, {0, 0}).is_zero());
  CHECK(LP(2, {0, 1}).lowest() == 3);
}

TEST_CASE("polynomial division, gcd, powmod") {
  Poly f = P({2, 0, 1}) * P({-1, 1}) + P({5});
  auto qr = poly_divmod(f, P({2, 0, 1}));
  CHECK(qr.quot == P({-1, 1}));
  CHECK(qr.rem == P({5}));
  CHECK(poly_gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
  auto e = poly_egcd(P({1, 0, 1}), P({1, 1}));
  CHECK(e.g == Poly::one());
  CHECK(e.u * P({1, 0, 1}) + e.v * P({1, 1}) == Poly::one());
  CHECK(poly_powmod(Poly::t(), Int(4), P({1, 0, 1})) == Poly::one());
}

TEST_CASE("Laurent substitute_inverse") {
  LPoly f = LP(-1, {1, 2, 1});  // t^{-1} + 2 + t
  CHECK(f.substitute_inverse() == f);
  LPoly g = LP(0, {1, 1});  // 1 + t
  CHECK(g.substitute_inverse() == LP(-1, {1, 1}));
  CHECK(g.eval(2) == 3);
  CHECK(f.eval(2) == Rat(9, 2));
}

TEST_CASE("root-at-zero rejections for the resultant combinators") {
  CHECK_THROWS_WITH_AS(prodpoly(P({0, 1}), P({1, 1})), doctest::Contains("RootAtZero"), Error);
  CHECK_THROWS_WITH_AS(prodpoly(P({1, 1}), P({0, 0, 1})), doctest::Contains("RootAtZero"), Error);
  CHECK_THROWS_WITH_AS(rootpow(P({0, 1}), 2), doctest::Contains("RootAtZero"), Error);
  CHECK_THROWS_AS(prodpoly(Poly(), P({1, 1})), Error);
  CHECK_THROWS_AS(rootpow(Poly(), 3), Error);
}
