#include <doctest.h>

#include "corpus.hpp"

using namespace triple;
using corpus::P;

TEST_CASE("validate_module accepts the paper examples") {
  BlanchfieldModule a = corpus::example_a();
  CHECK(a.count() == 2);
  CHECK(a.gen(0).delta_monic == P({1, 0, 0, 0, 1}));
  CHECK(a.gen(1).delta_monic == P({1, 0, 1}));
  CHECK(a.global_delta() == normalize_delta(LPoly(P({1, 0, 0, 0, 1}) * P({1, 0, 1}))));
  CHECK(a.global_delta().eval(1) == 1);
  CHECK(a.global_delta().coeff(0) != 0);

  BlanchfieldModule b = corpus::example_b();
  CHECK(b.count() == 2);
  CHECK(b.gen(0).mult == 3);
  CHECK(b.gen(1).mult == 2);
}

TEST_CASE("validate_module rejects bad kinds") {
  // hyperbolic t+1 with even multiplicity
  CHECK_THROWS_WITH_AS(BlanchfieldModule::validate({corpus::hyp({1, 1}, 2)}),
                       doctest::Contains("InvalidKindCondition"), Error);
  // symmetric with non-symmetric prime
  CHECK_THROWS_WITH_AS(BlanchfieldModule::validate({corpus::sym({2, 1, 1}, 1)}),
                       doctest::Contains("InvalidKindCondition"), Error);
  // symmetric t+1 with odd multiplicity
  CHECK_THROWS_WITH_AS(BlanchfieldModule::validate({corpus::sym({1, 1}, 1)}),
                       doctest::Contains("InvalidKindCondition"), Error);
  // hyperbolic with symmetric prime
  CHECK_THROWS_WITH_AS(BlanchfieldModule::validate({corpus::hyp({1, 0, 1}, 1)}),
                       doctest::Contains("InvalidKindCondition"), Error);
  // reducible prime: t^2 - 4
  CHECK_THROWS_WITH_AS(BlanchfieldModule::validate({corpus::sym({-4, 0, 1}, 1)}),
                       doctest::Contains("NotIrreducible"), Error);
  // prime vanishing at 1
  CHECK_THROWS_WITH_AS(BlanchfieldModule::validate({corpus::sym({-1, 1}, 1)}),
                       doctest::Contains("NormalizationFailure"), Error);
  // pairing sharing a factor with the prime
  CHECK_THROWS_WITH_AS(BlanchfieldModule::validate({corpus::sym({1, 0, 1}, 2, {{1, 0, 1}})}),
                       doctest::Contains("PairingNotCoprime"), Error);
  // pairing that breaks hermitian symmetry: a = 1 over t^2+1
  CHECK_THROWS_WITH_AS(BlanchfieldModule::validate({corpus::sym({1, 0, 1}, 1, {{1}})}),
                       doctest::Contains("InvalidKindCondition"), Error);
  // valid non-default numerators: a = t and a = 1 + t + t^2 over t^2+1
  CHECK(BlanchfieldModule::validate({corpus::sym({1, 0, 1}, 1, {{0, 1}})}).count() == 1);
  CHECK(BlanchfieldModule::validate({corpus::sym({1, 0, 1}, 1, {{1, 1, 1}})}).count() == 1);
  // a = t^{-1} over t^2+1: hermitian via (t^4-1)/(t^2+1) being a polynomial
  CHECK(BlanchfieldModule::validate({corpus::sym({1, 0, 1}, 1, {{1}}, -1)}).count() == 1);
  // trivial module is legal
  BlanchfieldModule trivial = BlanchfieldModule::validate({});
  CHECK(trivial.count() == 0);
  CHECK(trivial.global_delta() == Poly::one());
}

TEST_CASE("generators sort by multiplicity and duals follow") {
  // hyperbolic pair with m=1 listed before a symmetric block with m=3
  BlanchfieldModule m =
      BlanchfieldModule::validate({corpus::hyp({2, 1, 1}, 1), corpus::sym({1, 0, 1}, 3)});
  REQUIRE(m.count() == 3);
  CHECK(m.gen(0).mult == 3);
  CHECK(m.gen(0).dual == 0);
  CHECK(m.gen(1).mult == 1);
  CHECK(m.gen(2).mult == 1);
  // the hyperbolic pair stays adjacent and dual to each other
  CHECK(m.gen(1).dual == 2);
  CHECK(m.gen(2).dual == 1);
  CHECK(m.gen(2).prime == recip(m.gen(1).prime).monic());
}

TEST_CASE("module action") {
  BlanchfieldModule m = corpus::example_a();
  std::mt19937_64 rng(3);
  ModuleElement x = corpus::random_element(m, rng);
  CHECK(act(m, LPoly(Poly::one()), x).comp == x.comp);
  // annihilator kills the generator
  ModuleElement eta = generator_element(m, 0);
  CHECK(element_is_zero(act(m, LPoly(m.gen(0).delta), eta)));
  // t * t^{-1} acts as the identity
  LPoly t_unit = LPoly(Poly::t()) * LPoly(-1, {Rat(1)});
  CHECK(act(m, t_unit, x).comp == x.comp);
}

TEST_CASE("pairing on single blocks and orthogonality") {
  BlanchfieldModule m = corpus::example_a();
  ModuleElement e1 = generator_element(m, 0);
  ModuleElement e2 = generator_element(m, 1);
  // orthogonality across blocks
  CHECK(pairing_class(m, e1, e2).numerator.is_zero());
  // single block: numerator of b(eta, eta) = a_i * (delta/delta_i)
  Poly n11 = pairing_class(m, e1, e1).numerator;
  Poly expect = m.reduce_mod_delta(LPoly(m.gen(0).pairing_numerator *
                                         poly_divexact(m.global_delta(), m.gen(0).delta)));
  CHECK(n11 == expect);
  // sesquilinearity with P = t on the left
  ModuleElement te1 = act(m, LPoly(Poly::t()), e1);
  Poly lhs = pairing_class(m, te1, e1).numerator;
  Poly rhs = m.reduce_mod_delta(LPoly(Poly::t()) * LPoly(n11));
  CHECK(lhs == rhs);
}

TEST_CASE("block pairing numerator") {
  BlanchfieldModule m = corpus::example_b();
  for (int i = 0; i < m.count(); ++i) {
    const GeneratorRecord& g = m.gen(i);
    ModuleElement dual = generator_element(m, g.dual);
    CHECK(block_pairing_numerator(m, i, dual) == g.pairing_numerator);
    CHECK(block_pairing_numerator(m, i, zero_element(m)).is_zero());
    // y = t^k d(eta_i) -> a_i t^{-k}
    ModuleElement shifted = act(m, LPoly(Poly::one().shifted(2)), dual);
    Poly expect = m.reduce_mod_gen(i, LPoly(-2, {Rat(1)}) * LPoly(g.pairing_numerator));
    CHECK(block_pairing_numerator(m, i, shifted) == expect);
    // nondegeneracy: a_i is a unit mod pi_i
    CHECK(poly_gcd(g.pairing_numerator, g.prime).degree() == 0);
  }
}

TEST_CASE("hermitian symmetry of the pairing") {
  std::mt19937_64 rng(17);
  for (const auto& m : corpus::criterion_corpus()) {
    if (m.count() == 0) continue;
    auto sym = symmetry_decompose(LPoly(m.global_delta()));
    REQUIRE(sym.has_value());
    for (int iter = 0; iter < 6; ++iter) {
      ModuleElement x = corpus::random_element(m, rng);
      ModuleElement y = corpus::random_element(m, rng);
      Poly nxy = pairing_class(m, x, y).numerator;
      Poly nyx = pairing_class(m, y, x).numerator;
      // n_xy = n_yx(t^{-1}) * delta(t)/delta(t^{-1}) = n_yx(t^{-1}) r^{-1} t^{-s}
      LPoly transported = LPoly(nyx).substitute_inverse() * LPoly(-sym->second, {1 / sym->first});
      CHECK(nxy == m.reduce_mod_delta(transported));
    }
  }
}

TEST_CASE("sesquilinearity of the pairing") {
  std::mt19937_64 rng(23);
  for (const auto& m : {corpus::example_a(), corpus::example_b()}) {
    for (int iter = 0; iter < 8; ++iter) {
      ModuleElement x = corpus::random_element(m, rng);
      ModuleElement y = corpus::random_element(m, rng);
      LPoly p = corpus::random_laurent(rng, 3);
      LPoly q = corpus::random_laurent(rng, 3);
      Poly direct = pairing_class(m, act(m, p, x), act(m, q, y)).numerator;
      Poly base = pairing_class(m, x, y).numerator;
      Poly expect = m.reduce_mod_delta(p * q.substitute_inverse() * LPoly(base));
      CHECK(direct == expect);
    }
  }
}

TEST_CASE("global annihilator takes maximal prime powers") {
  // two blocks on the same prime: pi^3 and pi^2
  BlanchfieldModule m =
      BlanchfieldModule::validate({corpus::sym({1, 0, 1}, 3), corpus::sym({1, 0, 1}, 2)});
  CHECK(m.global_delta_monic() == poly_pow(P({1, 0, 1}), 3));
  BlanchfieldModule single = corpus::trefoil();
  CHECK(single.global_delta() == single.gen(0).delta);
}
