#include "triple/module.hpp"

#include <algorithm>
#include <numeric>

#include "triple/factor.hpp"

namespace triple {

Poly reduce_laurent(const LPoly& p, const Poly& f_monic) {
  if (p.is_zero()) return Poly();
  Poly r = poly_mod(p.unit_part(), f_monic);
  long off = p.lowest();
  if (off > 0) {
    r = poly_mod(r * poly_powmod(Poly::t(), Int(off), f_monic), f_monic);
  } else if (off < 0) {
    Poly tinv = mod_inverse(Poly::t(), f_monic);
    r = poly_mod(r * poly_powmod(tinv, Int(-off), f_monic), f_monic);
  }
  return r;
}

namespace {

bool is_t_plus_one(const Poly& monic_prime) {
  return monic_prime.degree() == 1 && monic_prime.coeff(0) == 1;
}

GeneratorRecord make_record(const Poly& prime_monic, int mult, const Poly& pairing_numerator) {
  GeneratorRecord g;
  g.prime = prime_monic;
  g.mult = mult;
  g.delta_monic = poly_pow(prime_monic, static_cast<unsigned>(mult));
  g.delta = normalize_delta(LPoly(g.delta_monic));
  g.pairing_numerator = pairing_numerator;
  return g;
}

}  // namespace

BlanchfieldModule BlanchfieldModule::validate(const std::vector<BlockSpec>& blocks) {
  BlanchfieldModule m;
  std::vector<GeneratorRecord> gens;
  std::vector<int> duals;

  for (const auto& b : blocks) {
    if (b.prime.degree() < 1) fail(Err::NotIrreducible, "block prime must have degree >= 1");
    Poly prime = b.prime.monic();
    if (b.mult < 1) fail(Err::InvalidKindCondition, "block multiplicity must be positive");
    if (prime.coeff(0) == 0) fail(Err::NormalizationFailure, "block prime vanishes at 0");
    if (prime.eval(1) == 0) fail(Err::NormalizationFailure, "block prime vanishes at 1");
    if (!is_irreducible(prime)) fail(Err::NotIrreducible, "block prime is reducible");

    if (b.kind == BlockKind::Symmetric) {
      auto sp = symmetry_decompose(LPoly(prime));
      if (!sp) fail(Err::InvalidKindCondition, "symmetric block with non-symmetric prime");
      if (is_t_plus_one(prime) && b.mult % 2 != 0)
        fail(Err::InvalidKindCondition, "symmetric block on t+1 needs even multiplicity");
      // canonical hermitian numerator t^{m d / 2} (m d is even for all valid blocks)
      LPoly pairing = b.pairing ? *b.pairing
                                : LPoly(b.mult * prime.degree() / 2, {Rat(1)});
      if (pairing.is_zero()) fail(Err::PairingNotCoprime, "pairing numerator is zero");
      auto sa = symmetry_decompose(pairing);
      if (!sa) fail(Err::InvalidKindCondition, "pairing numerator is not symmetric");
      if (poly_gcd(pairing.unit_part(), prime).degree() > 0)
        fail(Err::PairingNotCoprime, "pairing numerator shares a factor with the prime");
      // hermitian symmetry of a/pi^m: pi^m must divide (mu t^e - 1) a, where
      // a(t^{-1})/pi^m(t^{-1}) = mu t^e a(t)/pi^m(t)
      Rat mu = sa->first;
      long e = sa->second - static_cast<long>(b.mult) * sp->second;
      for (int k = 0; k < b.mult; ++k) mu /= sp->first;
      LPoly binom = LPoly(e, {mu}) - LPoly(Poly::one());
      if (!reduce_laurent(binom * pairing, poly_pow(prime, static_cast<unsigned>(b.mult))).is_zero())
        fail(Err::InvalidKindCondition, "pairing numerator does not define a hermitian form");
      // b(eta,eta) = a/pi^m = (a/pi(1)^m) / delta with delta = pi^m / pi(1)^m
      Rat unit = 1;
      Rat pi1 = prime.eval(1);
      for (int k = 0; k < b.mult; ++k) unit /= pi1;
      GeneratorRecord g = make_record(prime, b.mult, Poly());
      g.pairing_numerator = reduce_laurent(unit * pairing, g.delta_monic);
      g.dual = static_cast<int>(gens.size());
      gens.push_back(g);
    } else {
      bool t_plus_one_case = is_t_plus_one(prime) && b.mult % 2 == 1;
      bool generic_case = !symmetry_decompose(LPoly(prime)).has_value() && prime.eval(-1) != 0;
      if (!(t_plus_one_case || generic_case))
        fail(Err::InvalidKindCondition,
             "hyperbolic block needs a non-symmetric prime with prime(-1) != 0, or t+1 with odd multiplicity");
      Rat pi1 = prime.eval(1);
      Rat unit = 1;
      for (int k = 0; k < b.mult; ++k) unit /= pi1;
      int d = prime.degree();

      // b(eta, eta') = 1/pi^m = (1/pi(1)^m) / delta
      GeneratorRecord g1 = make_record(prime, b.mult, Poly());
      g1.pairing_numerator = reduce_laurent(LPoly(Poly::constant(unit)), g1.delta_monic);
      // b(eta', eta) = 1/pi(t^{-1})^m = (t^{m deg pi}/pi(1)^m) / delta'
      Poly prime_dual = recip(prime).monic();
      GeneratorRecord g2 = make_record(prime_dual, b.mult, Poly());
      g2.pairing_numerator =
          reduce_laurent(unit * LPoly(Poly::one().shifted(b.mult * d)), g2.delta_monic);

      int a = static_cast<int>(gens.size());
      g1.dual = a + 1;
      g2.dual = a;
      gens.push_back(g1);
      gens.push_back(g2);
    }
  }

  // stable sort by non-increasing multiplicity, remapping the dual involution
  std::vector<int> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gens[static_cast<size_t>(a)].mult > gens[static_cast<size_t>(b)].mult; });
  std::vector<int> position(gens.size());
  for (size_t k = 0; k < order.size(); ++k) position[static_cast<size_t>(order[k])] = static_cast<int>(k);
  std::vector<GeneratorRecord> sorted;
  sorted.reserve(gens.size());
  for (int idx : order) {
    GeneratorRecord g = gens[static_cast<size_t>(idx)];
    g.dual = position[static_cast<size_t>(g.dual)];
    sorted.push_back(g);
  }
  m.gens_ = std::move(sorted);

  // global annihilator: per prime the maximal power
  std::vector<std::pair<Poly, int>> primes;
  for (const auto& g : m.gens_) {
    bool found = false;
    for (auto& [p, e] : primes) {
      if (p == g.prime) {
        e = std::max(e, g.mult);
        found = true;
        break;
      }
    }
    if (!found) primes.push_back({g.prime, g.mult});
  }
  Poly prod = Poly::one();
  for (const auto& [p, e] : primes) prod = prod * poly_pow(p, static_cast<unsigned>(e));
  m.delta_monic_ = prod;
  m.delta_ = normalize_delta(LPoly(prod));
  return m;
}

Poly BlanchfieldModule::reduce_mod_gen(int i, const LPoly& p) const {
  return reduce_laurent(p, gen(i).delta_monic);
}

Poly BlanchfieldModule::reduce_mod_delta(const LPoly& p) const {
  return reduce_laurent(p, delta_monic_);
}

ModuleElement zero_element(const BlanchfieldModule& m) {
  ModuleElement x;
  x.comp.resize(static_cast<size_t>(m.count()));
  return x;
}

ModuleElement generator_element(const BlanchfieldModule& m, int i) {
  ModuleElement x = zero_element(m);
  x.comp.at(static_cast<size_t>(i)) = Poly::one();
  return x;
}

ModuleElement element_add(const BlanchfieldModule& m, const ModuleElement& x, const ModuleElement& y) {
  if (x.comp.size() != static_cast<size_t>(m.count()) || y.comp.size() != x.comp.size())
    fail(Err::ModuleMismatch, "element component count mismatch");
  ModuleElement z = zero_element(m);
  for (size_t i = 0; i < z.comp.size(); ++i) z.comp[i] = x.comp[i] + y.comp[i];
  return z;
}

ModuleElement element_scale(const BlanchfieldModule& m, const Rat& s, const ModuleElement& x) {
  if (x.comp.size() != static_cast<size_t>(m.count()))
    fail(Err::ModuleMismatch, "element component count mismatch");
  ModuleElement z = zero_element(m);
  for (size_t i = 0; i < z.comp.size(); ++i) z.comp[i] = s * x.comp[i];
  return z;
}

bool element_is_zero(const ModuleElement& x) {
  for (const auto& c : x.comp)
    if (!c.is_zero()) return false;
  return true;
}

ModuleElement act(const BlanchfieldModule& m, const LPoly& p, const ModuleElement& x) {
  if (x.comp.size() != static_cast<size_t>(m.count()))
    fail(Err::ModuleMismatch, "element component count mismatch");
  ModuleElement z = zero_element(m);
  for (int i = 0; i < m.count(); ++i) {
    const Poly& c = x.comp[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    z.comp[static_cast<size_t>(i)] = m.reduce_mod_gen(i, p * LPoly(c));
  }
  return z;
}

PairingClass pairing_class(const BlanchfieldModule& m, const ModuleElement& x, const ModuleElement& y) {
  if (x.comp.size() != static_cast<size_t>(m.count()) || y.comp.size() != x.comp.size())
    fail(Err::ModuleMismatch, "element component count mismatch");
  Poly acc;
  for (int i = 0; i < m.count(); ++i) {
    const GeneratorRecord& g = m.gen(i);
    const Poly& p = x.comp[static_cast<size_t>(i)];
    const Poly& q = y.comp[static_cast<size_t>(g.dual)];
    if (p.is_zero() || q.is_zero()) continue;
    Poly cofactor = poly_divexact(m.global_delta(), g.delta);
    LPoly term = LPoly(p) * LPoly(q).substitute_inverse() * LPoly(g.pairing_numerator) * LPoly(cofactor);
    acc = acc + m.reduce_mod_delta(term);
  }
  return PairingClass{m.reduce_mod_delta(LPoly(acc))};
}

Poly block_pairing_numerator(const BlanchfieldModule& m, int i, const ModuleElement& y) {
  if (y.comp.size() != static_cast<size_t>(m.count()))
    fail(Err::ModuleMismatch, "element component count mismatch");
  const GeneratorRecord& g = m.gen(i);
  const Poly& q = y.comp[static_cast<size_t>(g.dual)];
  if (q.is_zero()) return Poly();
  return m.reduce_mod_gen(i, LPoly(g.pairing_numerator) * LPoly(q).substitute_inverse());
}

}  // namespace triple
