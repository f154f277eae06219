#ifndef TRIPLE_TESTS_CORPUS_HPP
#define TRIPLE_TESTS_CORPUS_HPP

#include <random>

#include "triple/module.hpp"

namespace corpus {

using namespace triple;

inline Poly P(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.push_back(Rat(x));
  return Poly(std::move(c));
}

inline BlockSpec sym(std::vector<long> prime, int mult,
                     std::optional<std::vector<long>> pairing = std::nullopt,
                     long pairing_offset = 0) {
  BlockSpec b;
  b.kind = BlockKind::Symmetric;
  b.prime = P(std::move(prime));
  b.mult = mult;
  if (pairing) b.pairing = LPoly(pairing_offset, [&] {
    std::vector<Rat> c;
    for (long x : *pairing) c.push_back(Rat(x));
    return c;
  }());
  return b;
}

inline BlockSpec hyp(std::vector<long> prime, int mult) {
  BlockSpec b;
  b.kind = BlockKind::Hyperbolic;
  b.prime = P(std::move(prime));
  b.mult = mult;
  return b;
}

// (t^4+1) + (t^2+1): dim A_h = 24, dim H = 2
inline BlanchfieldModule example_a() {
  return BlanchfieldModule::validate({sym({1, 0, 0, 0, 1}, 1), sym({1, 0, 1}, 1)});
}

// (t^2+1)^3 + (t+1)^2: dim A(1,1,2) = 10, dim H = 4
inline BlanchfieldModule example_b() {
  return BlanchfieldModule::validate({sym({1, 0, 1}, 3), sym({1, 1}, 2)});
}

inline BlanchfieldModule trefoil() { return BlanchfieldModule::validate({sym({1, -1, 1}, 1)}); }

inline BlanchfieldModule figure_eight() { return BlanchfieldModule::validate({sym({1, -3, 1}, 1)}); }

// single symmetric block (t^2+t+1)^m
inline BlanchfieldModule eisenstein_power(int m) {
  return BlanchfieldModule::validate({sym({1, 1, 1}, m)});
}

// criterion corpus: primes {t^2+1, t^4+1, t^2+t+1, t+1, t^2-3t+1, t^2+t+2 hyperbolic}
inline std::vector<BlanchfieldModule> criterion_corpus() {
  std::vector<BlanchfieldModule> out;
  out.push_back(example_a());
  out.push_back(example_b());
  out.push_back(figure_eight());
  out.push_back(eisenstein_power(3));
  out.push_back(eisenstein_power(4));
  out.push_back(BlanchfieldModule::validate({sym({1, 1}, 2), sym({1, 1}, 4)}));
  out.push_back(BlanchfieldModule::validate({hyp({2, 1, 1}, 2)}));
  out.push_back(BlanchfieldModule::validate({hyp({2, 1, 1}, 1), sym({1, 0, 1}, 2)}));
  out.push_back(BlanchfieldModule::validate({hyp({1, 1}, 1)}));
  out.push_back(BlanchfieldModule::validate({sym({1, 0, 0, 0, 1}, 2), sym({1, 1, 1}, 1)}));
  return out;
}

inline ModuleElement random_element(const BlanchfieldModule& m, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-3, 3);
  ModuleElement x = zero_element(m);
  for (int i = 0; i < m.count(); ++i) {
    int deg = m.gen(i).delta_monic.degree();
    std::vector<Rat> c(static_cast<size_t>(deg));
    for (auto& v : c) v = Rat(coef(rng));
    x.comp[static_cast<size_t>(i)] = Poly(std::move(c));
  }
  return x;
}

inline LPoly random_laurent(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<long> off(-2, 2);
  std::vector<Rat> c(static_cast<size_t>(max_deg) + 1);
  for (auto& v : c) v = Rat(coef(rng));
  bool all_zero = true;
  for (const auto& v : c) all_zero = all_zero && v == 0;
  if (all_zero) c[0] = 1;
  return LPoly(off(rng), std::move(c));
}

}  // namespace corpus

#endif
