#ifndef TRIPLE_MODULE_HPP
#define TRIPLE_MODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "triple/poly.hpp"

namespace triple {

enum class BlockKind { Symmetric, Hyperbolic };

/// One block of the orthogonal decomposition: a single self-dual generator
/// (Symmetric) or a dual pair (Hyperbolic).
///
/// For a symmetric block, b(eta,eta) = pairing / prime^mult. The numerator
/// must be symmetric, coprime to the prime, and compatible with hermitian
/// symmetry of the form; when omitted, the canonical choice t^{mult*deg/2}
/// is used.
struct BlockSpec {
  BlockKind kind = BlockKind::Symmetric;
  Poly prime;
  int mult = 1;
  std::optional<LPoly> pairing;  // Symmetric kind only
};

struct GeneratorRecord {
  Poly delta;        // normalized: delta in Q[t], delta(0) != 0, delta(1) = 1
  Poly delta_monic;  // same ideal, monic
  Poly prime;        // monic irreducible
  int mult = 1;
  int dual = 0;                // index of the Blanchfield dual generator
  Poly pairing_numerator;      // a_i with b(eta_i, d(eta_i)) = a_i / delta_i, reduced mod delta_i
};

// Reduce a Laurent polynomial modulo a monic f with f(0) != 0; negative
// powers of t go through the inverse of t mod f.
Poly reduce_laurent(const LPoly& p, const Poly& f_monic);

class BlanchfieldModule {
 public:
  static BlanchfieldModule validate(const std::vector<BlockSpec>& blocks);

  int count() const { return static_cast<int>(gens_.size()); }
  const GeneratorRecord& gen(int i) const { return gens_.at(static_cast<size_t>(i)); }
  const Poly& global_delta() const { return delta_; }
  const Poly& global_delta_monic() const { return delta_monic_; }

  Poly reduce_mod_gen(int i, const LPoly& p) const;
  Poly reduce_mod_delta(const LPoly& p) const;

 private:
  std::vector<GeneratorRecord> gens_;
  Poly delta_ = Poly::one();
  Poly delta_monic_ = Poly::one();
};

/// Element of the module: one reduced polynomial class per generator.
struct ModuleElement {
  std::vector<Poly> comp;
};

ModuleElement zero_element(const BlanchfieldModule& m);
ModuleElement generator_element(const BlanchfieldModule& m, int i);
ModuleElement element_add(const BlanchfieldModule& m, const ModuleElement& x, const ModuleElement& y);
ModuleElement element_scale(const BlanchfieldModule& m, const Rat& s, const ModuleElement& x);
bool element_is_zero(const ModuleElement& x);

// Componentwise action of P(t) with t^{-1} inverted mod each annihilator.
ModuleElement act(const BlanchfieldModule& m, const LPoly& p, const ModuleElement& x);

/// Class of n/delta in Q(t)/Q[t^{+-1}], deg n < deg delta.
struct PairingClass {
  Poly numerator;
  friend bool operator==(const PairingClass& a, const PairingClass& b) = default;
};

// b(x, y) as a class over the global annihilator.
PairingClass pairing_class(const BlanchfieldModule& m, const ModuleElement& x, const ModuleElement& y);

// n with b(eta_i, y) = n / delta_i.
Poly block_pairing_numerator(const BlanchfieldModule& m, int i, const ModuleElement& y);

}  // namespace triple

#endif
