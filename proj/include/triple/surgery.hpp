#ifndef TRIPLE_SURGERY_HPP
#define TRIPLE_SURGERY_HPP

#include <map>

#include "triple/triple_ring.hpp"

namespace triple {

/// Leaves of a lifted Y-graph, as module elements.
struct SurgeryDatum {
  std::array<ModuleElement, 3> leaves;
};

/// A map phi encoded by its values phi_i(eta_i) in R(i)^a on sorted classes;
/// missing entries are zero.
struct PhiFamily {
  std::map<ClassIndex, RingElem> values;
};

// Variation of phi under the surgery: per sorted class the signed sum over
// S3 of products of block pairing numerators, reduced in R(i).
PhiFamily variation(RingCache& rings, const SurgeryDatum& s);

// r sum_{sigma in S} eps(sigma) prod_j t_j^{k_{sigma(j)}} in normal form.
RingElem elementary_variation(RingCache& rings, const ClassIndex& i, const std::array<long, 3>& k,
                              const Rat& r);

// The leaf triple (r b_1, b_2, b_3) with b_j = t^{-k_j} a_{i_j}^{-1}(t^{-1}) d(eta_{i_j}),
// whose variation is the elementary one on class i and zero elsewhere.
SurgeryDatum elementary_leaves(const BlanchfieldModule& m, const ClassIndex& i,
                               const std::array<long, 3>& k, const Rat& r);

struct SpanCheck {
  bool ok = false;
  long span_dim = 0;
  long target_dim = 0;
};
// Do the elementary variations over the exponent box span R(i)^a?
SpanCheck span_Ra_check(RingCache& rings, const ClassIndex& i);

PhiFamily family_zero();
PhiFamily family_add(RingCache& rings, const PhiFamily& a, const PhiFamily& b);
PhiFamily family_scale(RingCache& rings, const Rat& s, const PhiFamily& a);
bool family_is_zero(RingCache& rings, const PhiFamily& a);

// phi(b1 (x) b2 (x) b3) in the global ring R_delta, through R(i)-linearity,
// the permutation relation and the annihilator cofactors.
RingElem phi_evaluate(RingCache& rings, const PhiFamily& phi, const ModuleElement& b1,
                      const ModuleElement& b2, const ModuleElement& b3);

/// Coordinates over the concatenated H(i) bases (sorted classes, lexicographic).
using HVector = QVec;

HVector h_of_phi(RingCache& rings, const PhiFamily& phi);

// Coordinates of b1 ^ b2 ^ b3 in H.
HVector wedge_class(const SpaceCache& spaces, const ModuleElement& b1, const ModuleElement& b2,
                    const ModuleElement& b3);

/// Equivariant linking label: class part plus an arbitrary integral part.
struct Linking {
  PairingClass cls;
  LPoly integral;
};

struct YDiagram {
  std::array<ModuleElement, 3> labels;
  Linking f12, f13, f23;
};

// Y-diagram with linkings computed from the pairing (plus given integral parts).
YDiagram make_diagram(const BlanchfieldModule& m, const std::array<ModuleElement, 3>& labels,
                      const LPoly& g12 = LPoly(), const LPoly& g13 = LPoly(),
                      const LPoly& g23 = LPoly());

// The H-class of the bracket of the diagram; rejects incompatible linkings.
HVector diagram_reduce(RingCache& rings, const YDiagram& d);

struct DegreeOneReport {
  long dim_h = 0;
  std::vector<std::pair<ClassIndex, long>> class_dims;  // sorted classes with dim H(i)
};
// The borromean part of the degree-one graded space; the rational-homology
// part adds one Q summand per prime integer on top of this.
DegreeOneReport degree_one_report(RingCache& rings);

}  // namespace triple

#endif
