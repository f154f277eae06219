#ifndef TRIPLE_HOLONOMY_HPP
#define TRIPLE_HOLONOMY_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "triple/module.hpp"
#include "triple/qmat.hpp"

namespace triple {

using ClassIndex = std::array<int, 3>;  // generator indices, 0-based

inline ClassIndex sorted_index(ClassIndex i) {
  if (i[0] > i[1]) std::swap(i[0], i[1]);
  if (i[1] > i[2]) std::swap(i[1], i[2]);
  if (i[0] > i[1]) std::swap(i[0], i[1]);
  return i;
}
inline bool is_sorted_index(const ClassIndex& i) { return i[0] <= i[1] && i[1] <= i[2]; }

enum class SpaceKind { TensorA, WedgeH };

/// A holonomy quotient A(i) or H(i): the cokernel of Id - T where T is the
/// linear extension of the holonomy relation on the ambient tensor or wedge
/// space. The quotient dimension equals the nullity of the operator.
struct HolonomySpace {
  SpaceKind kind = SpaceKind::TensorA;
  ClassIndex index{};
  int ambient = 0;
  QMat op;                        // Id - T
  Echelon image;                  // echelon of the relation image (column space of op)
  std::vector<int> coker_coords;  // non-pivot ambient coordinates; their classes form the basis
  int dim = 0;

  QVec quotient_coords(const QVec& v) const;
};

/// Memoized construction of the holonomy quotients of one module.
class SpaceCache {
 public:
  explicit SpaceCache(const BlanchfieldModule& m, long max_dim = 5000)
      : module_(&m), max_dim_(max_dim) {}

  const BlanchfieldModule& module() const { return *module_; }
  long max_dim() const { return max_dim_; }

  std::shared_ptr<const HolonomySpace> a_class(const ClassIndex& i) const;
  std::shared_ptr<const HolonomySpace> h_class(const ClassIndex& i) const;  // sorted index

  long dim_A_total() const;         // over all ordered triples
  long dim_A_sorted_total() const;  // over sorted triples only
  long dim_H_total() const;
  std::vector<ClassIndex> sorted_classes() const;
  std::vector<ClassIndex> ordered_classes() const;

 private:
  const BlanchfieldModule* module_;
  long max_dim_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, ClassIndex>, std::shared_ptr<const HolonomySpace>> cache_;
};

// Nontriviality of A(i): some roots z_j of the block primes with z1 z2 z3 = 1.
bool a_nontrivial_criterion(const BlanchfieldModule& m, const ClassIndex& i);

// Nontriviality of H(i), sorted index, including the multiplicity conditions.
bool h_nontrivial_criterion(const BlanchfieldModule& m, const ClassIndex& i);

/// Equality pattern of the three (block, root) pairs of a complex component.
enum class ComponentPattern { AllDistinct, FirstPair, LastPair, AllEqual };

const char* pattern_name(ComponentPattern p);

struct DimBounds {
  long lower = 0;
  long upper = 0;
};

// Per-component complex dimension bounds for a contributing component of the
// given pattern on a sorted class.
DimBounds h_dim_bounds(const BlanchfieldModule& m, const ClassIndex& i, ComponentPattern pattern);

// Patterns compatible with the index equalities of a sorted class.
std::vector<ComponentPattern> consistent_patterns(const ClassIndex& i);

/// Concatenated coordinate layout of H over sorted classes in lexicographic
/// order; the coordinate space of HVector values.
struct HLayout {
  std::vector<ClassIndex> classes;
  std::vector<long> offsets;
  long total = 0;
};
HLayout h_layout(const SpaceCache& spaces);

}  // namespace triple

#endif
