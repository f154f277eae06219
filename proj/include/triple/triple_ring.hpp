#ifndef TRIPLE_TRIPLE_RING_HPP
#define TRIPLE_TRIPLE_RING_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "triple/holonomy.hpp"

namespace triple {

class TripleRing;

/// Element in ring normal form (coordinates over the reduced monomial basis).
struct RingElem {
  const TripleRing* ring = nullptr;
  QVec c;
};

/// R(i) = R / (t1 t2 t3 - 1, delta_{i1}(t1), delta_{i2}(t2), delta_{i3}(t3)),
/// or the global R_delta when no class index is given. Normal forms live on
/// the monomial basis {t1^a t2^b} after eliminating t3 = (t1 t2)^{-1}; the
/// eliminated ideal is the column space of multiplication by
/// e = recip(delta_{i3})(t1 t2).
class TripleRing {
 public:
  TripleRing(const SpaceCache& spaces, std::optional<ClassIndex> cls);

  bool is_global() const { return !index_.has_value(); }
  const std::optional<ClassIndex>& index() const { return index_; }
  const BlanchfieldModule& module() const;
  int dim() const { return static_cast<int>(basis_.size()); }
  long ambient_dim() const { return static_cast<long>(n1_) * n2_; }
  // basis monomials (a, b) in graded-lex order
  const std::vector<std::pair<int, int>>& basis_monomials() const { return basis_; }
  // all ambient monomials (a, b) in graded-lex coordinate order
  const std::vector<std::pair<int, int>>& a0_monomials() const { return order_; }
  // stabilizer S of the index triple, as permutations of {0,1,2}
  const std::vector<std::array<int, 3>>& stabilizer() const { return stab_; }

  RingElem zero() const { return RingElem{this, QVec(static_cast<size_t>(dim()), Rat(0))}; }
  RingElem unit() const { return monomial(0, 0, 0, Rat(1)); }
  RingElem monomial(long k1, long k2, long k3, const Rat& coef) const;
  // product p1(t1) p2(t2) p3(t3) in normal form
  RingElem from_tripoly(const Poly& p1, const Poly& p2, const Poly& p3) const;

  RingElem add(const RingElem& x, const RingElem& y) const;
  RingElem scale(const Rat& s, const RingElem& x) const;
  RingElem mul(const RingElem& x, const RingElem& y) const;
  bool is_zero(const RingElem& x) const;

  // variable permutation by a stabilizer element
  RingElem stabilizer_action(const std::array<int, 3>& sigma, const RingElem& x) const;
  // P^a = (1/|S|) sum_{sigma in S} eps(sigma) sigma . x
  RingElem antisymmetrize(const RingElem& x) const;
  // (symmetric part = ker P^a, antisymmetric part = im P^a)
  std::pair<Subspace, Subspace> split_sym_antisym() const;
  // H(i) coordinates of x under p_i; sorted class rings only
  QVec p_map(const RingElem& x) const;
  const HolonomySpace& h_space() const;

  // ambient A0 = Q[t1]/(d1) (x) Q[t2]/(d2) vectors in graded-lex coordinates
  QVec lift(const RingElem& x) const;
  RingElem normal_form(const QVec& a0) const;
  QVec mul_a0(const QVec& x, const QVec& y) const;
  QVec monomial_a0(long k1, long k2, long k3) const;

 private:
  const SpaceCache* spaces_;
  std::optional<ClassIndex> index_;
  std::array<Poly, 3> mod_;  // monic annihilators per variable slot
  int n1_ = 0, n2_ = 0;
  std::vector<std::pair<int, int>> order_;  // graded-lex position -> (a, b)
  std::vector<int> pos_;                    // a*n2+b -> graded-lex position
  std::vector<QVec> pow1_, pow2_;           // t^k mod d1 / d2, k < 2n-1
  Poly tinv1_, tinv2_;
  Echelon ideal_;                           // echelon of the ideal (e) column space
  std::vector<std::pair<int, int>> basis_;  // non-pivot monomials
  std::vector<int> basis_pos_;              // graded-lex positions of the basis
  std::vector<std::array<int, 3>> stab_;
  std::shared_ptr<const HolonomySpace> hspace_;

  void ensure_same_ring(const RingElem& x) const;
};

int perm_sign(const std::array<int, 3>& sigma);

/// Memoized rings and spaces for one module.
class RingCache {
 public:
  explicit RingCache(const BlanchfieldModule& m, long max_dim = 5000) : spaces_(m, max_dim) {}
  const BlanchfieldModule& module() const { return spaces_.module(); }
  SpaceCache& spaces() { return spaces_; }
  const SpaceCache& spaces() const { return spaces_; }
  const TripleRing& ring(const ClassIndex& i);
  const TripleRing& global_ring();

 private:
  SpaceCache spaces_;
  std::mutex mu_;
  std::map<std::array<int, 3>, std::unique_ptr<TripleRing>> rings_;
  std::unique_ptr<TripleRing> global_;
};

}  // namespace triple

#endif
