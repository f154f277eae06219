#ifndef TRIPLE_NUMBERFIELD_HPP
#define TRIPLE_NUMBERFIELD_HPP

#include <array>
#include <functional>
#include <string>

#include "triple/holonomy.hpp"
#include "triple/poly.hpp"

namespace triple {

/// Q[x]/(p) for a monic irreducible p, certified at construction.
class NumberField {
 public:
  explicit NumberField(const Poly& minpoly);
  int degree() const { return minpoly_.degree(); }
  const Poly& minpoly() const { return minpoly_; }
  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.minpoly_ == b.minpoly_;
  }

 private:
  Poly minpoly_;
};

/// Field element as a coordinate vector over {1, x, .., x^{deg-1}}.
struct KElem {
  std::vector<Rat> c;
  friend bool operator==(const KElem& a, const KElem& b) = default;
};

KElem nf_zero(const NumberField& k);
KElem nf_one(const NumberField& k);
KElem nf_from_rat(const NumberField& k, const Rat& x);
KElem nf_from_poly(const NumberField& k, const Poly& p);
bool nf_is_zero(const KElem& a);
KElem nf_add(const NumberField& k, const KElem& a, const KElem& b);
KElem nf_sub(const NumberField& k, const KElem& a, const KElem& b);
KElem nf_mul(const NumberField& k, const KElem& a, const KElem& b);
KElem nf_scale(const NumberField& k, const Rat& s, const KElem& a);
KElem nf_inverse(const NumberField& k, const KElem& a);
// f(z) for f over Q evaluated at a field element.
KElem nf_eval_poly(const NumberField& k, const Poly& f, const KElem& z);

// gauss: x^2+1, eisenstein: x^2+x+1, zeta8: x^4+1
NumberField preset_field(const std::string& name);

/// One complex component: roots z_j of the block primes with multiplicities
/// n_j = m_{i_j}, all living in a single declared field.
struct ComponentSpec {
  NumberField field;
  std::array<KElem, 3> roots;
  std::array<int, 3> mults;
  // whether slots carry the same (block prime, root) pair
  std::array<std::array<bool, 3>, 3> same{};
};

// Certifies prime_j(z_j) = 0 and z_j not in {0, 1}.
ComponentSpec make_component(const NumberField& field, const std::array<Poly, 3>& primes,
                             const std::array<KElem, 3>& roots, const std::array<int, 3>& mults);

// Dimension over the field of the component presentation of A(i,l): box
// generators [k], 0 <= k_j < n_j, modulo all holonomy relations hol(k).
long component_dim_A(const ComponentSpec& spec, long max_dim = 5000);

// Same presentation with extra relations [k] = 0 on the flagged generators;
// an oracle hook for the vanishing and generation statements.
long component_dim_A_killed(const ComponentSpec& spec,
                            const std::function<bool(int, int, int)>& killed,
                            long max_dim = 5000);

// Same for H(i,l) with the antisymmetric rewriting for the given pattern.
long component_dim_H(const ComponentSpec& spec, ComponentPattern pattern, long max_dim = 5000);

}  // namespace triple

#endif
