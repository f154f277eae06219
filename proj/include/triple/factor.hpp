#ifndef TRIPLE_FACTOR_HPP
#define TRIPLE_FACTOR_HPP

#include <vector>

#include "triple/poly.hpp"

namespace triple {

// Monic irreducible factors with multiplicities, ascending by (degree, coeffs).
// Complete for irreducible factors of degree <= 24; larger radicals are
// rejected with UnsupportedDegree.
std::vector<std::pair<Poly, int>> factor_rational(const Poly& f);

// Exact irreducibility over Q; deg f in [1, 24].
bool is_irreducible(const Poly& f);

}  // namespace triple

#endif
