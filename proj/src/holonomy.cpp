#include "triple/holonomy.hpp"

#include <algorithm>

namespace triple {

QVec HolonomySpace::quotient_coords(const QVec& v) const {
  if (static_cast<int>(v.size()) != ambient) fail(Err::DimensionMismatch, "quotient_coords input size");
  QVec reduced = image.reduce(v);
  QVec out;
  out.reserve(coker_coords.size());
  for (int c : coker_coords) out.push_back(reduced[static_cast<size_t>(c)]);
  return out;
}

namespace {

std::shared_ptr<const HolonomySpace> finish_space(SpaceKind kind, const ClassIndex& idx, QMat op) {
  auto s = std::make_shared<HolonomySpace>();
  s->kind = kind;
  s->index = idx;
  s->ambient = op.rows();
  s->image = rref(op.transpose());
  s->op = std::move(op);
  std::vector<int> coker;
  {
    size_t p = 0;
    for (int j = 0; j < s->ambient; ++j) {
      if (p < s->image.pivots.size() && s->image.pivots[static_cast<size_t>(p)] == j)
        ++p;
      else
        coker.push_back(j);
    }
  }
  s->coker_coords = std::move(coker);
  s->dim = s->ambient - s->image.rank();
  return s;
}

std::shared_ptr<const HolonomySpace> empty_space(SpaceKind kind, const ClassIndex& idx) {
  auto s = std::make_shared<HolonomySpace>();
  s->kind = kind;
  s->index = idx;
  s->ambient = 0;
  s->image = Echelon{0, QMat(0, 0), {}};
  s->dim = 0;
  return s;
}

}  // namespace

std::shared_ptr<const HolonomySpace> SpaceCache::a_class(const ClassIndex& i) const {
  for (int j : i)
    if (j < 0 || j >= module_->count()) fail(Err::DimensionMismatch, "generator index out of range");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({0, i});
    if (it != cache_.end()) return it->second;
  }
  long ambient = 1;
  for (int j : i) ambient *= module_->gen(j).delta_monic.degree();
  check_dim_guard(ambient, max_dim_);
  QMat t1 = companion(module_->gen(i[0]).delta_monic);
  QMat t2 = companion(module_->gen(i[1]).delta_monic);
  QMat t3 = companion(module_->gen(i[2]).delta_monic);
  QMat k = kron3(t1, t2, t3);
  auto space = finish_space(SpaceKind::TensorA, i, QMat::identity(k.rows()) - k);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.insert({{0, i}, space});
  return it->second;
}

std::shared_ptr<const HolonomySpace> SpaceCache::h_class(const ClassIndex& i) const {
  if (!is_sorted_index(i)) fail(Err::NotSorted, "H classes take sorted indices");
  for (int j : i)
    if (j < 0 || j >= module_->count()) fail(Err::DimensionMismatch, "generator index out of range");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({1, i});
    if (it != cache_.end()) return it->second;
  }
  std::shared_ptr<const HolonomySpace> space;
  int n1 = module_->gen(i[0]).delta_monic.degree();
  int n2 = module_->gen(i[1]).delta_monic.degree();
  int n3 = module_->gen(i[2]).delta_monic.degree();
  if (i[0] != i[1] && i[1] != i[2]) {
    check_dim_guard(static_cast<long>(n1) * n2 * n3, max_dim_);
    QMat k = kron3(companion(module_->gen(i[0]).delta_monic), companion(module_->gen(i[1]).delta_monic),
                   companion(module_->gen(i[2]).delta_monic));
    space = finish_space(SpaceKind::WedgeH, i, QMat::identity(k.rows()) - k);
  } else if (i[0] == i[1] && i[1] == i[2]) {
    if (n1 < 3) {
      space = empty_space(SpaceKind::WedgeH, i);
    } else {
      check_dim_guard(binom(n1, 3), max_dim_);
      QMat k = wedge_power(companion(module_->gen(i[0]).delta_monic), 3);
      space = finish_space(SpaceKind::WedgeH, i, QMat::identity(k.rows()) - k);
    }
  } else if (i[0] == i[1]) {
    if (n1 < 2) {
      space = empty_space(SpaceKind::WedgeH, i);
    } else {
      check_dim_guard(binom(n1, 2) * n3, max_dim_);
      QMat k = kron(wedge_power(companion(module_->gen(i[0]).delta_monic), 2),
                    companion(module_->gen(i[2]).delta_monic));
      space = finish_space(SpaceKind::WedgeH, i, QMat::identity(k.rows()) - k);
    }
  } else {
    if (n2 < 2) {
      space = empty_space(SpaceKind::WedgeH, i);
    } else {
      check_dim_guard(static_cast<long>(n1) * binom(n2, 2), max_dim_);
      QMat k = kron(companion(module_->gen(i[0]).delta_monic),
                    wedge_power(companion(module_->gen(i[1]).delta_monic), 2));
      space = finish_space(SpaceKind::WedgeH, i, QMat::identity(k.rows()) - k);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.insert({{1, i}, space});
  return it->second;
}

std::vector<ClassIndex> SpaceCache::sorted_classes() const {
  std::vector<ClassIndex> out;
  int q = module_->count();
  for (int a = 0; a < q; ++a)
    for (int b = a; b < q; ++b)
      for (int c = b; c < q; ++c) out.push_back({a, b, c});
  return out;
}

std::vector<ClassIndex> SpaceCache::ordered_classes() const {
  std::vector<ClassIndex> out;
  int q = module_->count();
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) out.push_back({a, b, c});
  return out;
}

long SpaceCache::dim_A_total() const {
  long total = 0;
  for (const auto& i : ordered_classes()) total += a_class(i)->dim;
  return total;
}

long SpaceCache::dim_A_sorted_total() const {
  long total = 0;
  for (const auto& i : sorted_classes()) total += a_class(i)->dim;
  return total;
}

long SpaceCache::dim_H_total() const {
  long total = 0;
  for (const auto& i : sorted_classes()) total += h_class(i)->dim;
  return total;
}

bool a_nontrivial_criterion(const BlanchfieldModule& m, const ClassIndex& i) {
  // roots z1 of pi_{i1}, z2 of pi_{i2} with z1 z2 a root of prodpoly, and
  // z3 = 1/(z1 z2) a root of pi_{i3}
  Poly products = prodpoly(m.gen(i[0]).prime, m.gen(i[1]).prime);
  return poly_gcd(products, recip(m.gen(i[2]).prime)).degree() > 0;
}

namespace {

// Roots {z w : z != w roots of f}, f squarefree: prodpoly(f,f) / rootpow(f,2).
Poly distinct_pair_products(const Poly& f) {
  return poly_divexact(prodpoly(f, f), rootpow(f, 2));
}

bool pair_case_criterion(const Poly& repeated_prime, int repeated_mult, const Poly& other_prime) {
  Poly other_recip = recip(other_prime);
  if (poly_gcd(distinct_pair_products(repeated_prime), other_recip).degree() > 0) return true;
  if (repeated_mult >= 2 &&
      poly_gcd(rootpow(repeated_prime, 2), other_recip).degree() > 0)
    return true;
  return false;
}

}  // namespace

bool h_nontrivial_criterion(const BlanchfieldModule& m, const ClassIndex& i) {
  if (!is_sorted_index(i)) fail(Err::NotSorted, "criterion takes sorted indices");
  if (i[0] != i[1] && i[1] != i[2]) return a_nontrivial_criterion(m, i);
  if (i[0] == i[1] && i[1] != i[2])
    return pair_case_criterion(m.gen(i[0]).prime, m.gen(i[0]).mult, m.gen(i[2]).prime);
  if (i[0] != i[1] && i[1] == i[2])
    return pair_case_criterion(m.gen(i[1]).prime, m.gen(i[1]).mult, m.gen(i[0]).prime);

  const Poly& prime = m.gen(i[0]).prime;
  int mult = m.gen(i[0]).mult;
  Poly cubes = rootpow(prime, 3);
  Poly two_one = prodpoly(rootpow(prime, 2), prime);  // roots {z^2 w}, including z = w
  // distinct unordered triples would need z^2 w terms removed three ways:
  // all triples * cubes^2 / (z^2 w multiset)^3
  Poly all_triples = prodpoly(prodpoly(prime, prime), prime);
  Poly p3dist = poly_divexact(all_triples * cubes * cubes, two_one * two_one * two_one);
  if (p3dist.eval(1) == 0) return true;
  Poly qoff = poly_divexact(two_one, cubes);  // roots {z^2 w : z != w}
  if (mult >= 2 && qoff.eval(1) == 0) return true;
  if (mult >= 3 && cubes.eval(1) == 0) return true;
  return false;
}

const char* pattern_name(ComponentPattern p) {
  switch (p) {
    case ComponentPattern::AllDistinct: return "all-distinct";
    case ComponentPattern::FirstPair: return "first-pair";
    case ComponentPattern::LastPair: return "last-pair";
    case ComponentPattern::AllEqual: return "all-equal";
  }
  return "?";
}

std::vector<ComponentPattern> consistent_patterns(const ClassIndex& i) {
  std::vector<ComponentPattern> out{ComponentPattern::AllDistinct};
  if (i[0] == i[1] && i[1] == i[2]) {
    out.push_back(ComponentPattern::FirstPair);
    out.push_back(ComponentPattern::LastPair);
    out.push_back(ComponentPattern::AllEqual);
  } else if (i[0] == i[1]) {
    out.push_back(ComponentPattern::FirstPair);
  } else if (i[1] == i[2]) {
    out.push_back(ComponentPattern::LastPair);
  }
  return out;
}

DimBounds h_dim_bounds(const BlanchfieldModule& m, const ClassIndex& i, ComponentPattern pattern) {
  if (!is_sorted_index(i)) fail(Err::NotSorted, "bounds take sorted indices");
  auto consistent = consistent_patterns(i);
  if (std::find(consistent.begin(), consistent.end(), pattern) == consistent.end())
    fail(Err::InternalError, "component pattern inconsistent with index equalities");
  long m1 = m.gen(i[0]).mult;
  long m2 = m.gen(i[1]).mult;
  long m3 = m.gen(i[2]).mult;
  switch (pattern) {
    case ComponentPattern::AllDistinct: {
      long upper = m2 * m3;
      long lower;
      if (m2 + m3 <= m1 + 1) {
        lower = m2 * m3;
      } else {
        long s = m2 + m3 - m1;
        lower = m2 * m3 - s * (s - 1) / 2;
      }
      return {lower, upper};
    }
    case ComponentPattern::FirstPair:
      return {1, m3 * (m1 - 1)};
    case ComponentPattern::LastPair:
      return {1, m2 * (m2 - 1) / 2};
    case ComponentPattern::AllEqual:
      return {1, (m1 - 1) * (m1 - 2) / 2};
  }
  fail(Err::InternalError, "unreachable pattern");
}

HLayout h_layout(const SpaceCache& spaces) {
  HLayout layout;
  layout.classes = spaces.sorted_classes();
  layout.offsets.reserve(layout.classes.size());
  long off = 0;
  for (const auto& i : layout.classes) {
    layout.offsets.push_back(off);
    off += spaces.h_class(i)->dim;
  }
  layout.total = off;
  return layout;
}

}  // namespace triple
