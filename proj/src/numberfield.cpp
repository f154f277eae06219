#include "triple/numberfield.hpp"

#include <algorithm>

#include "triple/factor.hpp"

namespace triple {

NumberField::NumberField(const Poly& minpoly) {
  if (minpoly.degree() < 1) fail(Err::NotIrreducible, "minimal polynomial must have degree >= 1");
  Poly p = minpoly.monic();
  if (!is_irreducible(p)) fail(Err::NotIrreducible, "minimal polynomial is reducible");
  minpoly_ = p;
}

KElem nf_zero(const NumberField& k) { return KElem{QVec(static_cast<size_t>(k.degree()), Rat(0))}; }

KElem nf_one(const NumberField& k) {
  KElem a = nf_zero(k);
  a.c[0] = 1;
  return a;
}

KElem nf_from_rat(const NumberField& k, const Rat& x) {
  KElem a = nf_zero(k);
  a.c[0] = x;
  return a;
}

KElem nf_from_poly(const NumberField& k, const Poly& p) {
  Poly r = poly_mod(p, k.minpoly());
  KElem a = nf_zero(k);
  for (int j = 0; j <= r.degree(); ++j) a.c[static_cast<size_t>(j)] = r.coeff(j);
  return a;
}

bool nf_is_zero(const KElem& a) {
  return std::all_of(a.c.begin(), a.c.end(), [](const Rat& x) { return x == 0; });
}

namespace {

Poly to_poly(const KElem& a) { return Poly(a.c); }

}  // namespace

KElem nf_add(const NumberField& k, const KElem& a, const KElem& b) {
  KElem r = nf_zero(k);
  for (size_t j = 0; j < r.c.size(); ++j) r.c[j] = a.c[j] + b.c[j];
  return r;
}

KElem nf_sub(const NumberField& k, const KElem& a, const KElem& b) {
  KElem r = nf_zero(k);
  for (size_t j = 0; j < r.c.size(); ++j) r.c[j] = a.c[j] - b.c[j];
  return r;
}

KElem nf_mul(const NumberField& k, const KElem& a, const KElem& b) {
  return nf_from_poly(k, to_poly(a) * to_poly(b));
}

KElem nf_scale(const NumberField& k, const Rat& s, const KElem& a) {
  KElem r = nf_zero(k);
  for (size_t j = 0; j < r.c.size(); ++j) r.c[j] = s * a.c[j];
  return r;
}

KElem nf_inverse(const NumberField& k, const KElem& a) {
  if (nf_is_zero(a)) fail(Err::DivisionByZero, "inverse of zero field element");
  return nf_from_poly(k, mod_inverse(to_poly(a), k.minpoly()));
}

KElem nf_eval_poly(const NumberField& k, const Poly& f, const KElem& z) {
  KElem acc = nf_zero(k);
  for (int j = f.degree(); j >= 0; --j) {
    acc = nf_mul(k, acc, z);
    acc.c[0] += f.coeff(j);
  }
  return acc;
}

NumberField preset_field(const std::string& name) {
  if (name == "gauss") return NumberField(Poly({Rat(1), Rat(0), Rat(1)}));
  if (name == "eisenstein") return NumberField(Poly({Rat(1), Rat(1), Rat(1)}));
  if (name == "zeta8") return NumberField(Poly({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}));
  fail(Err::ParseError, "unknown field preset '" + name + "'");
}

ComponentSpec make_component(const NumberField& field, const std::array<Poly, 3>& primes,
                             const std::array<KElem, 3>& roots, const std::array<int, 3>& mults) {
  ComponentSpec spec{field, roots, mults, {}};
  for (int j = 0; j < 3; ++j) {
    if (mults[j] < 1) fail(Err::InternalError, "component multiplicities must be positive");
    const KElem& z = roots[static_cast<size_t>(j)];
    if (static_cast<int>(z.c.size()) != field.degree())
      fail(Err::DimensionMismatch, "root coordinate length");
    if (!nf_is_zero(nf_eval_poly(field, primes[static_cast<size_t>(j)], z)))
      fail(Err::InternalError, "declared root is not a root of its prime");
    if (nf_is_zero(z)) fail(Err::RootAtZero, "component root is zero");
    if (z == nf_one(field)) fail(Err::InternalError, "component root is 1");
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      spec.same[a][b] = primes[a].monic() == primes[b].monic() && roots[a] == roots[b];
  return spec;
}

namespace {

// Gaussian elimination rank over the field.
long nf_rank(const NumberField& k, std::vector<std::vector<KElem>>& rows) {
  size_t R = rows.size();
  if (R == 0) return 0;
  size_t C = rows[0].size();
  long rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t pivot = R;
    for (size_t i = r; i < R; ++i)
      if (!nf_is_zero(rows[i][c])) { pivot = i; break; }
    if (pivot == R) continue;
    std::swap(rows[r], rows[pivot]);
    KElem inv = nf_inverse(k, rows[r][c]);
    for (size_t i = r + 1; i < R; ++i) {
      if (nf_is_zero(rows[i][c])) continue;
      KElem f = nf_mul(k, rows[i][c], inv);
      for (size_t j = c; j < C; ++j)
        rows[i][j] = nf_sub(k, rows[i][j], nf_mul(k, f, rows[r][j]));
    }
    ++r;
    ++rank;
  }
  return rank;
}

struct Box {
  std::array<int, 3> n;
  long index(int k1, int k2, int k3) const {
    return (static_cast<long>(k1) * n[1] + k2) * n[2] + k3;
  }
};

// Canonical form of a generator index under the slot-group antisymmetry:
// exponents strictly increasing within each group of equal (block, root)
// slots; returns sign, or 0 for a repeated exponent.
struct Canon {
  long index = -1;
  int sign = 0;
};

}  // namespace

long component_dim_A_killed(const ComponentSpec& spec,
                            const std::function<bool(int, int, int)>& killed, long max_dim) {
  Box box{spec.mults};
  long gens = static_cast<long>(box.n[0]) * box.n[1] * box.n[2];
  check_dim_guard(gens, max_dim);
  const NumberField& k = spec.field;
  KElem z1 = spec.roots[0], z2 = spec.roots[1], z3 = spec.roots[2];
  KElem z12 = nf_mul(k, z1, z2), z13 = nf_mul(k, z1, z3), z23 = nf_mul(k, z2, z3);
  KElem z123 = nf_mul(k, z12, z3);
  // hol(k): [k] = sum_{I subset {1,2,3}} (prod_{j notin I} z_j) [k + delta_I]
  std::vector<std::vector<KElem>> rows;
  rows.reserve(static_cast<size_t>(gens));
  for (int k1 = 0; k1 < box.n[0]; ++k1)
    for (int k2 = 0; k2 < box.n[1]; ++k2)
      for (int k3 = 0; k3 < box.n[2]; ++k3) {
        std::vector<KElem> row(static_cast<size_t>(gens), nf_zero(k));
        auto add = [&](int a, int b, int c, const KElem& coef) {
          if (a >= box.n[0] || b >= box.n[1] || c >= box.n[2]) return;  // out of box: zero
          size_t idx = static_cast<size_t>(box.index(a, b, c));
          row[idx] = nf_add(k, row[idx], coef);
        };
        add(k1, k2, k3, nf_sub(k, nf_one(k), z123));  // [k] - z1z2z3 [k]
        add(k1 + 1, k2, k3, nf_scale(k, -1, z23));
        add(k1, k2 + 1, k3, nf_scale(k, -1, z13));
        add(k1, k2, k3 + 1, nf_scale(k, -1, z12));
        add(k1 + 1, k2 + 1, k3, nf_scale(k, -1, z3));
        add(k1 + 1, k2, k3 + 1, nf_scale(k, -1, z2));
        add(k1, k2 + 1, k3 + 1, nf_scale(k, -1, z1));
        add(k1 + 1, k2 + 1, k3 + 1, nf_scale(k, -1, nf_one(k)));
        rows.push_back(std::move(row));
        if (killed && killed(k1, k2, k3)) {
          std::vector<KElem> unit(static_cast<size_t>(gens), nf_zero(k));
          unit[static_cast<size_t>(box.index(k1, k2, k3))] = nf_one(k);
          rows.push_back(std::move(unit));
        }
      }
  long rank = nf_rank(k, rows);
  return gens - rank;
}

long component_dim_A(const ComponentSpec& spec, long max_dim) {
  return component_dim_A_killed(spec, nullptr, max_dim);
}

long component_dim_H(const ComponentSpec& spec, ComponentPattern pattern, long max_dim) {
  // groups of slots carrying equal (block, root) pairs
  std::vector<std::vector<int>> groups;
  switch (pattern) {
    case ComponentPattern::AllDistinct:
      if (spec.same[0][1] || spec.same[1][2] || spec.same[0][2])
        fail(Err::InternalError, "pattern all-distinct with equal slots");
      groups = {{0}, {1}, {2}};
      break;
    case ComponentPattern::FirstPair:
      if (!spec.same[0][1] || spec.same[1][2])
        fail(Err::InternalError, "pattern first-pair inconsistent with slots");
      groups = {{0, 1}, {2}};
      break;
    case ComponentPattern::LastPair:
      if (!spec.same[1][2] || spec.same[0][1])
        fail(Err::InternalError, "pattern last-pair inconsistent with slots");
      groups = {{0}, {1, 2}};
      break;
    case ComponentPattern::AllEqual:
      if (!spec.same[0][1] || !spec.same[1][2])
        fail(Err::InternalError, "pattern all-equal inconsistent with slots");
      groups = {{0, 1, 2}};
      break;
  }
  if (pattern == ComponentPattern::AllDistinct) return component_dim_A(spec, max_dim);

  Box box{spec.mults};
  auto canonical = [&](std::array<int, 3> e) -> std::pair<std::array<int, 3>, int> {
    int sign = 1;
    for (const auto& g : groups) {
      for (size_t a = 0; a < g.size(); ++a)
        for (size_t b = a + 1; b < g.size(); ++b) {
          int ia = g[a], ib = g[b];
          if (e[ia] == e[ib]) return {e, 0};
          if (e[ia] > e[ib]) {
            std::swap(e[ia], e[ib]);
            sign = -sign;
          }
        }
    }
    return {e, sign};
  };
  auto is_canonical = [&](int k1, int k2, int k3) {
    std::array<int, 3> e{k1, k2, k3};
    for (const auto& g : groups)
      for (size_t a = 0; a + 1 < g.size(); ++a)
        if (e[g[a]] >= e[g[a + 1]]) return false;
    return true;
  };

  // enumerate canonical generators
  std::vector<long> gen_pos(static_cast<size_t>(box.n[0]) * box.n[1] * box.n[2], -1);
  long gens = 0;
  for (int k1 = 0; k1 < box.n[0]; ++k1)
    for (int k2 = 0; k2 < box.n[1]; ++k2)
      for (int k3 = 0; k3 < box.n[2]; ++k3)
        if (is_canonical(k1, k2, k3)) gen_pos[static_cast<size_t>(box.index(k1, k2, k3))] = gens++;
  check_dim_guard(gens, max_dim);

  const NumberField& k = spec.field;
  KElem z1 = spec.roots[0], z2 = spec.roots[1], z3 = spec.roots[2];
  KElem z12 = nf_mul(k, z1, z2), z13 = nf_mul(k, z1, z3), z23 = nf_mul(k, z2, z3);
  KElem z123 = nf_mul(k, z12, z3);

  std::vector<std::vector<KElem>> rows;
  for (int k1 = 0; k1 < box.n[0]; ++k1)
    for (int k2 = 0; k2 < box.n[1]; ++k2)
      for (int k3 = 0; k3 < box.n[2]; ++k3) {
        if (!is_canonical(k1, k2, k3)) continue;
        std::vector<KElem> row(static_cast<size_t>(gens), nf_zero(k));
        auto add = [&](int a, int b, int c, const KElem& coef) {
          if (a >= box.n[0] || b >= box.n[1] || c >= box.n[2]) return;
          auto [e, sign] = canonical({a, b, c});
          if (sign == 0) return;
          long pos = gen_pos[static_cast<size_t>(box.index(e[0], e[1], e[2]))];
          KElem signed_coef = sign > 0 ? coef : nf_scale(k, -1, coef);
          row[static_cast<size_t>(pos)] = nf_add(k, row[static_cast<size_t>(pos)], signed_coef);
        };
        add(k1, k2, k3, nf_sub(k, nf_one(k), z123));
        add(k1 + 1, k2, k3, nf_scale(k, -1, z23));
        add(k1, k2 + 1, k3, nf_scale(k, -1, z13));
        add(k1, k2, k3 + 1, nf_scale(k, -1, z12));
        add(k1 + 1, k2 + 1, k3, nf_scale(k, -1, z3));
        add(k1 + 1, k2, k3 + 1, nf_scale(k, -1, z2));
        add(k1, k2 + 1, k3 + 1, nf_scale(k, -1, z1));
        add(k1 + 1, k2 + 1, k3 + 1, nf_scale(k, -1, nf_one(k)));
        rows.push_back(std::move(row));
      }
  long rank = nf_rank(k, rows);
  return gens - rank;
}

}  // namespace triple
