#include "triple/surgery.hpp"

#include <algorithm>
#include <numeric>

namespace triple {

namespace {

const std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2},
                                                   {0, 2, 1},
                                                   {1, 0, 2},
                                                   {1, 2, 0},
                                                   {2, 0, 1},
                                                   {2, 1, 0}}};

void check_element(const BlanchfieldModule& m, const ModuleElement& x) {
  if (x.comp.size() != static_cast<size_t>(m.count()))
    fail(Err::ModuleMismatch, "element does not match the module");
}

QVec poly_coords(const Poly& p, int n) {
  QVec v(static_cast<size_t>(n), Rat(0));
  for (int j = 0; j <= p.degree(); ++j) v[static_cast<size_t>(j)] = p.coeff(j);
  return v;
}

}  // namespace

PhiFamily variation(RingCache& rings, const SurgeryDatum& s) {
  const BlanchfieldModule& m = rings.module();
  for (const auto& leaf : s.leaves) check_element(m, leaf);
  PhiFamily out;
  for (const auto& i : rings.spaces().sorted_classes()) {
    const TripleRing& ring = rings.ring(i);
    if (ring.dim() == 0) continue;
    RingElem acc = ring.zero();
    for (const auto& sigma : kPerms) {
      Poly n1 = block_pairing_numerator(m, i[0], s.leaves[static_cast<size_t>(sigma[0])]);
      if (n1.is_zero()) continue;
      Poly n2 = block_pairing_numerator(m, i[1], s.leaves[static_cast<size_t>(sigma[1])]);
      if (n2.is_zero()) continue;
      Poly n3 = block_pairing_numerator(m, i[2], s.leaves[static_cast<size_t>(sigma[2])]);
      if (n3.is_zero()) continue;
      RingElem term = ring.from_tripoly(n1, n2, n3);
      acc = ring.add(acc, ring.scale(Rat(perm_sign(sigma)), term));
    }
    RingElem projected = ring.antisymmetrize(acc);
    bool fixed = true;
    for (size_t k = 0; k < acc.c.size(); ++k)
      if (acc.c[k] != projected.c[k]) fixed = false;
    if (!fixed) fail(Err::InternalError, "variation value is not antisymmetric");
    if (!ring.is_zero(acc)) out.values.emplace(i, acc);
  }
  return out;
}

RingElem elementary_variation(RingCache& rings, const ClassIndex& i, const std::array<long, 3>& k,
                              const Rat& r) {
  if (!is_sorted_index(i)) fail(Err::NotSorted, "elementary variation takes sorted classes");
  const TripleRing& ring = rings.ring(i);
  RingElem acc = ring.zero();
  if (r == 0) return acc;
  for (const auto& sigma : ring.stabilizer()) {
    RingElem mono = ring.monomial(k[static_cast<size_t>(sigma[0])], k[static_cast<size_t>(sigma[1])],
                                  k[static_cast<size_t>(sigma[2])], Rat(perm_sign(sigma)));
    acc = ring.add(acc, mono);
  }
  return ring.scale(r, acc);
}

SurgeryDatum elementary_leaves(const BlanchfieldModule& m, const ClassIndex& i,
                               const std::array<long, 3>& k, const Rat& r) {
  if (!is_sorted_index(i)) fail(Err::NotSorted, "elementary leaves take sorted classes");
  SurgeryDatum s{{zero_element(m), zero_element(m), zero_element(m)}};
  for (int j = 0; j < 3; ++j) {
    int g = i[static_cast<size_t>(j)];
    const GeneratorRecord& rec = m.gen(g);
    Poly ainv = mod_inverse(rec.pairing_numerator, rec.delta_monic);
    LPoly lifted = LPoly(ainv).substitute_inverse();
    LPoly shifted = LPoly(-k[static_cast<size_t>(j)], {Rat(1)}) * lifted;
    s.leaves[static_cast<size_t>(j)].comp[static_cast<size_t>(rec.dual)] =
        m.reduce_mod_gen(rec.dual, shifted);
  }
  s.leaves[0] = element_scale(m, r, s.leaves[0]);
  return s;
}

SpanCheck span_Ra_check(RingCache& rings, const ClassIndex& i) {
  if (!is_sorted_index(i)) fail(Err::NotSorted, "span check takes sorted classes");
  const TripleRing& ring = rings.ring(i);
  auto [sym, antisym] = ring.split_sym_antisym();
  SpanCheck out;
  out.target_dim = antisym.dim();
  if (out.target_dim == 0) {
    out.ok = true;
    return out;
  }
  const BlanchfieldModule& m = rings.module();
  long n1 = m.gen(i[0]).delta_monic.degree();
  long n2 = m.gen(i[1]).delta_monic.degree();
  long n3 = m.gen(i[2]).delta_monic.degree();
  QMat rows(static_cast<int>(n1 * n2 * n3), ring.dim());
  int row = 0;
  for (long k1 = 0; k1 < n1; ++k1)
    for (long k2 = 0; k2 < n2; ++k2)
      for (long k3 = 0; k3 < n3; ++k3, ++row) {
        RingElem v = elementary_variation(rings, i, {k1, k2, k3}, Rat(1));
        for (int c = 0; c < ring.dim(); ++c) rows.at(row, c) = v.c[static_cast<size_t>(c)];
      }
  out.span_dim = rank(rows);
  out.ok = out.span_dim == out.target_dim;
  return out;
}

PhiFamily family_zero() { return PhiFamily{}; }

PhiFamily family_add(RingCache& rings, const PhiFamily& a, const PhiFamily& b) {
  PhiFamily out = a;
  for (const auto& [idx, val] : b.values) {
    auto it = out.values.find(idx);
    if (it == out.values.end()) {
      out.values.emplace(idx, val);
    } else {
      const TripleRing& ring = rings.ring(idx);
      it->second = ring.add(it->second, val);
    }
  }
  return out;
}

PhiFamily family_scale(RingCache& rings, const Rat& s, const PhiFamily& a) {
  PhiFamily out;
  if (s == 0) return out;
  for (const auto& [idx, val] : a.values) out.values.emplace(idx, rings.ring(idx).scale(s, val));
  return out;
}

bool family_is_zero(RingCache& rings, const PhiFamily& a) {
  for (const auto& [idx, val] : a.values)
    if (!rings.ring(idx).is_zero(val)) return false;
  return true;
}

RingElem phi_evaluate(RingCache& rings, const PhiFamily& phi, const ModuleElement& b1,
                      const ModuleElement& b2, const ModuleElement& b3) {
  const BlanchfieldModule& m = rings.module();
  check_element(m, b1);
  check_element(m, b2);
  check_element(m, b3);
  const TripleRing& global = rings.global_ring();
  RingElem result = global.zero();
  int q = m.count();
  const std::array<const ModuleElement*, 3> xs{&b1, &b2, &b3};
  for (int g1 = 0; g1 < q; ++g1)
    for (int g2 = 0; g2 < q; ++g2)
      for (int g3 = 0; g3 < q; ++g3) {
        ClassIndex g{g1, g2, g3};
        std::array<Poly, 3> comps;
        bool zero = false;
        for (int j = 0; j < 3; ++j) {
          comps[static_cast<size_t>(j)] = xs[static_cast<size_t>(j)]->comp[static_cast<size_t>(g[static_cast<size_t>(j)])];
          if (comps[static_cast<size_t>(j)].is_zero()) zero = true;
        }
        if (zero) continue;
        ClassIndex s = sorted_index(g);
        auto it = phi.values.find(s);
        if (it == phi.values.end()) continue;
        const TripleRing& ring_s = rings.ring(s);
        if (ring_s.is_zero(it->second)) continue;
        // permutation with g_j = s_{sigma(j)}
        std::array<int, 3> sigma{};
        bool found = false;
        for (const auto& p : kPerms) {
          if (s[static_cast<size_t>(p[0])] == g1 && s[static_cast<size_t>(p[1])] == g2 &&
              s[static_cast<size_t>(p[2])] == g3) {
            sigma = p;
            found = true;
            break;
          }
        }
        if (!found) fail(Err::InternalError, "no permutation sorts the class");
        int eps = perm_sign(sigma);
        // value on the ordered class: monomial exponents permuted by sigma
        QVec lifted = ring_s.lift(it->second);
        const auto& monos = ring_s.a0_monomials();
        QVec acc(static_cast<size_t>(global.ambient_dim()), Rat(0));
        for (size_t idx = 0; idx < lifted.size(); ++idx) {
          if (lifted[idx] == 0) continue;
          auto [a, b] = monos[idx];
          std::array<long, 3> k{a, b, 0};
          QVec mono = global.monomial_a0(k[static_cast<size_t>(sigma[0])], k[static_cast<size_t>(sigma[1])],
                                         k[static_cast<size_t>(sigma[2])]);
          for (size_t j = 0; j < acc.size(); ++j)
            if (mono[j] != 0) acc[j] += lifted[idx] * mono[j];
        }
        RingElem value_g = global.normal_form(acc);
        // cofactor (delta/delta_{g_j})(t_j) and the coefficients P_j(t_j)
        std::array<Poly, 3> slot;
        for (int j = 0; j < 3; ++j) {
          Poly cof = poly_divexact(m.global_delta(), m.gen(g[static_cast<size_t>(j)]).delta);
          slot[static_cast<size_t>(j)] = comps[static_cast<size_t>(j)] * cof;
        }
        RingElem factor = global.from_tripoly(slot[0], slot[1], slot[2]);
        result = global.add(result, global.scale(Rat(eps), global.mul(value_g, factor)));
      }
  return result;
}

HVector h_of_phi(RingCache& rings, const PhiFamily& phi) {
  HLayout layout = h_layout(rings.spaces());
  HVector out(static_cast<size_t>(layout.total), Rat(0));
  for (size_t c = 0; c < layout.classes.size(); ++c) {
    const ClassIndex& i = layout.classes[c];
    auto it = phi.values.find(i);
    if (it == phi.values.end()) continue;
    const TripleRing& ring = rings.ring(i);
    QVec coords = ring.p_map(it->second);
    for (size_t j = 0; j < coords.size(); ++j) out[static_cast<size_t>(layout.offsets[c]) + j] = coords[j];
  }
  return out;
}

HVector wedge_class(const SpaceCache& spaces, const ModuleElement& b1, const ModuleElement& b2,
                    const ModuleElement& b3) {
  const BlanchfieldModule& m = spaces.module();
  check_element(m, b1);
  check_element(m, b2);
  check_element(m, b3);
  HLayout layout = h_layout(spaces);
  HVector out(static_cast<size_t>(layout.total), Rat(0));
  int q = m.count();
  const std::array<const ModuleElement*, 3> xs{&b1, &b2, &b3};
  for (int g1 = 0; g1 < q; ++g1)
    for (int g2 = 0; g2 < q; ++g2)
      for (int g3 = 0; g3 < q; ++g3) {
        ClassIndex g{g1, g2, g3};
        std::array<Poly, 3> comps;
        bool zero = false;
        for (int j = 0; j < 3; ++j) {
          comps[static_cast<size_t>(j)] = xs[static_cast<size_t>(j)]->comp[static_cast<size_t>(g[static_cast<size_t>(j)])];
          if (comps[static_cast<size_t>(j)].is_zero()) zero = true;
        }
        if (zero) continue;
        // stable sort of the slots by generator index
        std::array<int, 3> perm{0, 1, 2};
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
          return g[static_cast<size_t>(a)] < g[static_cast<size_t>(b)];
        });
        int eps = perm_sign(perm);
        ClassIndex s{g[static_cast<size_t>(perm[0])], g[static_cast<size_t>(perm[1])], g[static_cast<size_t>(perm[2])]};
        auto space = spaces.h_class(s);
        if (space->dim == 0) continue;
        std::array<QVec, 3> y;
        std::array<int, 3> n;
        for (int l = 0; l < 3; ++l) {
          n[static_cast<size_t>(l)] = m.gen(s[static_cast<size_t>(l)]).delta_monic.degree();
          y[static_cast<size_t>(l)] = poly_coords(comps[static_cast<size_t>(perm[static_cast<size_t>(l)])],
                                                  n[static_cast<size_t>(l)]);
        }
        QVec ambient(static_cast<size_t>(space->ambient), Rat(0));
        if (s[0] != s[1] && s[1] != s[2]) {
          for (int a = 0; a < n[0]; ++a) {
            if (y[0][static_cast<size_t>(a)] == 0) continue;
            for (int b = 0; b < n[1]; ++b) {
              if (y[1][static_cast<size_t>(b)] == 0) continue;
              Rat ab = y[0][static_cast<size_t>(a)] * y[1][static_cast<size_t>(b)];
              for (int c = 0; c < n[2]; ++c)
                if (y[2][static_cast<size_t>(c)] != 0)
                  ambient[static_cast<size_t>((static_cast<long>(a) * n[1] + b) * n[2] + c)] += ab * y[2][static_cast<size_t>(c)];
            }
          }
        } else if (s[0] == s[1] && s[1] == s[2]) {
          for (int a = 0; a < n[0]; ++a)
            for (int b = a + 1; b < n[0]; ++b)
              for (int c = b + 1; c < n[0]; ++c) {
                Rat det = y[0][static_cast<size_t>(a)] * (y[1][static_cast<size_t>(b)] * y[2][static_cast<size_t>(c)] -
                                                          y[1][static_cast<size_t>(c)] * y[2][static_cast<size_t>(b)]) -
                          y[1][static_cast<size_t>(a)] * (y[0][static_cast<size_t>(b)] * y[2][static_cast<size_t>(c)] -
                                                          y[0][static_cast<size_t>(c)] * y[2][static_cast<size_t>(b)]) +
                          y[2][static_cast<size_t>(a)] * (y[0][static_cast<size_t>(b)] * y[1][static_cast<size_t>(c)] -
                                                          y[0][static_cast<size_t>(c)] * y[1][static_cast<size_t>(b)]);
                if (det != 0) ambient[static_cast<size_t>(comb3_index(n[0], a, b, c))] += det;
              }
        } else if (s[0] == s[1]) {
          for (int a = 0; a < n[0]; ++a)
            for (int b = a + 1; b < n[0]; ++b) {
              Rat w = y[0][static_cast<size_t>(a)] * y[1][static_cast<size_t>(b)] -
                      y[0][static_cast<size_t>(b)] * y[1][static_cast<size_t>(a)];
              if (w == 0) continue;
              long base = comb2_index(n[0], a, b) * n[2];
              for (int c = 0; c < n[2]; ++c)
                if (y[2][static_cast<size_t>(c)] != 0)
                  ambient[static_cast<size_t>(base + c)] += w * y[2][static_cast<size_t>(c)];
            }
        } else {
          for (int b = 0; b < n[1]; ++b)
            for (int c = b + 1; c < n[1]; ++c) {
              Rat w = y[1][static_cast<size_t>(b)] * y[2][static_cast<size_t>(c)] -
                      y[1][static_cast<size_t>(c)] * y[2][static_cast<size_t>(b)];
              if (w == 0) continue;
              long pair = comb2_index(n[1], b, c);
              for (int a = 0; a < n[0]; ++a)
                if (y[0][static_cast<size_t>(a)] != 0)
                  ambient[static_cast<size_t>(static_cast<long>(a) * binom(n[1], 2) + pair)] +=
                      y[0][static_cast<size_t>(a)] * w;
            }
        }
        QVec coords = space->quotient_coords(ambient);
        size_t block = 0;
        while (layout.classes[block] != s) ++block;
        for (size_t j = 0; j < coords.size(); ++j)
          out[static_cast<size_t>(layout.offsets[block]) + j] += eps > 0 ? coords[j] : -coords[j];
      }
  return out;
}

YDiagram make_diagram(const BlanchfieldModule& m, const std::array<ModuleElement, 3>& labels,
                      const LPoly& g12, const LPoly& g13, const LPoly& g23) {
  YDiagram d{labels,
             {pairing_class(m, labels[0], labels[1]), g12},
             {pairing_class(m, labels[0], labels[2]), g13},
             {pairing_class(m, labels[1], labels[2]), g23}};
  return d;
}

HVector diagram_reduce(RingCache& rings, const YDiagram& d) {
  const BlanchfieldModule& m = rings.module();
  for (const auto& label : d.labels) check_element(m, label);
  if (!(d.f12.cls == pairing_class(m, d.labels[0], d.labels[1])))
    fail(Err::IncompatibleLinkings, "f12 class part differs from the pairing");
  if (!(d.f13.cls == pairing_class(m, d.labels[0], d.labels[2])))
    fail(Err::IncompatibleLinkings, "f13 class part differs from the pairing");
  if (!(d.f23.cls == pairing_class(m, d.labels[1], d.labels[2])))
    fail(Err::IncompatibleLinkings, "f23 class part differs from the pairing");
  return wedge_class(rings.spaces(), d.labels[0], d.labels[1], d.labels[2]);
}

DegreeOneReport degree_one_report(RingCache& rings) {
  DegreeOneReport out;
  for (const auto& i : rings.spaces().sorted_classes()) {
    long dim = rings.spaces().h_class(i)->dim;
    out.class_dims.push_back({i, dim});
    out.dim_h += dim;
  }
  return out;
}

}  // namespace triple
