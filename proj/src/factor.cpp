#include "triple/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace triple {
namespace {

constexpr int kMaxIrreducibleDegree = 24;

// ---- arithmetic mod a small odd prime p (p < 2^31) ----

using Fp = std::vector<uint64_t>;  // ascending coefficients in [0, p)

void fp_trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const Fp& a) { return static_cast<int>(a.size()) - 1; }

uint64_t fp_powmod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

uint64_t fp_inv(uint64_t a, uint64_t p) { return fp_powmod(a, p - 2, p); }

Fp fp_mul(const Fp& a, const Fp& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(c);
  return c;
}

Fp fp_sub(const Fp& a, const Fp& b, uint64_t p) {
  Fp c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
  fp_trim(c);
  return c;
}

Fp fp_mod(const Fp& a, const Fp& f, uint64_t p) {
  Fp r = a;
  fp_trim(r);
  int df = fp_deg(f);
  uint64_t inv = fp_inv(f.back(), p);
  while (fp_deg(r) >= df) {
    uint64_t c = r.back() * inv % p;
    int shift = fp_deg(r) - df;
    for (int j = 0; j <= df; ++j) {
      r[j + shift] = (r[j + shift] + p - c * f[j] % p) % p;
    }
    fp_trim(r);
  }
  return r;
}

Fp fp_divexact(const Fp& a, const Fp& b, uint64_t p) {
  Fp r = a;
  fp_trim(r);
  int db = fp_deg(b);
  uint64_t inv = fp_inv(b.back(), p);
  Fp q(a.size(), 0);
  while (fp_deg(r) >= db) {
    uint64_t c = r.back() * inv % p;
    int shift = fp_deg(r) - db;
    q[shift] = c;
    for (int j = 0; j <= db; ++j) r[j + shift] = (r[j + shift] + p - c * b[j] % p) % p;
    fp_trim(r);
  }
  fp_trim(q);
  return q;
}

Fp fp_gcd(Fp a, Fp b, uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    uint64_t inv = fp_inv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
  }
  return a;
}

Fp fp_powmod_poly(const Fp& base, const Int& e, const Fp& f, uint64_t p) {
  Fp acc{1};
  Fp b = fp_mod(base, f, p);
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = fp_mod(fp_mul(acc, b, p), f, p);
    b = fp_mod(fp_mul(b, b, p), f, p);
    k >>= 1;
  }
  return acc;
}

Fp fp_derivative(const Fp& a, uint64_t p) {
  Fp d;
  for (size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * (k % p) % p);
  fp_trim(d);
  return d;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial mod an odd prime. Deterministically seeded.
void fp_edf(const Fp& f, int d, uint64_t p, std::mt19937_64& rng, std::vector<Fp>& out) {
  if (fp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  Int card;
  mpz_ui_pow_ui(card.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  Int e = (card - 1) / 2;
  while (true) {
    Fp r(static_cast<size_t>(fp_deg(f)), 0);
    for (auto& x : r) x = rng() % p;
    fp_trim(r);
    if (r.empty()) continue;
    Fp w = fp_powmod_poly(r, e, f, p);
    if (w.empty()) continue;
    w[0] = (w[0] + p - 1) % p;
    fp_trim(w);
    Fp g = fp_gcd(w, f, p);
    if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
      fp_edf(g, d, p, rng, out);
      fp_edf(fp_divexact(f, g, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<Fp> fp_factor_squarefree(const Fp& f, uint64_t p) {
  std::mt19937_64 rng(0x5eed5eedULL ^ p);
  std::vector<Fp> out;
  Fp rem = f;
  Fp h{0, 1};  // x
  Int pz(static_cast<long>(p));
  for (int d = 1; fp_deg(rem) >= 2 * (d + 1) - 1 || fp_deg(rem) >= d + 1; ++d) {
    if (fp_deg(rem) <= 0) break;
    h = fp_powmod_poly(h, pz, rem, p);
    Fp hx = fp_sub(h, Fp{0, 1}, p);
    Fp g = fp_gcd(hx, rem, p);
    if (fp_deg(g) > 0) {
      fp_edf(g, d, p, rng, out);
      rem = fp_divexact(rem, g, p);
      h = fp_mod(h, rem, p);
    }
    if (fp_deg(rem) > 0 && fp_deg(rem) < 2 * (d + 1)) {
      out.push_back(rem);
      rem = Fp{1};
      break;
    }
  }
  if (fp_deg(rem) > 0) out.push_back(rem);
  return out;
}

// ---- integer polynomial helpers ----

using ZPoly = std::vector<Int>;  // ascending, trailing nonzero

void z_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int z_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Division by a monic divisor; returns true when exact.
bool z_divexact_monic(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
  ZPoly r = a;
  z_trim(r);
  int db = z_deg(b);
  ZPoly q(a.size(), Int(0));
  while (z_deg(r) >= db) {
    Int c = r.back();
    int shift = z_deg(r) - db;
    q[shift] = c;
    for (int j = 0; j <= db; ++j) r[j + shift] -= c * b[j];
    z_trim(r);
  }
  if (!r.empty()) return false;
  z_trim(q);
  quot = q;
  return true;
}

ZPoly z_mod_coeffs(const ZPoly& a, const Int& m) {
  ZPoly r = a;
  for (auto& x : r) {
    x %= m;
    if (x < 0) x += m;
  }
  z_trim(r);
  return r;
}

ZPoly z_symmetric(const ZPoly& a, const Int& m) {
  ZPoly r = z_mod_coeffs(a, m);
  Int half = m / 2;
  for (auto& x : r)
    if (x > half) x -= m;
  z_trim(r);
  return r;
}

Fp z_to_fp(const ZPoly& a, uint64_t p) {
  Fp r(a.size(), 0);
  Int pz(static_cast<long>(p));
  for (size_t i = 0; i < a.size(); ++i) {
    Int m = a[i] % pz;
    if (m < 0) m += pz;
    r[i] = m.get_ui();
  }
  fp_trim(r);
  return r;
}

ZPoly fp_to_z(const Fp& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
  return r;
}

Poly z_to_poly(const ZPoly& a) {
  std::vector<Rat> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = Rat(a[i]);
  return Poly(std::move(c));
}

// Linear multifactor Hensel lifting of a monic squarefree factorization
// f = prod g_i (mod p) up to modulus p^K.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<Fp>& factors, uint64_t p, int K) {
  size_t r = factors.size();
  // Bezout data: s_i = (prod_{j != i} g_j)^{-1} mod (g_i, p)
  std::vector<Fp> s(r);
  for (size_t i = 0; i < r; ++i) {
    Fp u{1};
    for (size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      u = fp_mod(fp_mul(u, factors[j], p), factors[i], p);
    }
    // invert u mod (factors[i], p) by extended Euclid in Fp[x]
    Fp a = factors[i], b = u;
    Fp ua{}, ub{1};
    while (!b.empty()) {
      // a = q b + rem
      Fp rem = a;
      Fp q(a.size(), 0);
      uint64_t inv = fp_inv(b.back(), p);
      while (fp_deg(rem) >= fp_deg(b)) {
        uint64_t c = rem.back() * inv % p;
        int shift = fp_deg(rem) - fp_deg(b);
        q[static_cast<size_t>(shift)] = c;
        for (int j = 0; j <= fp_deg(b); ++j)
          rem[j + shift] = (rem[j + shift] + p - c * b[j] % p) % p;
        fp_trim(rem);
      }
      fp_trim(q);
      Fp unew = fp_sub(ua, fp_mul(q, ub, p), p);
      a = std::move(b);
      b = std::move(rem);
      ua = std::move(ub);
      ub = std::move(unew);
    }
    uint64_t lead_inv = fp_inv(a.back(), p);
    for (auto& x : ua) x = x * lead_inv % p;
    s[i] = fp_mod(ua, factors[i], p);
  }

  std::vector<ZPoly> lifted(r);
  for (size_t i = 0; i < r; ++i) lifted[i] = fp_to_z(factors[i]);
  Int pz(static_cast<long>(p));
  Int modulus = pz;
  for (int step = 1; step < K; ++step) {
    // error e = (f - prod lifted) / p^step mod p
    ZPoly prod{Int(1)};
    for (const auto& g : lifted) prod = z_mul(prod, g);
    ZPoly diff(std::max(f.size(), prod.size()), Int(0));
    for (size_t i = 0; i < f.size(); ++i) diff[i] += f[i];
    for (size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
    ZPoly e(diff.size());
    for (size_t i = 0; i < diff.size(); ++i) e[i] = diff[i] / modulus;
    Fp ep = z_to_fp(e, p);
    for (size_t i = 0; i < r; ++i) {
      Fp delta = fp_mod(fp_mul(s[i], ep, p), factors[i], p);
      ZPoly dz = fp_to_z(delta);
      if (lifted[i].size() < factors[i].size()) lifted[i].resize(factors[i].size(), Int(0));
      for (size_t j = 0; j < dz.size(); ++j) lifted[i][j] += modulus * dz[j];
    }
    modulus *= pz;
  }
  return lifted;
}

// Landau-Mignotte style bound on coefficients of monic factors of monic f.
Int factor_bound(const ZPoly& f) {
  Int norm2_sq(0);
  for (const auto& c : f) norm2_sq += c * c;
  Int norm = sqrt(norm2_sq) + 1;
  Int b = norm << static_cast<unsigned>(z_deg(f));
  return b;
}

// Factor a monic squarefree integer polynomial into monic irreducible
// integer factors (Zassenhaus recombination).
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  if (z_deg(f) == 1) return {f};
  static const uint64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                     59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  uint64_t best_p = 0;
  std::vector<Fp> best;
  int tried = 0;
  for (uint64_t p : kPrimes) {
    Fp fp = z_to_fp(f, p);
    if (fp_deg(fp) != z_deg(f)) continue;  // should not happen, f monic
    Fp d = fp_derivative(fp, p);
    Fp g = fp_gcd(fp, d, p);
    if (fp_deg(g) != 0) continue;  // not squarefree mod p
    std::vector<Fp> fac = fp_factor_squarefree(fp, p);
    if (best.empty() || fac.size() < best.size()) {
      best = fac;
      best_p = p;
    }
    if (best.size() == 1) break;
    if (++tried >= 4) break;
  }
  if (best.empty()) fail(Err::InternalError, "no usable prime for factorization");
  if (best.size() == 1) return {f};

  // lifting precision: p^K > 2 * bound
  Int bound = factor_bound(f) * 2;
  Int pz(static_cast<long>(best_p));
  Int mod = pz;
  int K = 1;
  while (mod <= bound) {
    mod *= pz;
    ++K;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, best, best_p, K);

  std::vector<ZPoly> out;
  ZPoly rem_poly = f;
  std::vector<size_t> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = i;
  size_t subset_size = 1;
  while (2 * subset_size <= live.size()) {
    // iterate over index combinations of the live modular factors
    std::vector<size_t> comb(subset_size);
    for (size_t i = 0; i < subset_size; ++i) comb[i] = i;
    bool removed = false;
    while (true) {
      ZPoly cand{Int(1)};
      for (size_t c : comb) cand = z_mul(cand, lifted[live[c]]);
      cand = z_symmetric(cand, mod);
      ZPoly quot;
      if (!cand.empty() && cand.back() == 1 && z_divexact_monic(rem_poly, cand, quot)) {
        out.push_back(cand);
        rem_poly = quot;
        std::vector<size_t> next_live;
        for (size_t i = 0; i < live.size(); ++i)
          if (std::find(comb.begin(), comb.end(), i) == comb.end()) next_live.push_back(live[i]);
        live = next_live;
        removed = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(subset_size) - 1;
      while (pos >= 0 && comb[pos] == live.size() - subset_size + pos) --pos;
      if (pos < 0) break;
      ++comb[pos];
      for (size_t j = pos + 1; j < subset_size; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!removed) ++subset_size;
  }
  if (z_deg(rem_poly) > 0) out.push_back(rem_poly);
  return out;
}

// F(x) = lc^{n-1} f(x/lc): monic integer polynomial with roots lc * (roots of f).
ZPoly to_monic_integer(const ZPoly& f) {
  int n = z_deg(f);
  const Int& lc = f.back();
  ZPoly F(f.size());
  Int scale(1);
  for (int j = n; j >= 0; --j) {
    F[j] = f[j] * scale;
    if (j > 0) scale *= lc;
  }
  return F;
}

// Monic rational factor of f corresponding to a monic factor G of the
// to_monic transform: g(x) = G(lc x) / lc^{deg G}.
Poly from_monic_factor(const ZPoly& G, const Int& lc) {
  int d = z_deg(G);
  std::vector<Rat> c(G.size());
  Int denom(1);
  mpz_pow_ui(denom.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(d));
  Int num(1);
  for (int j = 0; j <= d; ++j) {
    c[j] = rat_of(G[j] * num, denom);
    num *= lc;
  }
  return Poly(std::move(c));
}

ZPoly primitive_integer(const Poly& f) {
  Int den(1);
  for (const auto& c : f.coeffs()) den = den / gcd(den, c.get_den()) * c.get_den();
  ZPoly z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    Rat scaled = f.coeffs()[i] * Rat(den);
    z[i] = scaled.get_num();
  }
  Int content(0);
  for (const auto& c : z) content = gcd(content, c);
  if (content != 0)
    for (auto& c : z) c /= content;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

// Yun's squarefree decomposition of the monic part: f ~ prod a_i^i.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f) {
  Poly f0 = f.monic();
  std::vector<std::pair<Poly, int>> out;
  Poly g = poly_gcd(f0, f0.derivative());
  if (g.degree() <= 0) {
    out.push_back({f0, 1});
    return out;
  }
  Poly b = poly_divexact(f0, g);  // monic since f0 and g are
  Poly c = poly_divexact(f0.derivative(), g);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = poly_divexact(b, a);
    c = poly_divexact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Poly> factor_squarefree_rational(const Poly& f) {
  ZPoly z = primitive_integer(f);
  if (z_deg(z) < 1) return {};
  if (z_deg(z) == 1) return {z_to_poly(z).monic()};
  Int lc = z.back();
  ZPoly F = to_monic_integer(z);
  std::vector<ZPoly> facs = factor_monic_squarefree(F);
  std::vector<Poly> out;
  for (const auto& G : facs) {
    Poly g = from_monic_factor(G, lc);
    out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_rational(const Poly& f) {
  if (f.is_zero()) fail(Err::ZeroPolynomial, "factoring the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;
  for (const auto& [part, mult] : squarefree_decompose(f)) {
    if (part.degree() > kMaxIrreducibleDegree)
      fail(Err::UnsupportedDegree, "squarefree part exceeds degree 24");
    for (const auto& g : factor_squarefree_rational(part)) out.push_back({g, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int k = a.first.degree(); k >= 0; --k) {
      if (a.first.coeff(k) != b.first.coeff(k)) return a.first.coeff(k) < b.first.coeff(k);
    }
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() > kMaxIrreducibleDegree)
    fail(Err::UnsupportedDegree, "irreducibility test limited to degree 24");
  if (poly_gcd(f, f.derivative()).degree() > 0) return false;
  auto facs = factor_squarefree_rational(f.monic());
  return facs.size() == 1;
}

PrimePower prime_power_decompose(const Poly& f) {
  if (f.degree() < 1) fail(Err::NotPrimePower, "constant polynomial is not a prime power");
  Poly g = poly_gcd(f, f.derivative());
  Poly radical = g.degree() > 0 ? poly_divexact(f, g).monic() : f.monic();
  if (f.degree() % radical.degree() != 0) fail(Err::NotPrimePower, "degree not a multiple of the radical degree");
  int mult = f.degree() / radical.degree();
  if (!(poly_pow(radical, static_cast<unsigned>(mult)) == f.monic()))
    fail(Err::NotPrimePower, "not a power of its radical");
  if (radical.degree() > kMaxIrreducibleDegree)
    fail(Err::UnsupportedDegree, "radical exceeds degree 24");
  if (!is_irreducible(radical)) fail(Err::NotPrimePower, "radical is reducible");
  return PrimePower{radical, mult};
}

}  // namespace triple
