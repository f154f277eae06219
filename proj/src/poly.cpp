#include "triple/poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace triple {

const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::ValueAtOneIsZero: return "ValueAtOneIsZero";
    case Err::NotPrimePower: return "NotPrimePower";
    case Err::UnsupportedDegree: return "UnsupportedDegree";
    case Err::RootAtZero: return "RootAtZero";
    case Err::NotCoprime: return "NotCoprime";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::DimensionTooSmall: return "DimensionTooSmall";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::ResourceGuard: return "ResourceGuard";
    case Err::InvalidKindCondition: return "InvalidKindCondition";
    case Err::PairingNotCoprime: return "PairingNotCoprime";
    case Err::NotIrreducible: return "NotIrreducible";
    case Err::NormalizationFailure: return "NormalizationFailure";
    case Err::NotSorted: return "NotSorted";
    case Err::NotInStabilizer: return "NotInStabilizer";
    case Err::RingMismatch: return "RingMismatch";
    case Err::ModuleMismatch: return "ModuleMismatch";
    case Err::IncompatibleLinkings: return "IncompatibleLinkings";
    case Err::ParseError: return "ParseError";
    case Err::InternalError: return "InternalError";
  }
  return "Error";
}

Rat rat(long num, long den) {
  if (den == 0) fail(Err::DivisionByZero, "rational with zero denominator");
  Rat x(num, den);
  x.canonicalize();
  return x;
}

Rat rat_of(const Int& num, const Int& den) {
  if (den == 0) fail(Err::DivisionByZero, "rational with zero denominator");
  Rat x(num, den);
  x.canonicalize();
  return x;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& x) {
  Poly p;
  if (x != 0) p.c_ = {x};
  return p;
}

Poly Poly::t() {
  Poly p;
  p.c_ = {Rat(0), Rat(1)};
  return p;
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[k];
}

const Rat& Poly::leading() const {
  if (c_.empty()) fail(Err::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(Rat(static_cast<long>(k)) * c_[k]);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) fail(Err::ZeroPolynomial, "monic of zero polynomial");
  Rat inv = 1 / c_.back();
  std::vector<Rat> d = c_;
  for (auto& x : d) x *= inv;
  return Poly(std::move(d));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Rat> d(static_cast<size_t>(k), Rat(0));
  d.insert(d.end(), c_.begin(), c_.end());
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < a.c_.size(); ++k) d[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) d[k] += b.c_[k];
  return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t k = 0; k < a.c_.size(); ++k) d[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) d[k] -= b.c_[k];
  return Poly(std::move(d));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(d));
}

Poly operator*(const Rat& s, const Poly& a) {
  std::vector<Rat> d = a.c_;
  for (auto& x : d) x *= s;
  return Poly(std::move(d));
}

Poly operator-(const Poly& a) { return Rat(-1) * a; }

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Err::ZeroPolynomial, "division by zero polynomial");
  std::vector<Rat> r = a.coeffs();
  int db = b.degree();
  int da = static_cast<int>(r.size()) - 1;
  if (da < db) return {Poly(), a};
  std::vector<Rat> q(static_cast<size_t>(da - db + 1), Rat(0));
  Rat lead_inv = 1 / b.leading();
  for (int k = da; k >= db; --k) {
    if (r[k] == 0) continue;
    Rat f = r[k] * lead_inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).rem; }

Poly poly_divexact(const Poly& a, const Poly& b) {
  auto qr = poly_divmod(a, b);
  if (!qr.rem.is_zero()) fail(Err::InternalError, "polynomial division expected to be exact");
  return qr.quot;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

PolyEgcd poly_egcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(), u1;
  Poly v0, v1 = Poly::one();
  while (!r1.is_zero()) {
    auto qr = poly_divmod(r0, r1);
    Poly r2 = qr.rem;
    Poly u2 = u0 - qr.quot * u1;
    Poly v2 = v0 - qr.quot * v1;
    r0 = r1; r1 = r2;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rat inv = 1 / r0.leading();
  return {inv * r0, inv * u0, inv * v0};
}

Poly poly_pow(const Poly& a, unsigned e) {
  Poly acc = Poly::one();
  Poly base = a;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

Poly poly_powmod(const Poly& a, const Int& e, const Poly& f) {
  Poly acc = poly_mod(Poly::one(), f);
  Poly base = poly_mod(a, f);
  Int k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = poly_mod(acc * base, f);
    base = poly_mod(base * base, f);
    k >>= 1;
  }
  return acc;
}

LPoly::LPoly(long offset, std::vector<Rat> coeffs) : off_(offset), c_(std::move(coeffs)) {
  // strip leading zeros, adjusting the offset
  const auto& v = c_.coeffs();
  size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) {
    off_ = 0;
    c_ = Poly();
    return;
  }
  if (lead > 0) {
    std::vector<Rat> d(v.begin() + static_cast<long>(lead), v.end());
    off_ += static_cast<long>(lead);
    c_ = Poly(std::move(d));
  }
}

LPoly::LPoly(const Poly& p) : off_(0), c_(p) {
  const auto& v = c_.coeffs();
  size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) {
    c_ = Poly();
    return;
  }
  if (lead > 0) {
    std::vector<Rat> d(v.begin() + static_cast<long>(lead), v.end());
    off_ = static_cast<long>(lead);
    c_ = Poly(std::move(d));
  }
}

Rat LPoly::coeff(long k) const { return c_.coeff(static_cast<int>(k - off_)); }

Rat LPoly::eval(const Rat& x) const {
  if (is_zero()) return Rat(0);
  Rat base = c_.eval(x);
  if (off_ == 0) return base;
  if (x == 0) fail(Err::DivisionByZero, "Laurent evaluation at 0 with negative offset");
  Rat p(1);
  long k = off_;
  Rat xx = k > 0 ? x : Rat(1 / x);
  for (long j = 0; j < std::abs(k); ++j) p *= xx;
  return base * p;
}

LPoly LPoly::substitute_inverse() const {
  if (is_zero()) return LPoly();
  std::vector<Rat> rev(c_.coeffs().rbegin(), c_.coeffs().rend());
  return LPoly(-highest(), std::move(rev));
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.off_, b.off_);
  long hi = std::max(a.highest(), b.highest());
  std::vector<Rat> d(static_cast<size_t>(hi - lo + 1), Rat(0));
  for (long k = a.off_; k <= a.highest(); ++k) d[k - lo] += a.coeff(k);
  for (long k = b.off_; k <= b.highest(); ++k) d[k - lo] += b.coeff(k);
  return LPoly(lo, std::move(d));
}

LPoly operator-(const LPoly& a, const LPoly& b) { return a + Rat(-1) * b; }

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return LPoly();
  Poly prod = a.c_ * b.c_;
  return LPoly(a.off_ + b.off_, prod.coeffs());
}

LPoly operator*(const Rat& s, const LPoly& a) {
  if (s == 0 || a.is_zero()) return LPoly();
  Poly scaled = s * a.c_;
  return LPoly(a.off_, scaled.coeffs());
}

LPoly operator-(const LPoly& a) { return Rat(-1) * a; }

Poly normalize_delta(const LPoly& f) {
  if (f.is_zero()) fail(Err::ZeroPolynomial, "normalize_delta of zero");
  const Poly& p = f.unit_part();  // p(0) != 0, same ideal in Q[t^{+-1}]
  Rat v = p.eval(1);
  if (v == 0) fail(Err::ValueAtOneIsZero, "annihilator vanishes at t=1");
  return (1 / v) * p;
}

std::optional<std::pair<Rat, long>> symmetry_decompose(const LPoly& f) {
  if (f.is_zero()) fail(Err::ZeroPolynomial, "symmetry_decompose of zero");
  // f(t^{-1}) and t^k f(t) have supports [-hi,-lo] and [lo+k, hi+k]: k = -hi-lo.
  long k = -f.highest() - f.lowest();
  const auto& c = f.unit_part().coeffs();
  size_t n = c.size();
  Rat r = c[n - 1] / c[0];  // reversed leading over leading
  for (size_t j = 0; j < n; ++j) {
    if (c[n - 1 - j] != r * c[j]) return std::nullopt;
  }
  return std::make_pair(r, k);
}

Rat resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) fail(Err::ZeroPolynomial, "resultant with zero polynomial");
  int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return Rat(1);
  // Sylvester matrix, f-rows first, descending coefficients.
  int dim = m + n;
  std::vector<std::vector<Rat>> s(static_cast<size_t>(dim),
                                  std::vector<Rat>(static_cast<size_t>(dim), Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
  // Fraction-free Bareiss elimination; determinant is the last pivot.
  Rat sign(1);
  Rat prev(1);
  for (int k = 0; k < dim - 1; ++k) {
    if (s[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < dim; ++i)
        if (s[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return Rat(0);
      std::swap(s[k], s[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j)
        s[i][j] = (s[k][k] * s[i][j] - s[i][k] * s[k][j]) / prev;
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return sign * s[dim - 1][dim - 1];
}

Poly recip(const Poly& f) {
  if (f.is_zero() || f.coeff(0) == 0) fail(Err::RootAtZero, "recip requires f(0) != 0");
  std::vector<Rat> rev(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(std::move(rev));
}

namespace {

// Lagrange interpolation through (x_i, y_i), distinct x_i.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  Poly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly num = Poly::one();
    Rat den(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      num = num * (Poly::t() - Poly::constant(xs[j]));
      den *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / den) * num;
  }
  return acc;
}

}  // namespace

Poly prodpoly(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) fail(Err::ZeroPolynomial, "prodpoly with zero polynomial");
  if (f.coeff(0) == 0 || g.coeff(0) == 0) fail(Err::RootAtZero, "prodpoly requires nonzero constant terms");
  int dg = g.degree();
  int deg_out = f.degree() * dg;
  if (deg_out == 0) return Poly::one();
  // Res_x(f(x), x^{deg g} g(u/x)) in u, by evaluation and interpolation. The
  // x-degree of the second argument is deg g for every u (its x-leading
  // coefficient is g(0)), so specializing u commutes with the determinant.
  std::vector<Rat> xs, ys;
  for (int i = 0; i <= deg_out; ++i) {
    Rat u = rat(i);
    std::vector<Rat> h(static_cast<size_t>(dg) + 1, Rat(0));
    Rat upow(1);
    for (int j = 0; j <= dg; ++j) {
      h[dg - j] = g.coeff(j) * upow;
      upow *= u;
    }
    xs.push_back(u);
    ys.push_back(resultant(f, Poly(std::move(h))));
  }
  Poly res = interpolate(xs, ys);
  if (res.degree() != deg_out) fail(Err::InternalError, "prodpoly degree mismatch");
  return res.monic();
}

Poly rootpow(const Poly& f, int e) {
  if (e != 2 && e != 3) fail(Err::InternalError, "rootpow exponent must be 2 or 3");
  if (f.is_zero()) fail(Err::ZeroPolynomial, "rootpow with zero polynomial");
  if (f.coeff(0) == 0) fail(Err::RootAtZero, "rootpow requires f(0) != 0");
  int deg_out = f.degree();
  if (deg_out == 0) return Poly::one();
  // Res_x(f(x), x^e - u) in u.
  std::vector<Rat> xs, ys;
  for (int i = 0; i <= deg_out; ++i) {
    Rat u = rat(i);
    std::vector<Rat> h(static_cast<size_t>(e) + 1, Rat(0));
    h[0] = -u;
    h[e] = 1;
    xs.push_back(u);
    ys.push_back(resultant(f, Poly(std::move(h))));
  }
  Poly res = interpolate(xs, ys);
  if (res.degree() != deg_out) fail(Err::InternalError, "rootpow degree mismatch");
  return res.monic();
}

Poly mod_inverse(const Poly& a, const Poly& f) {
  if (f.degree() < 1) fail(Err::InternalError, "mod_inverse needs deg f >= 1");
  auto e = poly_egcd(poly_mod(a, f), f);
  if (e.g.degree() != 0) fail(Err::NotCoprime, "mod_inverse of non-coprime element");
  return poly_mod(e.u, f);
}

}  // namespace triple
