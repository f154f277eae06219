#ifndef TRIPLE_POLY_HPP
#define TRIPLE_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triple/errors.hpp"

namespace triple {

using Rat = mpq_class;
using Int = mpz_class;

// Canonicalized rational (mpq_class(p, q) alone does not reduce).
Rat rat(long num, long den = 1);
Rat rat_of(const Int& num, const Int& den);
std::string rat_str(const Rat& x);

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// The zero polynomial has an empty coefficient list; otherwise the last
/// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& x);
  static Poly one() { return constant(1); }
  static Poly t();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  const Rat& leading() const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;  // nonzero input
  Poly shifted(int k) const;  // multiply by t^k, k >= 0

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rat> c_;
};

struct PolyDivMod {
  Poly quot;
  Poly rem;
};
PolyDivMod poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
// Exact division; a nonzero remainder signals a broken internal identity.
Poly poly_divexact(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic unless both zero
// g = gcd(a,b) monic, with g = u*a + v*b.
struct PolyEgcd {
  Poly g, u, v;
};
PolyEgcd poly_egcd(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, unsigned e);
Poly poly_powmod(const Poly& a, const Int& e, const Poly& f);

/// Laurent polynomial t^offset * (c_0 + c_1 t + ...) with c_0 != 0 and the
/// top coefficient nonzero; the zero polynomial has an empty list and offset 0.
class LPoly {
 public:
  LPoly() = default;
  LPoly(long offset, std::vector<Rat> coeffs);
  LPoly(const Poly& p);  // offset chosen so the stored part has nonzero constant term

  bool is_zero() const { return c_.is_zero(); }
  long lowest() const { return off_; }
  long highest() const { return off_ + c_.degree(); }
  const Poly& unit_part() const { return c_; }  // polynomial part with nonzero constant term
  Rat coeff(long k) const;
  Rat eval(const Rat& x) const;  // x != 0 when offset < 0

  LPoly substitute_inverse() const;  // f(t^{-1})

  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const Rat& s, const LPoly& a);
  friend LPoly operator-(const LPoly& a);
  friend bool operator==(const LPoly& a, const LPoly& b) {
    return a.off_ == b.off_ && a.c_ == b.c_;
  }

 private:
  long off_ = 0;
  Poly c_;
};

// ---- normalization, symmetry and root combinators ----

// u * t^k * f with result in Q[t], result(0) != 0, result(1) = 1.
Poly normalize_delta(const LPoly& f);

// (r, k) with f(t^{-1}) = r * t^k * f(t), if such a pair exists.
std::optional<std::pair<Rat, long>> symmetry_decompose(const LPoly& f);

struct PrimePower {
  Poly prime;  // monic irreducible
  int mult;
};
PrimePower prime_power_decompose(const Poly& f);

// Determinant of the Sylvester matrix, f-rows first.
Rat resultant(const Poly& f, const Poly& g);

// t^{deg f} * f(1/t); requires f(0) != 0.
Poly recip(const Poly& f);

// Monic polynomial whose root multiset is {z*w : f(z)=0, g(w)=0}.
Poly prodpoly(const Poly& f, const Poly& g);

// Monic polynomial whose root multiset is {z^e : f(z)=0}, e in {2,3}.
Poly rootpow(const Poly& f, int e);

// b with a*b = 1 mod f, deg b < deg f.
Poly mod_inverse(const Poly& a, const Poly& f);

}  // namespace triple

#endif
