#include "triple/triple_ring.hpp"

#include <algorithm>

namespace triple {

int perm_sign(const std::array<int, 3>& sigma) {
  int inv = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (sigma[a] > sigma[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

namespace {

const std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2},
                                                   {0, 2, 1},
                                                   {1, 0, 2},
                                                   {1, 2, 0},
                                                   {2, 0, 1},
                                                   {2, 1, 0}}};

QVec poly_to_vec(const Poly& p, int n) {
  QVec v(static_cast<size_t>(n), Rat(0));
  for (int j = 0; j <= p.degree(); ++j) v[static_cast<size_t>(j)] = p.coeff(j);
  return v;
}

}  // namespace

TripleRing::TripleRing(const SpaceCache& spaces, std::optional<ClassIndex> cls)
    : spaces_(&spaces), index_(cls) {
  const BlanchfieldModule& m = spaces.module();
  if (index_) {
    for (int j : *index_)
      if (j < 0 || j >= m.count()) fail(Err::DimensionMismatch, "generator index out of range");
    for (int j = 0; j < 3; ++j) mod_[static_cast<size_t>(j)] = m.gen((*index_)[static_cast<size_t>(j)]).delta_monic;
  } else {
    for (int j = 0; j < 3; ++j) mod_[static_cast<size_t>(j)] = m.global_delta_monic();
  }
  n1_ = mod_[0].degree();
  n2_ = mod_[1].degree();
  check_dim_guard(ambient_dim(), spaces.max_dim());

  // graded-lex order on (a, b): by a+b, then by a
  order_.reserve(static_cast<size_t>(ambient_dim()));
  for (int s = 0; s <= n1_ - 1 + n2_ - 1; ++s)
    for (int a = 0; a <= std::min(s, n1_ - 1); ++a) {
      int b = s - a;
      if (b >= 0 && b < n2_) order_.push_back({a, b});
    }
  pos_.assign(static_cast<size_t>(ambient_dim()), -1);
  for (size_t k = 0; k < order_.size(); ++k)
    pos_[static_cast<size_t>(order_[k].first * n2_ + order_[k].second)] = static_cast<int>(k);

  for (int k = 0; k <= 2 * n1_ - 2; ++k)
    pow1_.push_back(poly_to_vec(poly_mod(Poly::one().shifted(k), mod_[0]), n1_));
  for (int k = 0; k <= 2 * n2_ - 2; ++k)
    pow2_.push_back(poly_to_vec(poly_mod(Poly::one().shifted(k), mod_[1]), n2_));
  tinv1_ = mod_inverse(Poly::t(), mod_[0]);
  tinv2_ = mod_inverse(Poly::t(), mod_[1]);

  // ideal generator e = recip(d3)(t1 t2)
  Poly rev3 = recip(mod_[2]);
  QVec u = monomial_a0(1, 1, 0);
  QVec e(static_cast<size_t>(ambient_dim()), Rat(0));
  for (int k = rev3.degree(); k >= 0; --k) {
    e = mul_a0(e, u);
    const Rat& ck = rev3.coeff(k);
    if (ck != 0) e[static_cast<size_t>(pos_[0])] += ck;
  }
  // echelonize the ideal in reversed graded-lex coordinates so that the
  // eliminated (pivot) monomials are the high ones and the normal-form basis
  // keeps the low monomials
  int n_amb = static_cast<int>(ambient_dim());
  QMat mult_e(n_amb, n_amb);
  for (int col = 0; col < n_amb; ++col) {
    QVec basis_vec(static_cast<size_t>(n_amb), Rat(0));
    basis_vec[static_cast<size_t>(n_amb - 1 - col)] = 1;
    QVec image = mul_a0(e, basis_vec);
    for (int row = 0; row < n_amb; ++row) mult_e.at(row, col) = image[static_cast<size_t>(n_amb - 1 - row)];
  }
  ideal_ = rref(mult_e.transpose());
  {
    std::vector<bool> is_pivot(static_cast<size_t>(n_amb), false);
    for (int p : ideal_.pivots) is_pivot[static_cast<size_t>(n_amb - 1 - p)] = true;
    for (int j = 0; j < n_amb; ++j) {
      if (is_pivot[static_cast<size_t>(j)]) continue;
      basis_.push_back(order_[static_cast<size_t>(j)]);
      basis_pos_.push_back(j);
    }
  }

  // stabilizer of the index triple (all of S3 for the global ring)
  for (const auto& sigma : kPerms) {
    bool keep = true;
    if (index_) {
      for (int j = 0; j < 3; ++j)
        if ((*index_)[static_cast<size_t>(sigma[static_cast<size_t>(j)])] != (*index_)[static_cast<size_t>(j)]) keep = false;
    }
    if (keep) stab_.push_back(sigma);
  }

  // cross-check against the tensor quotient dimension
  int expected;
  if (index_) {
    expected = spaces.a_class(*index_)->dim;
    if (is_sorted_index(*index_)) hspace_ = spaces.h_class(*index_);
  } else {
    QMat td = companion(m.global_delta_monic());
    check_dim_guard(static_cast<long>(td.rows()) * td.rows() * td.rows(), spaces.max_dim());
    QMat k3 = kron3(td, td, td);
    expected = k3.rows() - rank(QMat::identity(k3.rows()) - k3);
  }
  if (dim() != expected)
    fail(Err::InternalError, "ring dimension " + std::to_string(dim()) +
                                 " differs from tensor quotient dimension " + std::to_string(expected));
}

const BlanchfieldModule& TripleRing::module() const { return spaces_->module(); }

void TripleRing::ensure_same_ring(const RingElem& x) const {
  if (x.ring != this) fail(Err::RingMismatch, "element belongs to a different ring");
  if (x.c.size() != static_cast<size_t>(dim())) fail(Err::RingMismatch, "element coordinate length");
}

QVec TripleRing::mul_a0(const QVec& x, const QVec& y) const {
  // bivariate convolution on exponent grids, then per-variable reduction
  int w1 = 2 * n1_ - 1, w2 = 2 * n2_ - 1;
  std::vector<QVec> grid(static_cast<size_t>(w1), QVec(static_cast<size_t>(w2), Rat(0)));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    auto [a, b] = order_[i];
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      auto [c, d] = order_[j];
      grid[static_cast<size_t>(a + c)][static_cast<size_t>(b + d)] += x[i] * y[j];
    }
  }
  for (int a = w1 - 1; a >= n1_; --a)
    for (int b = 0; b < w2; ++b) {
      Rat v = grid[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (v == 0) continue;
      grid[static_cast<size_t>(a)][static_cast<size_t>(b)] = 0;
      const QVec& rep = pow1_[static_cast<size_t>(a)];
      for (int j = 0; j < n1_; ++j)
        if (rep[static_cast<size_t>(j)] != 0) grid[static_cast<size_t>(j)][static_cast<size_t>(b)] += v * rep[static_cast<size_t>(j)];
    }
  QVec out(static_cast<size_t>(ambient_dim()), Rat(0));
  for (int a = 0; a < n1_; ++a)
    for (int b = 0; b < w2; ++b) {
      Rat v = grid[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (v == 0) continue;
      if (b < n2_) {
        out[static_cast<size_t>(pos_[static_cast<size_t>(a * n2_ + b)])] += v;
      } else {
        const QVec& rep = pow2_[static_cast<size_t>(b)];
        for (int j = 0; j < n2_; ++j)
          if (rep[static_cast<size_t>(j)] != 0)
            out[static_cast<size_t>(pos_[static_cast<size_t>(a * n2_ + j)])] += v * rep[static_cast<size_t>(j)];
      }
    }
  return out;
}

QVec TripleRing::monomial_a0(long k1, long k2, long k3) const {
  long e1 = k1 - k3, e2 = k2 - k3;  // t3^{k3} = (t1 t2)^{-k3}
  Poly u1 = e1 >= 0 ? poly_powmod(Poly::t(), Int(e1), mod_[0]) : poly_powmod(tinv1_, Int(-e1), mod_[0]);
  Poly u2 = e2 >= 0 ? poly_powmod(Poly::t(), Int(e2), mod_[1]) : poly_powmod(tinv2_, Int(-e2), mod_[1]);
  QVec v1 = poly_to_vec(u1, n1_), v2 = poly_to_vec(u2, n2_);
  QVec out(static_cast<size_t>(ambient_dim()), Rat(0));
  for (int a = 0; a < n1_; ++a) {
    if (v1[static_cast<size_t>(a)] == 0) continue;
    for (int b = 0; b < n2_; ++b)
      if (v2[static_cast<size_t>(b)] != 0)
        out[static_cast<size_t>(pos_[static_cast<size_t>(a * n2_ + b)])] = v1[static_cast<size_t>(a)] * v2[static_cast<size_t>(b)];
  }
  return out;
}

RingElem TripleRing::normal_form(const QVec& a0) const {
  size_t n = a0.size();
  QVec reversed(n);
  for (size_t k = 0; k < n; ++k) reversed[k] = a0[n - 1 - k];
  QVec reduced = ideal_.reduce(reversed);
  RingElem x{this, QVec()};
  x.c.reserve(basis_pos_.size());
  for (int p : basis_pos_) x.c.push_back(reduced[n - 1 - static_cast<size_t>(p)]);
  return x;
}

QVec TripleRing::lift(const RingElem& x) const {
  ensure_same_ring(x);
  QVec v(static_cast<size_t>(ambient_dim()), Rat(0));
  for (size_t k = 0; k < basis_pos_.size(); ++k) v[static_cast<size_t>(basis_pos_[k])] = x.c[k];
  return v;
}

RingElem TripleRing::monomial(long k1, long k2, long k3, const Rat& coef) const {
  QVec v = monomial_a0(k1, k2, k3);
  for (auto& e : v) e *= coef;
  return normal_form(v);
}

RingElem TripleRing::from_tripoly(const Poly& p1, const Poly& p2, const Poly& p3) const {
  if (p1.is_zero() || p2.is_zero() || p3.is_zero()) return zero();
  QVec v1 = poly_to_vec(poly_mod(p1, mod_[0]), n1_);
  QVec v2 = poly_to_vec(poly_mod(p2, mod_[1]), n2_);
  QVec grid(static_cast<size_t>(ambient_dim()), Rat(0));
  for (int a = 0; a < n1_; ++a) {
    if (v1[static_cast<size_t>(a)] == 0) continue;
    for (int b = 0; b < n2_; ++b)
      if (v2[static_cast<size_t>(b)] != 0)
        grid[static_cast<size_t>(pos_[static_cast<size_t>(a * n2_ + b)])] = v1[static_cast<size_t>(a)] * v2[static_cast<size_t>(b)];
  }
  // multiply by p3(t3), t3 = (t1 t2)^{-1}
  QVec w = monomial_a0(0, 0, 1);
  QVec acc(static_cast<size_t>(ambient_dim()), Rat(0));
  for (int k = p3.degree(); k >= 0; --k) {
    acc = mul_a0(acc, w);
    const Rat& ck = p3.coeff(k);
    if (ck != 0) acc[static_cast<size_t>(pos_[0])] += ck;
  }
  return normal_form(mul_a0(grid, acc));
}

RingElem TripleRing::add(const RingElem& x, const RingElem& y) const {
  ensure_same_ring(x);
  ensure_same_ring(y);
  RingElem z{this, x.c};
  for (size_t k = 0; k < z.c.size(); ++k) z.c[k] += y.c[k];
  return z;
}

RingElem TripleRing::scale(const Rat& s, const RingElem& x) const {
  ensure_same_ring(x);
  RingElem z{this, x.c};
  for (auto& e : z.c) e *= s;
  return z;
}

RingElem TripleRing::mul(const RingElem& x, const RingElem& y) const {
  ensure_same_ring(x);
  ensure_same_ring(y);
  return normal_form(mul_a0(lift(x), lift(y)));
}

bool TripleRing::is_zero(const RingElem& x) const {
  ensure_same_ring(x);
  return std::all_of(x.c.begin(), x.c.end(), [](const Rat& v) { return v == 0; });
}

RingElem TripleRing::stabilizer_action(const std::array<int, 3>& sigma, const RingElem& x) const {
  ensure_same_ring(x);
  if (std::find(stab_.begin(), stab_.end(), sigma) == stab_.end())
    fail(Err::NotInStabilizer, "permutation does not stabilize the class index");
  std::array<int, 3> inv{};
  for (int j = 0; j < 3; ++j) inv[static_cast<size_t>(sigma[static_cast<size_t>(j)])] = j;
  QVec lifted = lift(x);
  QVec acc(static_cast<size_t>(ambient_dim()), Rat(0));
  for (size_t k = 0; k < lifted.size(); ++k) {
    if (lifted[k] == 0) continue;
    auto [a, b] = order_[k];
    std::array<long, 3> exps{a, b, 0};
    std::array<long, 3> permuted{};
    for (int l = 0; l < 3; ++l) permuted[static_cast<size_t>(l)] = exps[static_cast<size_t>(inv[static_cast<size_t>(l)])];
    QVec mono = monomial_a0(permuted[0], permuted[1], permuted[2]);
    for (size_t j = 0; j < acc.size(); ++j)
      if (mono[j] != 0) acc[j] += lifted[k] * mono[j];
  }
  return normal_form(acc);
}

RingElem TripleRing::antisymmetrize(const RingElem& x) const {
  ensure_same_ring(x);
  RingElem acc = zero();
  for (const auto& sigma : stab_) {
    RingElem term = stabilizer_action(sigma, x);
    int sign = perm_sign(sigma);
    for (size_t k = 0; k < acc.c.size(); ++k)
      acc.c[k] += sign > 0 ? term.c[k] : -term.c[k];
  }
  Rat inv_size = rat(1, static_cast<long>(stab_.size()));
  for (auto& e : acc.c) e *= inv_size;
  return acc;
}

std::pair<Subspace, Subspace> TripleRing::split_sym_antisym() const {
  int d = dim();
  QMat projector(d, d);
  for (int col = 0; col < d; ++col) {
    RingElem basis_elem = zero();
    basis_elem.c[static_cast<size_t>(col)] = 1;
    RingElem image = antisymmetrize(basis_elem);
    for (int row = 0; row < d; ++row) projector.at(row, col) = image.c[static_cast<size_t>(row)];
  }
  Subspace sym = kernel_basis(projector);
  Subspace antisym = column_space(projector);
  if (sym.dim() + antisym.dim() != d)
    fail(Err::InternalError, "projector split dimensions do not add up");
  return {sym, antisym};
}

const HolonomySpace& TripleRing::h_space() const {
  if (!hspace_) fail(Err::RingMismatch, "p_map needs a sorted class ring");
  return *hspace_;
}

QVec TripleRing::p_map(const RingElem& x) const {
  ensure_same_ring(x);
  const HolonomySpace& h = h_space();
  const ClassIndex& idx = *index_;
  const BlanchfieldModule& m = module();
  int n1 = m.gen(idx[0]).delta_monic.degree();
  int n2 = m.gen(idx[1]).delta_monic.degree();
  int n3 = m.gen(idx[2]).delta_monic.degree();
  QVec ambient(static_cast<size_t>(h.ambient), Rat(0));
  QVec lifted = lift(x);
  for (size_t k = 0; k < lifted.size(); ++k) {
    const Rat& coef = lifted[k];
    if (coef == 0) continue;
    auto [a, b] = order_[k];
    // image of t^a eta_{i1} (wedge/tensor) t^b eta_{i2} (..) eta_{i3}
    if (idx[0] != idx[1] && idx[1] != idx[2]) {
      long pos = (static_cast<long>(a) * n2 + b) * n3;
      ambient[static_cast<size_t>(pos)] += coef;
    } else if (idx[0] == idx[1] && idx[1] == idx[2]) {
      if (h.ambient == 0) continue;
      if (a == b || a == 0 || b == 0) continue;
      std::array<int, 3> v{a, b, 0};
      std::array<int, 3> perm{0, 1, 2};
      std::sort(perm.begin(), perm.end(), [&](int p, int q) { return v[static_cast<size_t>(p)] < v[static_cast<size_t>(q)]; });
      int sign = perm_sign(perm);
      std::array<int, 3> s{v[static_cast<size_t>(perm[0])], v[static_cast<size_t>(perm[1])], v[static_cast<size_t>(perm[2])]};
      long pos = comb3_index(n1, s[0], s[1], s[2]);
      ambient[static_cast<size_t>(pos)] += sign > 0 ? coef : -coef;
    } else if (idx[0] == idx[1]) {
      if (h.ambient == 0) continue;
      if (a == b) continue;
      int lo = std::min(a, b), hi = std::max(a, b);
      int sign = a < b ? 1 : -1;
      long pos = comb2_index(n1, lo, hi) * n3;
      ambient[static_cast<size_t>(pos)] += sign > 0 ? coef : -coef;
    } else {
      if (h.ambient == 0) continue;
      if (b == 0) continue;
      // e_b wedge e_0 = -(e_0 wedge e_b)
      long pos = static_cast<long>(a) * binom(n2, 2) + comb2_index(n2, 0, b);
      ambient[static_cast<size_t>(pos)] -= coef;
    }
  }
  if (h.ambient == 0) return QVec();
  return h.quotient_coords(ambient);
}

const TripleRing& RingCache::ring(const ClassIndex& i) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = rings_.find(i);
  if (it == rings_.end())
    it = rings_.emplace(i, std::make_unique<TripleRing>(spaces_, i)).first;
  return *it->second;
}

const TripleRing& RingCache::global_ring() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!global_) global_ = std::make_unique<TripleRing>(spaces_, std::nullopt);
  return *global_;
}

}  // namespace triple
