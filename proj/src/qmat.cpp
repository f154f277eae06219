#include "triple/qmat.hpp"

#include <algorithm>

namespace triple {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QVec QMat::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(Err::DimensionMismatch, "matrix-vector size mismatch");
  QVec out(static_cast<size_t>(rows_), Rat(0));
  for (int i = 0; i < rows_; ++i) {
    Rat acc(0);
    for (int j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      if (x != 0) acc += x * v[j];
    }
    out[i] = acc;
  }
  return out;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Err::DimensionMismatch, "matrix addition");
  QMat c(a.rows_, a.cols_);
  for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
  return c;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Err::DimensionMismatch, "matrix subtraction");
  QMat c(a.rows_, a.cols_);
  for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
  return c;
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols_ != b.rows_) fail(Err::DimensionMismatch, "matrix product");
  QMat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rat& y = b.at(k, j);
        if (y != 0) c.at(i, j) += x * y;
      }
    }
  return c;
}

QVec Echelon::reduce(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols) fail(Err::DimensionMismatch, "echelon reduction");
  QVec r = v;
  for (int i = 0; i < rank(); ++i) {
    const Rat& c = r[pivots[i]];
    if (c == 0) continue;
    Rat f = c;
    for (int j = pivots[i]; j < cols; ++j) {
      const Rat& x = rows.at(i, j);
      if (x != 0) r[j] -= f * x;
    }
  }
  return r;
}

Echelon rref(const QMat& m) {
  int R = m.rows(), C = m.cols();
  // clear denominators per row
  std::vector<std::vector<Int>> a(static_cast<size_t>(R), std::vector<Int>(static_cast<size_t>(C)));
  for (int i = 0; i < R; ++i) {
    Int den(1);
    for (int j = 0; j < C; ++j) {
      const Int& d = m.at(i, j).get_den();
      den = den / gcd(den, d) * d;
    }
    for (int j = 0; j < C; ++j) {
      Rat scaled = m.at(i, j) * Rat(den);
      a[i][j] = scaled.get_num();
    }
  }

  std::vector<int> nnz(static_cast<size_t>(R), 0);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j)
      if (a[i][j] != 0) ++nnz[static_cast<size_t>(i)];

  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    // pivot choice: unit entries first, then sparsest row, then lowest index
    int best = -1;
    bool best_unit = false;
    int best_nnz = 0;
    for (int i = r; i < R; ++i) {
      if (a[i][c] == 0) continue;
      bool unit = a[i][c] == 1 || a[i][c] == -1;
      if (best < 0 || (unit && !best_unit) || (unit == best_unit && nnz[static_cast<size_t>(i)] < best_nnz)) {
        best = i;
        best_unit = unit;
        best_nnz = nnz[static_cast<size_t>(i)];
      }
    }
    if (best < 0) continue;
    std::swap(a[r], a[best]);
    std::swap(nnz[static_cast<size_t>(r)], nnz[static_cast<size_t>(best)]);
    for (int i = r + 1; i < R; ++i) {
      if (a[i][c] == 0) continue;
      Int g = gcd(a[r][c], a[i][c]);
      Int fp = a[r][c] / g;
      Int fr = a[i][c] / g;
      Int content(0);
      int count = 0;
      for (int j = c; j < C; ++j) {
        if (a[i][j] == 0 && a[r][j] == 0) continue;
        a[i][j] = fp * a[i][j] - fr * a[r][j];
        if (a[i][j] != 0) {
          ++count;
          if (content != 1) content = gcd(content, a[i][j]);
        }
      }
      nnz[static_cast<size_t>(i)] = count;
      if (content > 1)
        for (int j = c; j < C; ++j)
          if (a[i][j] != 0) a[i][j] /= content;
    }
    pivots.push_back(c);
    ++r;
  }

  // rational back-substitution on the rank rows
  QMat out(r, C);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < C; ++j) out.at(i, j) = rat_of(a[i][j], Int(1));
  for (int i = r - 1; i >= 0; --i) {
    Rat inv = 1 / out.at(i, pivots[i]);
    for (int j = pivots[i]; j < C; ++j)
      if (out.at(i, j) != 0) out.at(i, j) *= inv;
    for (int k = 0; k < i; ++k) {
      Rat f = out.at(k, pivots[i]);
      if (f == 0) continue;
      for (int j = pivots[i]; j < C; ++j) {
        const Rat& x = out.at(i, j);
        if (x != 0) out.at(k, j) -= f * x;
      }
    }
  }
  return Echelon{C, std::move(out), std::move(pivots)};
}

int rank(const QMat& m) { return rref(m).rank(); }

Subspace kernel_basis(const QMat& m) {
  Echelon e = rref(m);
  int C = m.cols();
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int j = 0; j < C; ++j) {
      if (p < e.pivots.size() && e.pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  QMat basis(static_cast<int>(free_cols.size()), C);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.at(static_cast<int>(k), f) = 1;
    for (int i = 0; i < e.rank(); ++i) basis.at(static_cast<int>(k), e.pivots[i]) = -e.rows.at(i, f);
  }
  return Subspace{C, std::move(basis), std::move(free_cols)};
}

Subspace column_space(const QMat& m) {
  Echelon e = rref(m.transpose());
  return Subspace{m.rows(), e.rows, e.pivots};
}

QMat companion(const Poly& f) {
  if (f.degree() < 1) fail(Err::ZeroPolynomial, "companion of a constant");
  if (f.coeff(0) == 0) fail(Err::RootAtZero, "companion requires f(0) != 0");
  Poly g = f.monic();
  int n = g.degree();
  QMat m(n, n);
  for (int j = 0; j + 1 < n; ++j) m.at(j + 1, j) = 1;
  for (int i = 0; i < n; ++i) m.at(i, n - 1) = -g.coeff(i);
  return m;
}

QMat kron(const QMat& a, const QMat& b) {
  QMat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const Rat& x = a.at(ia, ja);
      if (x == 0) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb) {
          const Rat& y = b.at(ib, jb);
          if (y != 0) c.at(ia * b.rows() + ib, ja * b.cols() + jb) = x * y;
        }
    }
  return c;
}

QMat kron3(const QMat& a, const QMat& b, const QMat& c) { return kron(kron(a, b), c); }

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long comb2_index(int n, int x, int y) {
  return static_cast<long>(x) * n - static_cast<long>(x) * (x + 1) / 2 + (y - x - 1);
}

long comb3_index(int n, int x, int y, int z) {
  long before_x = binom(n, 3) - binom(n - x, 3);
  return before_x + comb2_index(n - x - 1, y - x - 1, z - x - 1);
}

QMat wedge_power(const QMat& m, int p) {
  if (m.rows() != m.cols()) fail(Err::DimensionMismatch, "wedge power of non-square matrix");
  if (p != 2 && p != 3) fail(Err::InternalError, "wedge power only for p = 2, 3");
  int n = m.rows();
  if (n < p) fail(Err::DimensionTooSmall, "wedge power needs dim >= p");
  if (p == 2) {
    int d = static_cast<int>(binom(n, 2));
    QMat w(d, d);
    int col = 0;
    for (int c0 = 0; c0 < n; ++c0)
      for (int c1 = c0 + 1; c1 < n; ++c1, ++col) {
        int row = 0;
        for (int r0 = 0; r0 < n; ++r0)
          for (int r1 = r0 + 1; r1 < n; ++r1, ++row) {
            Rat v = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
            if (v != 0) w.at(row, col) = v;
          }
      }
    return w;
  }
  int d = static_cast<int>(binom(n, 3));
  QMat w(d, d);
  int col = 0;
  for (int c0 = 0; c0 < n; ++c0)
    for (int c1 = c0 + 1; c1 < n; ++c1)
      for (int c2 = c1 + 1; c2 < n; ++c2, ++col) {
        int row = 0;
        for (int r0 = 0; r0 < n; ++r0)
          for (int r1 = r0 + 1; r1 < n; ++r1)
            for (int r2 = r1 + 1; r2 < n; ++r2, ++row) {
              Rat v = m.at(r0, c0) * (m.at(r1, c1) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c1)) -
                      m.at(r0, c1) * (m.at(r1, c0) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c0)) +
                      m.at(r0, c2) * (m.at(r1, c0) * m.at(r2, c1) - m.at(r1, c1) * m.at(r2, c0));
              if (v != 0) w.at(row, col) = v;
            }
      }
  return w;
}

void check_dim_guard(long dim, long max_dim) {
  if (dim > max_dim)
    fail(Err::ResourceGuard, "dimension " + std::to_string(dim) + " exceeds guard " + std::to_string(max_dim));
}

}  // namespace triple
