#ifndef TRIPLE_QMAT_HPP
#define TRIPLE_QMAT_HPP

#include <vector>

#include "triple/poly.hpp"

namespace triple {

using QVec = std::vector<Rat>;

/// Dense matrix over Q, row major.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  QMat transpose() const;
  QVec apply(const QVec& v) const;

  friend QMat operator+(const QMat& a, const QMat& b);
  friend QMat operator-(const QMat& a, const QMat& b);
  friend QMat operator*(const QMat& a, const QMat& b);
  friend bool operator==(const QMat& a, const QMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

/// Reduced row echelon form of a matrix: `rows` holds the rank nonzero rows,
/// pivot columns strictly increasing, pivot entries 1, zeros above and below.
struct Echelon {
  int cols = 0;
  QMat rows;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
  // v minus its row-space projection; vanishes exactly on the row space.
  QVec reduce(const QVec& v) const;
};

// Fraction-free forward elimination with rational back-substitution.
Echelon rref(const QMat& m);
int rank(const QMat& m);

struct Subspace {
  int ambient = 0;
  QMat basis;  // rows are independent vectors
  std::vector<int> pivots;
  int dim() const { return basis.rows(); }
};

Subspace kernel_basis(const QMat& m);
Subspace column_space(const QMat& m);

// Multiplication by t on Q[t]/(f) in the basis {1, t, .., t^{n-1}} (f made
// monic first); requires f(0) != 0.
QMat companion(const Poly& f);

QMat kron(const QMat& a, const QMat& b);
// Index of (a,b,c) is a*nB*nC + b*nC + c.
QMat kron3(const QMat& a, const QMat& b, const QMat& c);

// Lambda^p on the lexicographic basis of p-subsets; p in {2,3}, n >= p.
QMat wedge_power(const QMat& m, int p);

// Lexicographic position of a p-subset among all p-subsets of {0..n-1}.
long comb2_index(int n, int x, int y);
long comb3_index(int n, int x, int y, int z);
long binom(int n, int k);

// Throws ResourceGuard when dim exceeds the configured bound.
void check_dim_guard(long dim, long max_dim);

}  // namespace triple

#endif
