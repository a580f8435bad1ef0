#ifndef BICONN_EXACT_MATRIX_HPP
#define BICONN_EXACT_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "biconn/rational.hpp"

namespace biconn {

/// Dense matrix over exact rationals. Row-major, no rounding anywhere.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& q : data_)
      if (q != 0) return false;
    return true;
  }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  ExactMatrix operator+(const ExactMatrix& o) const {
    check_same_shape(o);
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  ExactMatrix operator-(const ExactMatrix& o) const {
    check_same_shape(o);
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  ExactMatrix operator*(const Rational& c) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
  }

  ExactMatrix transpose() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

 private:
  void check_same_shape(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

inline ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) {
  return x * y - y * x;
}

/// Incremental reduced-row-echelon accumulator. Rows are fed one at a time in
/// a fixed order (deterministic pivoting: first nonzero column of each reduced
/// row becomes the pivot). Once rank() == cols the nullspace is {0}, so
/// callers can stop feeding rows early.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full_column_rank() const { return rows_.size() == cols_; }

  void add_row(std::vector<Rational> row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    // Reduce against current echelon rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = row[pivot_cols_[r]];
      if (c == 0) continue;
      Rational f = c;  // pivots are normalized to 1
      for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * rows_[r][j];
    }
    std::size_t p = 0;
    while (p < cols_ && row[p] == 0) ++p;
    if (p == cols_) return;  // dependent row
    Rational inv = Rational(1) / row[p];
    for (std::size_t j = p; j < cols_; ++j) row[j] *= inv;
    // Back-substitute into existing rows to keep fully reduced form.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = rows_[r][p];
      if (c == 0) continue;
      Rational f = c;
      for (std::size_t j = 0; j < cols_; ++j) rows_[r][j] -= f * row[j];
    }
    // Insert keeping pivot columns sorted.
    std::size_t pos = 0;
    while (pos < pivot_cols_.size() && pivot_cols_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(row));
    pivot_cols_.insert(pivot_cols_.begin() + pos, p);
  }

  /// Nullspace basis of the accumulated row space, one column vector per free
  /// column, in column order.
  std::vector<std::vector<Rational>> nullspace() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivot_cols_) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rational> v(cols_);
      v[f] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r)
        v[pivot_cols_[r]] = -rows_[r][f];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivot_cols_;
};

inline std::size_t rank(const ExactMatrix& a) {
  RowReducer red(a.cols());
  for (std::size_t i = 0; i < a.rows() && !red.full_column_rank(); ++i) {
    std::vector<Rational> row(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
    red.add_row(std::move(row));
  }
  return red.rank();
}

/// Nullspace basis of A, columns of the returned matrix. Fraction-free Bareiss
/// elimination on the denominator-cleared integer matrix, deterministic
/// pivoting (first row with a nonzero entry in column order), then exact
/// back-substitution for the free columns.
inline ExactMatrix bareiss_nullspace(const ExactMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  // Clear denominators row by row; scaling rows does not change the nullspace.
  std::vector<std::vector<Integer>> w(m, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Integer d = denominator(a(i, j));
      lcm = lcm / gcd(lcm, d) * d;
    }
    for (std::size_t j = 0; j < n; ++j)
      w[i][j] = numerator(a(i, j)) * (lcm / denominator(a(i, j)));
  }

  std::vector<std::size_t> pivot_cols;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && w[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(w[row], w[piv]);
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        w[i][j] = (w[i][j] * w[row][col] - w[i][col] * w[row][j]) / prev;
      w[i][col] = 0;
    }
    prev = w[row][col];
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivot_cols) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  ExactMatrix basis(n, free_cols.size());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    std::vector<Rational> v(n);
    v[free_cols[b]] = 1;
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
      Rational s = 0;
      for (std::size_t j = pivot_cols[r] + 1; j < n; ++j)
        if (w[r][j] != 0) s += Rational(w[r][j]) * v[j];
      v[pivot_cols[r]] = -s / Rational(w[r][pivot_cols[r]]);
    }
    for (std::size_t j = 0; j < n; ++j) basis(j, b) = v[j];
  }
  return basis;
}

/// Exact solve A x = b. Returns nullopt when the system is inconsistent; when
/// the solution is non-unique, returns the one with free variables set to 0.
inline std::optional<std::vector<Rational>> solve(const ExactMatrix& a,
                                                  const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  const std::size_t n = a.cols();
  RowReducer red(n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Rational> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
    row[n] = b[i];
    red.add_row(std::move(row));
  }
  // Inconsistent iff the augmented column is a pivot, i.e. 0 = 1 row exists.
  auto ns = red.nullspace();
  // Solve by expressing the augmented system: append -1 and look for a
  // nullspace vector with last coordinate nonzero.
  for (const auto& v : ns) {
    if (v[n] != 0) {
      std::vector<Rational> x(n);
      Rational s = -Rational(1) / v[n];
      for (std::size_t j = 0; j < n; ++j) x[j] = v[j] * s;
      return x;
    }
  }
  // b == 0 with full-rank A: the zero solution.
  bool bzero = true;
  for (const auto& q : b)
    if (q != 0) bzero = false;
  if (bzero) return std::vector<Rational>(n);
  return std::nullopt;
}

}  // namespace biconn

#endif
