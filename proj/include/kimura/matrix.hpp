#pragma once

#include "kimura/truncated.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kimura {

struct MatrixEntry {
  std::uint32_t col;
  TruncatedScalar value;
};

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  TruncatedScalar value;
};

/// Sparse row-major matrix over Q[ε]/(ε^k).
///
/// Rows are kept sorted by column with no explicit zeros, so equality and
/// the zero test are structural.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, int order) : rows_(rows), cols_(cols), order_(order), data_(rows) {
    (void)TruncatedScalar(order);  // validates order
  }

  static Matrix identity(std::size_t n, int order) {
    Matrix m(n, n, order);
    for (std::size_t i = 0; i < n; ++i)
      m.data_[i].push_back({static_cast<std::uint32_t>(i), TruncatedScalar(Rational(1), order)});
    return m;
  }

  /// Builds from unordered triplets, summing duplicates and dropping zeros.
  static Matrix from_triplets(std::size_t rows, std::size_t cols, int order, std::vector<Triplet> t) {
    Matrix m(rows, cols, order);
    std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < t.size();) {
      std::size_t j = i;
      TruncatedScalar sum(order);
      while (j < t.size() && t[j].row == t[i].row && t[j].col == t[i].col) {
        sum += t[j].value;
        ++j;
      }
      if (t[i].row >= rows || t[i].col >= cols) throw std::out_of_range("Matrix::from_triplets: index out of range");
      if (!sum.is_zero()) m.data_[t[i].row].push_back({t[i].col, std::move(sum)});
      i = j;
    }
    return m;
  }

  /// Dense rational rows, embedded as ε-free entries of the given order.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols, int order) {
    Matrix m(rows.size(), cols, order);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged input");
      for (std::size_t j = 0; j < cols; ++j)
        if (!rows[i][j].is_zero()) m.data_[i].push_back({static_cast<std::uint32_t>(j), TruncatedScalar(rows[i][j], order)});
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int order() const noexcept { return order_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const std::vector<MatrixEntry>& row(std::size_t i) const { return data_.at(i); }

  TruncatedScalar get(std::size_t i, std::size_t j) const {
    const auto& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const MatrixEntry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) return it->value;
    return TruncatedScalar(order_);
  }

  void set(std::size_t i, std::size_t j, const TruncatedScalar& v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Matrix::set: index out of range");
    if (v.order() != order_) throw std::invalid_argument("Matrix::set: wrong truncation order");
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const MatrixEntry& e, std::size_t c) { return e.col < c; });
    if (it != r.end() && it->col == j) {
      if (v.is_zero()) r.erase(it);
      else it->value = v;
    } else if (!v.is_zero()) {
      r.insert(it, {static_cast<std::uint32_t>(j), v});
    }
  }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  /// No entry carries an ε-part.
  bool is_constant() const {
    for (const auto& r : data_)
      for (const auto& e : r)
        if (!e.value.is_constant()) return false;
    return true;
  }

  /// Every entry lies in the ε-ideal.
  bool is_nilpotent_valued() const {
    for (const auto& r : data_)
      for (const auto& e : r)
        if (!e.value.is_nilpotent()) return false;
    return true;
  }

  /// Same entries read at another truncation order.
  Matrix with_order(int order) const {
    Matrix m(rows_, cols_, order);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : data_[i]) {
        TruncatedScalar v = e.value.with_order(order);
        if (!v.is_zero()) m.data_[i].push_back({e.col, std::move(v)});
      }
    return m;
  }

  /// Rational matrix of ε^m coefficients, as an order-1 matrix.
  Matrix coefficient(int m) const {
    Matrix out(rows_, cols_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : data_[i])
        if (!e.value[m].is_zero()) out.data_[i].push_back({e.col, TruncatedScalar(e.value[m], 1)});
    return out;
  }

  /// The part of the matrix lying in the ε-ideal.
  Matrix epsilon_part() const {
    Matrix m(rows_, cols_, order_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : data_[i]) {
        TruncatedScalar v = e.value;
        v.coefficient(0) = 0;
        if (!v.is_zero()) m.data_[i].push_back({e.col, std::move(v)});
      }
    return m;
  }

  Matrix transpose() const {
    std::vector<Triplet> t;
    t.reserve(nonzeros());
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : data_[i]) t.push_back({e.col, static_cast<std::uint32_t>(i), e.value});
    return from_triplets(cols_, rows_, order_, std::move(t));
  }

  /// Sub-matrix on the given row and column index lists.
  Matrix restrict(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    std::vector<std::int64_t> col_map(cols_, -1);
    for (std::size_t j = 0; j < col_idx.size(); ++j) col_map.at(col_idx[j]) = static_cast<std::int64_t>(j);
    Matrix m(row_idx.size(), col_idx.size(), order_);
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (const auto& e : data_.at(row_idx[i]))
        if (col_map[e.col] >= 0) m.data_[i].push_back({static_cast<std::uint32_t>(col_map[e.col]), e.value});
      std::sort(m.data_[i].begin(), m.data_[i].end(), [](const MatrixEntry& a, const MatrixEntry& b) { return a.col < b.col; });
    }
    return m;
  }

  /// Places this matrix into a larger zero matrix at the given row/column offsets.
  Matrix embed(std::size_t rows, std::size_t cols, std::size_t row_off, std::size_t col_off) const {
    if (row_off + rows_ > rows || col_off + cols_ > cols) throw std::out_of_range("Matrix::embed: does not fit");
    Matrix m(rows, cols, order_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : data_[i]) m.data_[row_off + i].push_back({static_cast<std::uint32_t>(e.col + col_off), e.value});
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.order_ != b.order_) return false;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const auto& ra = a.data_[i];
      const auto& rb = b.data_[i];
      if (ra.size() != rb.size()) return false;
      for (std::size_t j = 0; j < ra.size(); ++j)
        if (ra[j].col != rb[j].col || !(ra[j].value == rb[j].value)) return false;
    }
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& r : m.data_)
      for (auto& e : r) e.value = -e.value;
    return m;
  }
  Matrix& operator+=(const Matrix& b) { return *this = *this + b; }
  Matrix& operator-=(const Matrix& b) { return *this = *this - b; }

  friend Matrix operator*(const TruncatedScalar& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_, a.order_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (const auto& e : a.data_[i]) {
        TruncatedScalar v = s * e.value;
        if (!v.is_zero()) m.data_[i].push_back({e.col, std::move(v)});
      }
    return m;
  }
  friend Matrix operator*(const Rational& r, const Matrix& a) { return TruncatedScalar(r, a.order_) * a; }

  /// Matrix product (Gustavson row-by-row accumulation).
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("Matrix product: inner dimensions " + std::to_string(a.cols_) + " and " +
                                  std::to_string(b.rows_) + " differ");
    if (a.order_ != b.order_) throw std::invalid_argument("Matrix product: mismatched truncation orders");
    Matrix c(a.rows_, b.cols_, a.order_);
    std::vector<TruncatedScalar> acc(b.cols_, TruncatedScalar(a.order_));
    std::vector<std::uint8_t> used(b.cols_, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      touched.clear();
      for (const auto& ea : a.data_[i]) {
        for (const auto& eb : b.data_[ea.col]) {
          if (!used[eb.col]) {
            used[eb.col] = 1;
            touched.push_back(eb.col);
          }
          acc[eb.col].add_product(ea.value, eb.value);
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& out = c.data_[i];
      for (std::uint32_t j : touched) {
        if (!acc[j].is_zero()) out.push_back({j, acc[j]});
        acc[j] = TruncatedScalar(a.order_);
        used[j] = 0;
      }
    }
    return c;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "") << "[";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << get(i, j).str();
      os << "]";
    }
    os << "]";
    return os.str();
  }

private:
  static Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
    if (a.order_ != b.order_) throw std::invalid_argument("Matrix sum: mismatched truncation orders");
    Matrix m(a.rows_, a.cols_, a.order_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const auto& ra = a.data_[i];
      const auto& rb = b.data_[i];
      auto& out = m.data_[i];
      std::size_t x = 0, y = 0;
      while (x < ra.size() || y < rb.size()) {
        if (y == rb.size() || (x < ra.size() && ra[x].col < rb[y].col)) {
          out.push_back(ra[x++]);
        } else if (x == ra.size() || rb[y].col < ra[x].col) {
          out.push_back({rb[y].col, subtract ? -rb[y].value : rb[y].value});
          ++y;
        } else {
          TruncatedScalar v = subtract ? ra[x].value - rb[y].value : ra[x].value + rb[y].value;
          if (!v.is_zero()) out.push_back({ra[x].col, std::move(v)});
          ++x;
          ++y;
        }
      }
    }
    return m;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int order_ = 1;
  std::vector<std::vector<MatrixEntry>> data_;
};

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("kronecker: mismatched truncation orders");
  std::vector<Triplet> t;
  t.reserve(a.nonzeros() * b.nonzeros());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& ea : a.row(i))
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (const auto& eb : b.row(k)) {
          TruncatedScalar v = ea.value * eb.value;
          if (!v.is_zero())
            t.push_back({static_cast<std::uint32_t>(i * b.rows() + k),
                         static_cast<std::uint32_t>(ea.col * b.cols() + eb.col), std::move(v)});
        }
  return Matrix::from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), a.order(), std::move(t));
}

inline Matrix power(const Matrix& a, unsigned e) {
  Matrix result = Matrix::identity(a.rows(), a.order());
  for (unsigned i = 0; i < e; ++i) result = result * a;
  return result;
}

inline Matrix block_diagonal(const std::vector<Matrix>& blocks, int order) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  std::vector<Triplet> t;
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    if (b.order() != order) throw std::invalid_argument("block_diagonal: mismatched truncation orders");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (const auto& e : b.row(i))
        t.push_back({static_cast<std::uint32_t>(r0 + i), static_cast<std::uint32_t>(c0 + e.col), e.value});
    r0 += b.rows();
    c0 += b.cols();
  }
  return Matrix::from_triplets(rows, cols, order, std::move(t));
}

namespace linalg {

using DenseQ = std::vector<std::vector<Rational>>;

inline DenseQ to_dense(const Matrix& m, int coefficient = 0) {
  DenseQ d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& e : m.row(i)) d[i][e.col] = e.value[coefficient];
  return d;
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(DenseQ& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = a[r][c].reciprocal();
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Rank over Q of the ε^0 part.
inline std::size_t rank(const Matrix& m) {
  DenseQ d = to_dense(m);
  return rref(d).size();
}

/// Determinant by fraction-tracking Gaussian elimination.
inline Rational determinant(DenseQ a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Rational inv = a[c][c].reciprocal();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const Rational f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Basis (as columns of the returned list) of the kernel over Q of the ε^0 part.
inline std::vector<std::vector<Rational>> kernel(const Matrix& m) {
  DenseQ d = to_dense(m);
  const std::size_t cols = m.cols();
  auto pivots = rref(d);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -d[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse over Q of an order-1 square matrix; throws if singular.
inline Matrix inverse_rational(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  DenseQ aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : m.row(i)) aug[i][e.col] = e.value[0];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw std::domain_error("inverse: matrix is singular");
  DenseQ inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return Matrix::from_rows(inv, n, 1);
}

/// Inverse over Q[ε]/(ε^k): invert the realization, then sum the finite
/// geometric series in the nilpotent remainder.
inline Matrix inverse(const Matrix& m) {
  const int k = m.order();
  Matrix inv0 = inverse_rational(m.coefficient(0)).with_order(k);
  // m = m0 (1 + x) with x = m0^{-1} (m - m0) nilpotent
  Matrix x = inv0 * m.epsilon_part();
  Matrix term = Matrix::identity(m.rows(), k);
  Matrix sum = term;
  for (int i = 1; i < k; ++i) {
    term = term * (-x);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * inv0;
}

}  // namespace linalg

}  // namespace kimura
