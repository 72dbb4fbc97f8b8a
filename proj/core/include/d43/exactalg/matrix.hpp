#pragma once

// Dense matrices over the exact scalar types, with exact Gaussian
// elimination for the field cases (QRat, mpq_class).

#include "d43/exactalg/field.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace d43 {

template <class T>
class Matrix {
 public:
  using Traits = ScalarTraits<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Traits::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one();
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  void set_column(std::size_t c, const std::vector<T>& v) {
    require(v.size() == rows_, "Matrix::set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!Traits::is_zero(v)) return false;
    return true;
  }

  std::size_t count_nonzero() const {
    std::size_t n = 0;
    for (const auto& v : data_)
      if (!Traits::is_zero(v)) ++n;
    return n;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<std::invoke_result_t<F, const T&>> {
    Matrix<std::invoke_result_t<F, const T&>> m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = f((*this)(r, c));
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "Matrix::+=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!Traits::is_zero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "Matrix::-=: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!Traits::is_zero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "Matrix::*: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (Traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (Traits::is_zero(bkj)) continue;
          r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    if (Traits::is_zero(s)) return r;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!Traits::is_zero(a.data_[k])) r.data_[k] = s * a.data_[k];
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    require(v.size() == cols_, "Matrix::apply: length mismatch");
    std::vector<T> out(rows_, Traits::zero());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (Traits::is_zero(v[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const T& a = (*this)(r, c);
        if (!Traits::is_zero(a)) out[r] += a * v[c];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Kronecker product; index (i,k),(j,l) -> i*b.rows+k, j*b.cols+l.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const T& aij = a(i, j);
        if (Traits::is_zero(aij)) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l) {
            const T& bkl = b(k, l);
            if (!Traits::is_zero(bkl)) r(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
          }
      }
    return r;
  }

  static void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Outcome of solving A x = b exactly.
template <class T>
struct LinearSolution {
  enum class Kind { Unique, Family, Inconsistent };
  Kind kind = Kind::Inconsistent;
  std::vector<T> particular;            ///< empty when inconsistent
  std::vector<std::vector<T>> kernel;   ///< basis of the null space of A
  std::size_t rank = 0;
};

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, std::size_t pivot_cols) {
  using Traits = ScalarTraits<T>;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    long best_weight = 0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (Traits::is_zero(m(r, col))) continue;
      long w = Traits::weight(m(r, col));
      if (best == m.rows() || w < best_weight) {
        best = r;
        best_weight = w;
      }
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
    const T inv = Traits::one() / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!Traits::is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || Traits::is_zero(m(r, col))) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!Traits::is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const std::vector<T>& b) {
  using Traits = ScalarTraits<T>;
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const std::size_t n = a.cols();
  Matrix<T> aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = row_reduce(aug, n);

  LinearSolution<T> sol;
  sol.rank = pivots.size();
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!Traits::is_zero(aug(r, n))) {
      sol.kind = LinearSolution<T>::Kind::Inconsistent;
      return sol;
    }

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  sol.particular.assign(n, Traits::zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> k(n, Traits::zero());
    k[free] = Traits::one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!Traits::is_zero(aug(r, free))) k[pivots[r]] = -aug(r, free);
    sol.kernel.push_back(std::move(k));
  }
  sol.kind = sol.kernel.empty() ? LinearSolution<T>::Kind::Unique : LinearSolution<T>::Kind::Family;
  return sol;
}

/// Inverse of a square matrix; throws std::domain_error when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = ScalarTraits<T>::one();
  }
  const auto pivots = row_reduce(aug, n);
  if (pivots.size() != n) throw std::domain_error("inverse: matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
  Matrix<T> m = a;
  return row_reduce(m, m.cols()).size();
}

}  // namespace d43
