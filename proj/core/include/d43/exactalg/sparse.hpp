#pragma once

// Row-compressed sparse matrices over exact scalars. Used where dense
// storage would dominate: operators on the 512-dimensional triple tensor
// product.

#include "d43/exactalg/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace d43 {

template <class T>
class SparseMatrix {
 public:
  using Traits = ScalarTraits<T>;
  using Entry = std::pair<std::uint32_t, T>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  explicit SparseMatrix(const Matrix<T>& d) : cols_(d.cols()), rows_(d.rows()) {
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (!Traits::is_zero(d(r, c))) rows_[r].emplace_back(static_cast<std::uint32_t>(c), d(r, c));
  }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(static_cast<std::uint32_t>(i), Traits::one());
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  bool is_zero() const { return nonzeros() == 0; }

  Matrix<T> dense() const {
    Matrix<T> d(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) d(r, c) = v;
    return d;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    Matrix<T>::require(a.cols_ == b.rows(), "SparseMatrix::*: shape mismatch");
    SparseMatrix r(a.rows(), b.cols_);
    std::map<std::uint32_t, T> acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      acc.clear();
      for (const auto& [k, av] : a.rows_[i])
        for (const auto& [j, bv] : b.rows_[k]) {
          auto [it, inserted] = acc.try_emplace(j, av * bv);
          if (!inserted) it->second += av * bv;
        }
      for (auto& [j, v] : acc)
        if (!Traits::is_zero(v)) r.rows_[i].emplace_back(j, std::move(v));
    }
    return r;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

  friend SparseMatrix operator*(const T& s, const SparseMatrix& a) {
    SparseMatrix r(a.rows(), a.cols_);
    if (Traits::is_zero(s)) return r;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (const auto& [c, v] : a.rows_[i]) r.rows_[i].emplace_back(c, s * v);
    return r;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    Matrix<T>::require(v.size() == cols_, "SparseMatrix::apply: length mismatch");
    std::vector<T> out(rows(), Traits::zero());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [c, a] : rows_[i])
        if (!Traits::is_zero(v[c])) out[i] += a * v[c];
    return out;
  }

  template <class F>
  auto map(F&& f) const -> SparseMatrix<std::invoke_result_t<F, const T&>> {
    using U = std::invoke_result_t<F, const T&>;
    SparseMatrix<U> r(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [c, v] : rows_[i]) {
        U u = f(v);
        if (!ScalarTraits<U>::is_zero(u)) r.push(i, c, std::move(u));
      }
    return r;
  }

  /// Append an entry; columns of a row must be pushed in increasing order.
  void push(std::size_t r, std::uint32_t c, T v) { rows_[r].emplace_back(c, std::move(v)); }

  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix r(a.rows() * b.rows(), a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (const auto& [j, av] : a.rows_[i])
          for (const auto& [l, bv] : b.rows_[k])
            r.rows_[i * b.rows() + k].emplace_back(static_cast<std::uint32_t>(j * b.cols_ + l), av * bv);
    return r;
  }

  /// kron(this, I_n) and kron(I_n, this).
  SparseMatrix kron_identity_right(std::size_t n) const {
    SparseMatrix r(rows() * n, cols_ * n);
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [j, v] : rows_[i]) r.rows_[i * n + k].emplace_back(static_cast<std::uint32_t>(j * n + k), v);
    for (auto& row : r.rows_) std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    return r;
  }

  SparseMatrix kron_identity_left(std::size_t n) const {
    SparseMatrix r(rows() * n, cols_ * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rows_[i])
          r.rows_[k * rows() + i].emplace_back(static_cast<std::uint32_t>(k * cols_ + j), v);
    return r;
  }

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    Matrix<T>::require(a.rows() == b.rows() && a.cols_ == b.cols_, "SparseMatrix: shape mismatch");
    SparseMatrix r(a.rows(), a.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& x = a.rows_[i];
      const auto& y = b.rows_[i];
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
          r.rows_[i].push_back(x[p++]);
        } else if (p == x.size() || y[q].first < x[p].first) {
          r.rows_[i].emplace_back(y[q].first, subtract ? T(-y[q].second) : y[q].second);
          ++q;
        } else {
          T v = subtract ? T(x[p].second - y[q].second) : T(x[p].second + y[q].second);
          if (!Traits::is_zero(v)) r.rows_[i].emplace_back(x[p].first, std::move(v));
          ++p;
          ++q;
        }
      }
    }
    return r;
  }

  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace d43
