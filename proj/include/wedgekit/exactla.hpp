#pragma once

// Exact integer and rational linear algebra: Smith normal form,
// determinants, unimodularity and Pfaffians.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wedgekit/error.hpp"

namespace wedgekit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Least nonnegative residue of `a` modulo `n`; for n == 0 returns `a`.
Integer mod_floor(const Integer& a, const Integer& n);

/// gcd with the convention gcd(x, 0) = |x|; always nonnegative.
Integer gcd(const Integer& a, const Integer& b);

/// True iff `d` divides `n`, with d | 0 for every d (including 0).
bool divides(const Integer& d, const Integer& n);

/// Dense row-major matrix with exact entries.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      WEDGEKIT_REQUIRE(row.size() == cols_, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T>& entries() { return data_; }
  const std::vector<T>& entries() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    WEDGEKIT_REQUIRE(a.cols_ == b.rows_, "matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    WEDGEKIT_REQUIRE(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference: dimension mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Smith normal form with transforms: u * input * v == s.
struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;

  /// Diagonal of `s` (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

/// Diagonal entries are nonnegative, each divides the next, zeros last.
SnfResult snf(const IntMatrix& m);

Integer det(const IntMatrix& m);
Rational det(const RatMatrix& m);

bool is_unimodular(const IntMatrix& m);

bool is_skew_symmetric(const RatMatrix& m);

/// Pfaffian with Pf([[0, a], [-a, 0]]) = a, multiplicative over block sums.
Rational pfaffian(const RatMatrix& m);

/// The block matrix with 2x2 blocks [[0, 1/n_i], [-1/n_i, 0]].
RatMatrix standard_symplectic_gram(std::span<const Integer> degrees);

/// det(c) mod n_1 recovered through Pf(C J C^t) = det(C) Pf(J), where J is
/// standard_symplectic_gram(degrees). Requires C J C^t - J to be integral.
Integer pfaffian_congruence_check(const IntMatrix& c, std::span<const Integer> degrees);

std::string to_string(const IntMatrix& m);

}  // namespace wedgekit
