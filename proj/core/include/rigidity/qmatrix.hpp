#pragma once

#include "rigidity/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rigidity {

/// Dense row-major matrix over the rationals.
///
/// Zero-sized dimensions are legal (a 0x0 matrix, or an n x 0 basis with no
/// columns); they behave as the empty map in every operation.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Row-list construction for literals in tests and catalog data,
  /// e.g. QMatrix{{1, 2}, {3, 4}}. Rows must have equal length.
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix diagonal(std::span<const Rational> diag);
  /// Single Jordan block of the given size, eigenvalue on the diagonal and
  /// ones on the superdiagonal.
  static QMatrix jordan_block(const Rational& eigenvalue, std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> entries() const noexcept { return entries_; }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  QMatrix column(std::size_t c) const;
  QMatrix columns(std::span<const std::size_t> indices) const;
  QMatrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  QMatrix& operator*=(const Rational& scalar);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// A - s*I for square A.
QMatrix shifted(const QMatrix& a, const Rational& s);

QMatrix power(const QMatrix& a, std::size_t exponent);

/// Block-diagonal assembly, blocks placed in the given order.
QMatrix block_diagonal(std::span<const QMatrix> blocks);

/// Columns of a then columns of b; row counts must agree.
QMatrix hconcat(const QMatrix& a, const QMatrix& b);

std::string to_string(const QMatrix& m);

}  // namespace rigidity
