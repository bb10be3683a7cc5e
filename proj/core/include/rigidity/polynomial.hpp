#pragma once

#include "rigidity/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace rigidity {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coefficients);
  QPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// x - root
  static QPolynomial linear(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  QPolynomial monic() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

/// Human-readable form in x, highest degree first, e.g. "x^2 - 3/2*x + 1".
std::string to_string(const QPolynomial& p);

}  // namespace rigidity
