#include "rigidity/polynomial.hpp"

#include "rigidity/error.hpp"

namespace rigidity {

QPolynomial::QPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolynomial::QPolynomial(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

QPolynomial QPolynomial::linear(const Rational& root) { return QPolynomial({-root, Rational(1)}); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return {};
  QPolynomial out = *this;
  const Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::Internal, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPolynomial{}, a};

  std::vector<Rational> rem = a.coefficients();
  const auto& den = b.coefficients();
  const std::size_t db = den.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / b.leading();

  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] * inv_lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * den[j];
  }
  rem.resize(db);
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial x = a;
  QPolynomial y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (d == 0 || !unit) s += to_string(mag);
    if (d > 0) {
      if (!unit) s += "*";
      s += "x";
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s;
}

}  // namespace rigidity
