#include "rigidity/similarity.hpp"

#include "rigidity/error.hpp"

#include <algorithm>
#include <optional>

namespace rigidity {

namespace {

class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), e_(n * n) {}

  QPolynomial& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
  std::size_t size() const { return n_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < n_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] -= q * row[src], from column `from` on
  void row_axpy(std::size_t dst, const QPolynomial& q, std::size_t src, std::size_t from) {
    for (std::size_t c = from; c < n_; ++c) {
      if (!(*this)(src, c).is_zero()) (*this)(dst, c) -= q * (*this)(src, c);
    }
  }
  void col_axpy(std::size_t dst, const QPolynomial& q, std::size_t src, std::size_t from) {
    for (std::size_t r = from; r < n_; ++r) {
      if (!(*this)(r, src).is_zero()) (*this)(r, dst) -= q * (*this)(r, src);
    }
  }

 private:
  std::size_t n_;
  std::vector<QPolynomial> e_;
};

// Nonzero entry of least degree in the trailing block starting at t.
std::optional<std::pair<std::size_t, std::size_t>> min_degree_entry(PolyMatrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_deg = 0;
  for (std::size_t r = t; r < m.size(); ++r) {
    for (std::size_t c = t; c < m.size(); ++c) {
      const auto& p = m(r, c);
      if (p.is_zero()) continue;
      if (!best || p.degree() < best_deg) {
        best = {r, c};
        best_deg = p.degree();
        if (best_deg == 0) return best;
      }
    }
  }
  return best;
}

}  // namespace

SimilarityInvariant invariant_factors(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "invariant_factors: matrix is not square");
  const std::size_t n = a.rows();
  PolyMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = r == c ? QPolynomial({-a(r, c), Rational(1)}) : QPolynomial(-a(r, c));
    }
  }

  std::vector<QPolynomial> diag;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      auto pos = min_degree_entry(m, t);
      if (!pos) break;  // trailing block is zero; cannot happen for xI - A
      m.swap_rows(t, pos->first);
      m.swap_cols(t, pos->second);

      bool cleared = true;
      for (std::size_t r = t + 1; r < n; ++r) {
        if (m(r, t).is_zero()) continue;
        auto [q, rem] = divmod(m(r, t), m(t, t));
        m.row_axpy(r, q, t, t);
        if (!rem.is_zero()) cleared = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (m(t, c).is_zero()) continue;
        auto [q, rem] = divmod(m(t, c), m(t, t));
        m.col_axpy(c, q, t, t);
        if (!rem.is_zero()) cleared = false;
      }
      if (!cleared) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into the pivot row and reduce again.
      std::optional<std::size_t> offender;
      for (std::size_t r = t + 1; r < n && !offender; ++r) {
        for (std::size_t c = t + 1; c < n; ++c) {
          if (!m(r, c).is_zero() && !divmod(m(r, c), m(t, t)).second.is_zero()) {
            offender = r;
            break;
          }
        }
      }
      if (!offender) break;
      for (std::size_t c = t; c < n; ++c) m(t, c) += m(*offender, c);
    }
    diag.push_back(m(t, t).monic());
  }

  SimilarityInvariant out;
  std::stable_sort(diag.begin(), diag.end(),
                   [](const QPolynomial& x, const QPolynomial& y) { return x.degree() < y.degree(); });
  for (auto& p : diag) {
    if (p.degree() > 0) out.invariant_factors.push_back(std::move(p));
  }
  return out;
}

QPolynomial characteristic_polynomial(const SimilarityInvariant& inv) {
  QPolynomial p(Rational(1));
  for (const auto& f : inv.invariant_factors) p = p * f;
  return p;
}

QPolynomial characteristic_polynomial(const QMatrix& a) { return characteristic_polynomial(invariant_factors(a)); }

bool similar(const QMatrix& a, const QMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) return false;
  return invariant_factors(a) == invariant_factors(b);
}

}  // namespace rigidity
