#pragma once

#include "rigidity/polynomial.hpp"
#include "rigidity/qmatrix.hpp"

#include <vector>

namespace rigidity {

/// Similarity class certificate of a square rational matrix.
struct SimilarityInvariant {
  /// Non-constant monic invariant factors f_1 | f_2 | ... | f_m.
  std::vector<QPolynomial> invariant_factors;

  friend bool operator==(const SimilarityInvariant&, const SimilarityInvariant&) = default;
};

/// Smith normal form of xI - A over Q[x], monic-normalized, unit factors dropped.
SimilarityInvariant invariant_factors(const QMatrix& a);

/// Product of the invariant factors.
QPolynomial characteristic_polynomial(const SimilarityInvariant& inv);
QPolynomial characteristic_polynomial(const QMatrix& a);

/// Equal sizes and equal invariant factor lists.
bool similar(const QMatrix& a, const QMatrix& b);

}  // namespace rigidity
