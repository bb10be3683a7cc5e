#pragma once

#include "rigidity/qmatrix.hpp"

#include <cstddef>

namespace rigidity {

/// Pair of vector spaces (E, F) with u: E -> F and v: F -> E.
///
/// Represents a germ of a perverse complex (equivalently a regular holonomic
/// germ) on a disk. E is the nearby space with monodromy I + v u, F the
/// vanishing space with monodromy I + u v; both must be invertible.
class ThetaPair {
 public:
  ThetaPair() = default;
  /// Checks shapes and the invertibility invariant; throws Error otherwise.
  ThetaPair(QMatrix u, QMatrix v);

  std::size_t dim_E() const noexcept { return u_.cols(); }
  std::size_t dim_F() const noexcept { return u_.rows(); }
  const QMatrix& u() const noexcept { return u_; }
  const QMatrix& v() const noexcept { return v_; }

 private:
  QMatrix u_;
  QMatrix v_;
};

/// I + v u on E.
QMatrix monodromy_E(const ThetaPair& p);
/// I + u v on F.
QMatrix monodromy_F(const ThetaPair& p);

/// j_! extension: E = F, u = I, v = T - I.
ThetaPair from_shriek(const QMatrix& t);
/// j_* extension: F = im(T - I), u = T - I corestricted onto F, v = inclusion.
ThetaPair from_star(const QMatrix& t);
/// R j_* extension: E = F, u = T - I, v = I.
ThetaPair from_full_direct_image(const QMatrix& t);

/// The j_* pair over the nearby monodromy of p.
ThetaPair minimal_extension(const ThetaPair& p);

/// u surjective and v injective.
bool is_minimal(const ThetaPair& p);

/// Same dimensions, similar monodromies on E and on F, and equal ranks of u
/// and v. Sufficient for every identity checked in this library; it is not a
/// full quiver-isomorphism test.
bool pair_isomorphic(const ThetaPair& a, const ThetaPair& b);

struct CentralizerIdentity {
  long long lhs = 0;
  long long rhs = 0;
};

/// lhs = dim Z(T_E) - dim Z(T_F), rhs = (dim ker(T_E - I))^2.
/// Requires a minimal, nonzero pair (Error(Precondition) otherwise).
CentralizerIdentity centralizer_identity_check(const ThetaPair& p);

}  // namespace rigidity
