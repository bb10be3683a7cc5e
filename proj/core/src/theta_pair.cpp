#include "rigidity/theta_pair.hpp"

#include "rigidity/error.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/similarity.hpp"

namespace rigidity {

ThetaPair::ThetaPair(QMatrix u, QMatrix v) : u_(std::move(u)), v_(std::move(v)) {
  if (v_.rows() != u_.cols() || v_.cols() != u_.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "pair maps u: E->F and v: F->E have inconsistent shapes");
  }
  if (!is_invertible(monodromy_E(*this)) || !is_invertible(monodromy_F(*this))) {
    throw Error(ErrorKind::InvalidMonodromy, "pair monodromies I + vu and I + uv must be invertible");
  }
}

QMatrix monodromy_E(const ThetaPair& p) { return QMatrix::identity(p.dim_E()) + p.v() * p.u(); }

QMatrix monodromy_F(const ThetaPair& p) { return QMatrix::identity(p.dim_F()) + p.u() * p.v(); }

ThetaPair from_shriek(const QMatrix& t) {
  require_invertible(t, "from_shriek");
  return ThetaPair(QMatrix::identity(t.rows()), shifted(t, 1));
}

ThetaPair from_full_direct_image(const QMatrix& t) {
  require_invertible(t, "from_full_direct_image");
  return ThetaPair(shifted(t, 1), QMatrix::identity(t.rows()));
}

ThetaPair from_star(const QMatrix& t) {
  require_invertible(t, "from_star");
  const QMatrix n = shifted(t, 1);
  const auto dec = rref_decompose(n);
  const QMatrix& inc = dec.image_basis;  // E x dim_F, independent columns
  // u is the coordinate map of (T - I) in the image basis: inc * u = T - I.
  const QMatrix solved = rref(hconcat(inc, n));
  const std::size_t f = inc.cols();
  QMatrix u(f, t.cols());
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) u(i, j) = solved(i, f + j);
  }
  return ThetaPair(std::move(u), inc);
}

ThetaPair minimal_extension(const ThetaPair& p) { return from_star(monodromy_E(p)); }

bool is_minimal(const ThetaPair& p) { return rank(p.u()) == p.dim_F() && rank(p.v()) == p.dim_F(); }

bool pair_isomorphic(const ThetaPair& a, const ThetaPair& b) {
  return a.dim_E() == b.dim_E() && a.dim_F() == b.dim_F() && rank(a.u()) == rank(b.u()) &&
         rank(a.v()) == rank(b.v()) && similar(monodromy_E(a), monodromy_E(b)) &&
         similar(monodromy_F(a), monodromy_F(b));
}

CentralizerIdentity centralizer_identity_check(const ThetaPair& p) {
  if (p.dim_E() == 0 && p.dim_F() == 0) {
    throw Error(ErrorKind::Precondition, "centralizer identity is stated for nonzero pairs");
  }
  if (!is_minimal(p)) {
    throw Error(ErrorKind::Precondition, "centralizer identity requires a minimal pair");
  }
  const QMatrix te = monodromy_E(p);
  const QMatrix tf = monodromy_F(p);
  const auto kernel = static_cast<long long>(fixed_space_dim(te));
  return {
      static_cast<long long>(centralizer_dimension(te)) - static_cast<long long>(centralizer_dimension(tf)),
      kernel * kernel,
  };
}

}  // namespace rigidity
