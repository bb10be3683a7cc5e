#pragma once

#include "rigidity/qmatrix.hpp"

#include <cstddef>
#include <vector>

namespace rigidity {

struct RrefDecomposition {
  std::size_t rank = 0;
  /// Columns span ker(M); one column per free variable.
  QMatrix kernel_basis;
  /// Pivot columns of the input; they span the column space.
  QMatrix image_basis;
  /// Pivot column indices in increasing order.
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with leftmost nonzero pivots, rows processed top
/// down. The bases are fixed by that rule and reproducible bit for bit.
RrefDecomposition rref_decompose(const QMatrix& m);

/// Reduced row echelon form itself (same pivot rule as rref_decompose).
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const QMatrix& m);

bool is_invertible(const QMatrix& m);

/// Throws Error(InvalidMonodromy) for singular input and
/// Error(DimensionMismatch) for non-square input.
QMatrix inverse(const QMatrix& m);

/// dim { X : A X = X A }, from the n^2 x n^2 commutator system
/// (I (x) A - A^T (x) I) vec(X) = 0 solved by exact elimination.
std::size_t centralizer_dimension(const QMatrix& a);

/// dim ker(A - I). A must be invertible.
std::size_t fixed_space_dim(const QMatrix& a);

/// Jordan block sizes for eigenvalue 1, non-increasing.
struct UnitBlockPartition {
  std::vector<std::size_t> sizes;

  std::size_t total() const;
  std::size_t parts() const { return sizes.size(); }
  friend bool operator==(const UnitBlockPartition&, const UnitBlockPartition&) = default;
};

/// Read off from the rank sequence r_j = rank((A - I)^j); no eigenvalues.
UnitBlockPartition unit_block_partition(const QMatrix& a);

/// Matrix of A on an A-invariant subspace. `basis` must have independent
/// columns spanning an A-invariant subspace; returns R with A*basis = basis*R.
QMatrix restrict_to_subspace(const QMatrix& a, const QMatrix& basis);

struct Restriction {
  QMatrix matrix;
  QMatrix basis;
};

/// A restricted to im(A - I), using the rref image basis.
Restriction restrict_to_image(const QMatrix& a);

struct UnitSplit {
  /// A on ker((A - I)^n): unipotent.
  QMatrix unit;
  /// A on im((A - I)^n): 1 is not an eigenvalue.
  QMatrix rest;
  QMatrix unit_basis;
  QMatrix rest_basis;
};

UnitSplit split_unit_part(const QMatrix& a);

/// Invertible matrices only; raises Error(InvalidMonodromy) otherwise.
void require_invertible(const QMatrix& a, const char* what);

}  // namespace rigidity
