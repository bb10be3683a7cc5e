#include "rigidity/linalg.hpp"

#include "rigidity/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace rigidity {

QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots) {
  QMatrix r = m;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::vector<std::size_t> piv;
  std::size_t next_row = 0;
  Rational factor;
  Rational t;

  for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
    std::size_t p = next_row;
    while (p < rows && sgn(r(p, c)) == 0) ++p;
    if (p == rows) continue;

    if (p != next_row) {
      auto a = r.row(p);
      auto b = r.row(next_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Rational inv = 1 / r(next_row, c);
    for (std::size_t j = c; j < cols; ++j) r(next_row, j) *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == next_row || sgn(r(i, c)) == 0) continue;
      factor = r(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(r(next_row, j)) == 0) continue;
        t = factor * r(next_row, j);
        r(i, j) -= t;
      }
    }
    piv.push_back(c);
    ++next_row;
  }
  if (pivots != nullptr) *pivots = std::move(piv);
  return r;
}

RrefDecomposition rref_decompose(const QMatrix& m) {
  RrefDecomposition out;
  const QMatrix r = rref(m, &out.pivots);
  out.rank = out.pivots.size();
  out.image_basis = m.columns(out.pivots);

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : out.pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  out.kernel_basis = QMatrix(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    out.kernel_basis(f, k) = 1;
    for (std::size_t i = 0; i < out.pivots.size(); ++i) {
      out.kernel_basis(out.pivots[i], k) = -r(i, f);
    }
  }
  return out;
}

std::size_t rank(const QMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

bool is_invertible(const QMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

void require_invertible(const QMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": matrix is not square");
  }
  if (!is_invertible(a)) {
    throw Error(ErrorKind::InvalidMonodromy, std::string(what) + ": matrix is singular");
  }
}

QMatrix inverse(const QMatrix& m) {
  require_invertible(m, "inverse");
  const std::size_t n = m.rows();
  const QMatrix r = rref(hconcat(m, QMatrix::identity(n)));
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  }
  return out;
}

namespace {

// Sparse row: (column, value) sorted by column, no stored zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// row <- row - factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

// Rank of a sparse system by incremental forward elimination.
std::size_t sparse_rank(std::vector<SparseRow> rows) {
  std::map<std::size_t, SparseRow> echelon;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = echelon.find(row.front().first);
      if (it == echelon.end()) break;
      const Rational factor = row.front().second;
      row = axpy(row, factor, it->second);
    }
    if (row.empty()) continue;
    const Rational inv = 1 / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    const std::size_t lead = row.front().first;
    echelon.emplace(lead, std::move(row));
  }
  return echelon.size();
}

}  // namespace

std::size_t centralizer_dimension(const QMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "centralizer_dimension: matrix is not square");
  }
  const std::size_t n = a.rows();
  // Unknown X(k, j) has index k*n + j. Equation (i, j) of AX - XA = 0 reads
  //   sum_k A(i,k) X(k,j) - sum_k X(i,k) A(k,j) = 0.
  std::vector<SparseRow> system;
  system.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::map<std::size_t, Rational> coeffs;
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a(i, k)) != 0) coeffs[k * n + j] += a(i, k);
        if (sgn(a(k, j)) != 0) coeffs[i * n + k] -= a(k, j);
      }
      SparseRow row;
      for (auto& [c, v] : coeffs) {
        if (sgn(v) != 0) row.emplace_back(c, std::move(v));
      }
      if (!row.empty()) system.push_back(std::move(row));
    }
  }
  return n * n - sparse_rank(std::move(system));
}

std::size_t fixed_space_dim(const QMatrix& a) {
  require_invertible(a, "fixed_space_dim");
  return a.rows() - rank(shifted(a, 1));
}

std::size_t UnitBlockPartition::total() const {
  std::size_t s = 0;
  for (auto x : sizes) s += x;
  return s;
}

UnitBlockPartition unit_block_partition(const QMatrix& a) {
  require_invertible(a, "unit_block_partition");
  const std::size_t n = a.rows();
  const QMatrix nilp = shifted(a, 1);

  // ranks[j] = rank((A - I)^j); stop once the sequence stabilizes.
  std::vector<std::size_t> ranks{n};
  QMatrix p = QMatrix::identity(n);
  for (std::size_t j = 1; j <= n; ++j) {
    p = p * nilp;
    ranks.push_back(rank(p));
    if (ranks[j] == ranks[j - 1]) break;
  }

  // at_least[j] = number of unit blocks of size >= j = r_{j-1} - r_j.
  UnitBlockPartition out;
  for (std::size_t j = ranks.size() - 1; j >= 1; --j) {
    const std::size_t at_least = ranks[j - 1] - ranks[j];
    const std::size_t longer = j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
    for (std::size_t b = longer; b < at_least; ++b) out.sizes.push_back(j);
  }
  return out;
}

QMatrix restrict_to_subspace(const QMatrix& a, const QMatrix& basis) {
  const std::size_t d = basis.cols();
  if (basis.rows() != a.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "restrict_to_subspace: basis has wrong ambient size");
  }
  if (d == 0) return QMatrix(0, 0);

  // Solve basis * R = A * basis; basis has full column rank, so the reduced
  // augmented system is [I | R] on top and zero below when the span is invariant.
  std::vector<std::size_t> pivots;
  const QMatrix r = rref(hconcat(basis, a * basis), &pivots);
  if (pivots.size() != d || pivots.back() != d - 1) {
    throw Error(ErrorKind::Internal, "restrict_to_subspace: subspace is not invariant or basis is dependent");
  }
  QMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out(i, j) = r(i, d + j);
  }
  return out;
}

Restriction restrict_to_image(const QMatrix& a) {
  require_invertible(a, "restrict_to_image");
  auto dec = rref_decompose(shifted(a, 1));
  Restriction out;
  out.matrix = restrict_to_subspace(a, dec.image_basis);
  out.basis = std::move(dec.image_basis);
  return out;
}

UnitSplit split_unit_part(const QMatrix& a) {
  require_invertible(a, "split_unit_part");
  const std::size_t n = a.rows();
  auto dec = rref_decompose(power(shifted(a, 1), n));
  UnitSplit out;
  out.unit = restrict_to_subspace(a, dec.kernel_basis);
  out.rest = restrict_to_subspace(a, dec.image_basis);
  out.unit_basis = std::move(dec.kernel_basis);
  out.rest_basis = std::move(dec.image_basis);
  return out;
}

}  // namespace rigidity
