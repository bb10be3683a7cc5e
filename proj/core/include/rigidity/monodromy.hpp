#pragma once

#include "rigidity/qmatrix.hpp"
#include "rigidity/theta_pair.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rigidity {

struct SingularPoint {
  Rational location;
  QMatrix monodromy;
};

/// Local monodromies of a rank-n local system on P^1 minus {gamma_1..gamma_k, oo}.
///
/// Convention: A_1 * A_2 * ... * A_k * A_oo = I with the finite points in the
/// listed order. Infinity always belongs to the singular set since the module
/// is localized there, even when A_oo = I.
struct MonodromyTuple {
  std::size_t rank = 0;
  std::vector<SingularPoint> finite_points;
  QMatrix infinity_matrix;

  std::size_t num_finite() const noexcept { return finite_points.size(); }
};

/// Builds a tuple with A_oo = (A_1 ... A_k)^{-1}. Throws if a matrix is singular.
MonodromyTuple make_tuple(std::size_t rank, std::vector<SingularPoint> finite_points);

/// Throws Error(Validation) naming the violated constraint.
void validate(const MonodromyTuple& t);

struct RigidityReport {
  std::size_t rank = 0;
  std::size_t num_points = 0;  // k + 1
  /// Finite points in order, then infinity.
  std::vector<std::size_t> centralizer_dims;
  long long index = 0;
  bool irreducible = false;
  bool physically_rigid = false;
};

/// (2 - (k + 1)) n^2 + dim Z(A_oo) + sum_i dim Z(A_i).
long long rigidity_index(const MonodromyTuple& t);

RigidityReport rigidity_report(const MonodromyTuple& t);

/// Absolute irreducibility: the unital algebra generated by the local
/// monodromies has dimension n^2.
bool is_irreducible(const MonodromyTuple& t);

bool is_physically_rigid(const MonodromyTuple& t);

/// Names a singular point: a finite index or infinity.
class PointId {
 public:
  static PointId finite(std::size_t index) { return PointId(index, false); }
  static PointId infinity() { return PointId(0, true); }

  bool is_infinity() const noexcept { return infinity_; }
  std::size_t index() const noexcept { return index_; }

 private:
  PointId(std::size_t index, bool inf) : index_(index), infinity_(inf) {}
  std::size_t index_;
  bool infinity_;
};

/// Finite points give the j_* pair of A_i, infinity the R j_* pair of A_oo.
ThetaPair local_pair(const MonodromyTuple& t, PointId point);

/// Same tuple with every monodromy replaced by P A P^{-1}.
MonodromyTuple conjugate(const MonodromyTuple& t, const QMatrix& p);

/// Seeded random tuple: A_1..A_k integer matrices (singular and identity
/// draws rejected), A_oo = (A_1 ... A_k)^{-1}, locations 0, 1, ..., k-1.
/// Roughly half of the draws are conjugated Jordan-type matrices so that
/// eigenvalue 1 with nontrivial blocks shows up regularly.
MonodromyTuple random_tuple(std::size_t rank, std::size_t k, std::uint64_t seed);

}  // namespace rigidity
