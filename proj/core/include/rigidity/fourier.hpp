#pragma once

#include "rigidity/monodromy.hpp"
#include "rigidity/qmatrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rigidity {

/// One summand E^{c/tau} (x) R of the formal decomposition at infinity of the
/// Fourier transform: exponential coefficient c (a finite singular location
/// of the source) and the monodromy of the regular part R.
struct ExponentialComponent {
  Rational coefficient;
  QMatrix regular_monodromy;
  std::size_t dimension = 0;
};

/// Local data of the Fourier transform: regular monodromy at 0 and the
/// exponential components at infinity.
struct FourierLocalData {
  std::size_t source_rank = 0;
  std::size_t rank_hat = 0;
  QMatrix zero_monodromy;
  std::vector<ExponentialComponent> components;
  std::vector<std::string> warnings;
};

/// Stationary phase: local data of the Fourier transform from the source
/// monodromy tuple.
///
/// Each finite point gamma_i with monodromy A_i contributes the component
/// (gamma_i, A_i restricted to im(A_i - I)). The monodromy at 0 is the
/// minimal pair over (Q^n, A_oo) with nearby dimension rank_hat = sum n_i:
/// the non-unit part of A_oo is kept, each unit Jordan block grows by one, and
/// p = rank_hat - n - #(unit blocks of A_oo) blocks of size one are appended.
///
/// Throws Error(NonRealizable) when p < 0, which cannot happen for an
/// irreducible tuple. Reducible input is processed with a warning attached.
FourierLocalData stationary_phase(const MonodromyTuple& t);

/// Rigidity index of the Fourier transform:
/// dim Z(T_0) + sum dim Z(T_i) + sum n_i^2 - (sum n_i)^2.
long long rig_fourier(const FourierLocalData& d);

/// (sum n_i)^2 - sum n_i^2, the irregularity at infinity of End of the transform.
std::size_t irregularity_end(const FourierLocalData& d);

/// sum dim Z(T_i), the formal Euler characteristic of the minimal extension
/// of End at infinity.
std::size_t formal_euler_end_min(const FourierLocalData& d);

struct PointIdentity {
  std::string point;  // location of a finite point, or "infinity"
  long long lhs = 0;
  long long rhs = 0;
};

struct PreservationReport {
  long long rig_source = 0;
  long long rig_fourier = 0;
  bool equal = false;
  /// False only for forced runs on reducible input; equality is then reported
  /// but carries no meaning.
  bool hypothesis_satisfied = true;
  /// Finite points: dim Z(A_i) - dim Z(R_i) against (n - n_i)^2.
  /// Infinity: dim Z(A_oo) - dim Z(T_0) against -(rank_hat - n)^2.
  std::vector<PointIdentity> per_point_identities;
  std::size_t irregularity = 0;
  /// The stationary-phase data the comparison was made on.
  FourierLocalData data;
};

struct VerifyOptions {
  /// Run on reducible tuples instead of refusing.
  bool force = false;
};

/// Throws Error(HypothesisViolated) on reducible input unless options.force.
PreservationReport verify_preservation(const MonodromyTuple& t, VerifyOptions options = {});

/// True iff every per-point identity holds with lhs == rhs.
bool identities_hold(const PreservationReport& r);

}  // namespace rigidity
