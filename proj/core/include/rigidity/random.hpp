#pragma once

#include "rigidity/qmatrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rigidity {

/// splitmix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 with a portable bounded integer draw (the standard
/// distributions are implementation-defined, which would break replay).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long long uniform(long long lo, long long hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

QMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long lo, long long hi);

/// Product of elementary integer matrices: integer entries, determinant +-1.
QMatrix random_unimodular(Rng& rng, std::size_t n);

/// Random invertible rational matrix (dense, small entries).
QMatrix random_invertible(Rng& rng, std::size_t n);

/// Random partition of n into positive parts, non-increasing.
std::vector<std::size_t> random_partition(Rng& rng, std::size_t n);

}  // namespace rigidity
