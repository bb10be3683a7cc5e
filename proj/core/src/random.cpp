#include "rigidity/random.hpp"

#include "rigidity/linalg.hpp"

#include <algorithm>
#include <limits>

namespace rigidity {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long Rng::uniform(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased and identical on every platform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<long long>(x % span);
}

QMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long lo, long long hi) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng.uniform(lo, hi));
  }
  return m;
}

QMatrix random_unimodular(Rng& rng, std::size_t n) {
  QMatrix p = QMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng.coin()) p(0, 0) = -1;
    return p;
  }
  const std::size_t steps = 2 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 2));
    if (j >= i) ++j;
    const long c = rng.coin() ? 1 : -1;
    // row_i += c * row_j
    for (std::size_t col = 0; col < n; ++col) p(i, col) += c * p(j, col);
  }
  return p;
}

QMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    QMatrix m = random_integer_matrix(rng, n, n, -3, 3);
    if (n > 0 && rng.coin()) {
      // an occasional fractional entry
      const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1));
      const auto c = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1));
      m(r, c) += Rational(1, static_cast<unsigned long>(rng.uniform(2, 5)));
    }
    if (is_invertible(m)) return m;
  }
}

std::vector<std::size_t> random_partition(Rng& rng, std::size_t n) {
  std::vector<std::size_t> parts;
  std::size_t left = n;
  while (left > 0) {
    const auto p = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(left)));
    parts.push_back(p);
    left -= p;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace rigidity
