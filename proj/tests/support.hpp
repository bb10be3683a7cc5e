#pragma once

// Independent oracles for the tests: matrices with known rational Jordan data
// and the closed-form centralizer dimension of such data.

#include "rigidity/linalg.hpp"
#include "rigidity/monodromy.hpp"
#include "rigidity/qmatrix.hpp"
#include "rigidity/random.hpp"
#include "rigidity/theta_pair.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace rigidity::testing {

/// Eigenvalue with the sizes of its Jordan blocks.
struct Eigenspace {
  Rational eigenvalue;
  std::vector<std::size_t> blocks;
};

using JordanData = std::vector<Eigenspace>;

inline std::size_t size_of(const JordanData& data) {
  std::size_t n = 0;
  for (const auto& e : data)
    for (auto b : e.blocks) n += b;
  return n;
}

/// sum over eigenvalues of sum_{i,j} min(m_i, m_j).
inline std::size_t partition_centralizer(const JordanData& data) {
  std::size_t total = 0;
  for (const auto& e : data)
    for (auto a : e.blocks)
      for (auto b : e.blocks) total += std::min(a, b);
  return total;
}

inline std::size_t unit_block_count(const JordanData& data) {
  for (const auto& e : data)
    if (e.eigenvalue == 1) return e.blocks.size();
  return 0;
}

/// Jordan data of A restricted to im(A - I): unit blocks lose one row.
inline JordanData image_data(const JordanData& data) {
  JordanData out;
  for (const auto& e : data) {
    Eigenspace r{e.eigenvalue, {}};
    for (auto b : e.blocks) {
      const std::size_t s = e.eigenvalue == 1 ? b - 1 : b;
      if (s > 0) r.blocks.push_back(s);
    }
    if (!r.blocks.empty()) out.push_back(std::move(r));
  }
  return out;
}

/// Random Jordan data of total size n over distinct nonzero rational eigenvalues.
inline JordanData random_jordan_data(Rng& rng, std::size_t n) {
  static const std::vector<Rational> pool = {1, -1, 2, Rational(1, 2), -3, Rational(2, 3), Rational(-5, 4)};
  JordanData data;
  std::vector<Rational> left(pool);
  std::size_t remaining = n;
  while (remaining > 0) {
    const auto idx = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(left.size()) - 1));
    const auto m = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(remaining)));
    data.push_back({left[idx], random_partition(rng, m)});
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(idx));
    remaining -= m;
  }
  return data;
}

inline QMatrix jordan_matrix(const JordanData& data) {
  std::vector<QMatrix> blocks;
  for (const auto& e : data)
    for (auto b : e.blocks) blocks.push_back(QMatrix::jordan_block(e.eigenvalue, b));
  return block_diagonal(blocks);
}

/// P J P^{-1} for a random invertible P.
inline QMatrix realize(Rng& rng, const JordanData& data) {
  const QMatrix j = jordan_matrix(data);
  const QMatrix p = random_invertible(rng, j.rows());
  return p * j * inverse(p);
}

/// from_star(T) seen in random bases of E and F; still minimal.
inline ThetaPair scrambled_star_pair(Rng& rng, const QMatrix& t) {
  const ThetaPair base = from_star(t);
  const QMatrix pe = random_invertible(rng, base.dim_E());
  const QMatrix pf = random_invertible(rng, base.dim_F());
  return ThetaPair(pf * base.u() * inverse(pe), pe * base.v() * inverse(pf));
}

/// A random irreducible tuple, or the first draw if none is found in 200 tries.
inline MonodromyTuple irreducible_tuple(std::size_t rank, std::size_t k, std::uint64_t seed) {
  MonodromyTuple t = random_tuple(rank, k, seed);
  for (std::uint64_t a = 1; a < 200 && !is_irreducible(t); ++a) t = random_tuple(rank, k, mix_seed(seed, a));
  return t;
}

}  // namespace rigidity::testing
