#include "rigidity/monodromy.hpp"

#include "rigidity/error.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/random.hpp"

#include <map>

namespace rigidity {

namespace {

QMatrix ordered_product(const MonodromyTuple& t) {
  QMatrix p = QMatrix::identity(t.rank);
  for (const auto& pt : t.finite_points) p = p * pt.monodromy;
  return p;
}

void check_shape(const QMatrix& m, std::size_t n, const std::string& where) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::Validation, where + ": matrix is not " + std::to_string(n) + "x" + std::to_string(n));
  }
}

}  // namespace

MonodromyTuple make_tuple(std::size_t rank, std::vector<SingularPoint> finite_points) {
  MonodromyTuple t;
  t.rank = rank;
  t.finite_points = std::move(finite_points);
  for (const auto& pt : t.finite_points) check_shape(pt.monodromy, rank, "finite point " + to_string(pt.location));
  const QMatrix p = ordered_product(t);
  if (!is_invertible(p)) {
    throw Error(ErrorKind::Validation, "non-invertible local monodromy: product of finite monodromies is singular");
  }
  t.infinity_matrix = inverse(p);
  return t;
}

void validate(const MonodromyTuple& t) {
  if (t.rank == 0) throw Error(ErrorKind::Validation, "rank must be at least 1");
  if (t.finite_points.empty()) throw Error(ErrorKind::Validation, "at least one finite singular point is required");

  std::map<Rational, std::size_t> seen;
  for (std::size_t i = 0; i < t.finite_points.size(); ++i) {
    const auto& pt = t.finite_points[i];
    const std::string where = "finite point " + to_string(pt.location);
    check_shape(pt.monodromy, t.rank, where);
    if (!seen.emplace(pt.location, i).second) {
      throw Error(ErrorKind::Validation, "duplicate singular location " + to_string(pt.location));
    }
    if (!is_invertible(pt.monodromy)) {
      throw Error(ErrorKind::Validation, "non-invertible local monodromy at " + where);
    }
    if (pt.monodromy.is_identity()) {
      throw Error(ErrorKind::Validation, "trivial local monodromy at finite point " + to_string(pt.location));
    }
  }
  check_shape(t.infinity_matrix, t.rank, "infinity");
  if (!is_invertible(t.infinity_matrix)) {
    throw Error(ErrorKind::Validation, "non-invertible local monodromy at infinity");
  }
  if (!(ordered_product(t) * t.infinity_matrix).is_identity()) {
    throw Error(ErrorKind::Validation, "monodromy relation violated: A_1 ... A_k A_oo != I");
  }
}

RigidityReport rigidity_report(const MonodromyTuple& t) {
  validate(t);
  RigidityReport r;
  r.rank = t.rank;
  r.num_points = t.num_finite() + 1;
  long long sum = 0;
  for (const auto& pt : t.finite_points) {
    r.centralizer_dims.push_back(centralizer_dimension(pt.monodromy));
    sum += static_cast<long long>(r.centralizer_dims.back());
  }
  r.centralizer_dims.push_back(centralizer_dimension(t.infinity_matrix));
  sum += static_cast<long long>(r.centralizer_dims.back());

  const auto n = static_cast<long long>(t.rank);
  r.index = (2 - static_cast<long long>(r.num_points)) * n * n + sum;
  r.irreducible = is_irreducible(t);
  r.physically_rigid = r.irreducible && r.index == 2;
  return r;
}

long long rigidity_index(const MonodromyTuple& t) {
  validate(t);
  const auto n = static_cast<long long>(t.rank);
  long long index = (2 - static_cast<long long>(t.num_finite() + 1)) * n * n;
  for (const auto& pt : t.finite_points) index += static_cast<long long>(centralizer_dimension(pt.monodromy));
  index += static_cast<long long>(centralizer_dimension(t.infinity_matrix));
  return index;
}

bool is_irreducible(const MonodromyTuple& t) {
  validate(t);
  const std::size_t n = t.rank;
  const std::size_t target = n * n;

  std::vector<const QMatrix*> gens;
  for (const auto& pt : t.finite_points) gens.push_back(&pt.monodromy);
  gens.push_back(&t.infinity_matrix);

  // Span kept as an echelon basis of vectorized matrices; every accepted
  // element is queued once and multiplied by each generator.
  std::vector<QMatrix> basis;
  std::vector<QMatrix> echelon;  // rows of the reduced span
  std::vector<std::size_t> lead;

  auto try_add = [&](const QMatrix& m) {
    QMatrix vec(1, target, std::vector<Rational>(m.entries().begin(), m.entries().end()));
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = vec(0, lead[e]);
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < target; ++c) {
        if (sgn(echelon[e](0, c)) != 0) vec(0, c) -= f * echelon[e](0, c);
      }
    }
    std::size_t l = 0;
    while (l < target && sgn(vec(0, l)) == 0) ++l;
    if (l == target) return false;
    const Rational inv = 1 / vec(0, l);
    vec *= inv;
    // keep the echelon fully reduced so single-pass reduction stays valid
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = echelon[e](0, l);
      if (sgn(f) != 0) echelon[e] -= vec * f;
    }
    echelon.push_back(std::move(vec));
    lead.push_back(l);
    basis.push_back(m);
    return true;
  };

  try_add(QMatrix::identity(n));
  for (std::size_t next = 0; next < basis.size() && basis.size() < target; ++next) {
    for (const QMatrix* g : gens) {
      const QMatrix prod = *g * basis[next];
      try_add(prod);
      if (basis.size() == target) break;
    }
  }
  return basis.size() == target;
}

bool is_physically_rigid(const MonodromyTuple& t) { return is_irreducible(t) && rigidity_index(t) == 2; }

ThetaPair local_pair(const MonodromyTuple& t, PointId point) {
  validate(t);
  if (point.is_infinity()) return from_full_direct_image(t.infinity_matrix);
  if (point.index() >= t.num_finite()) {
    throw Error(ErrorKind::Precondition, "point index " + std::to_string(point.index()) + " out of range");
  }
  return from_star(t.finite_points[point.index()].monodromy);
}

MonodromyTuple conjugate(const MonodromyTuple& t, const QMatrix& p) {
  const QMatrix p_inv = inverse(p);
  MonodromyTuple out = t;
  for (auto& pt : out.finite_points) pt.monodromy = p * pt.monodromy * p_inv;
  out.infinity_matrix = p * t.infinity_matrix * p_inv;
  return out;
}

namespace {

// Integer Jordan-type matrix conjugated by a unimodular matrix; entries stay integral.
QMatrix structured_draw(Rng& rng, std::size_t n) {
  static constexpr long kEigenvalues[] = {1, 1, 1, -1, 2, -2, 3};
  std::vector<QMatrix> blocks;
  for (auto size : random_partition(rng, n)) {
    const long ev = kEigenvalues[rng.uniform(0, static_cast<long long>(std::size(kEigenvalues)) - 1)];
    blocks.push_back(QMatrix::jordan_block(ev, size));
  }
  const QMatrix j = block_diagonal(blocks);
  const QMatrix p = random_unimodular(rng, n);
  return p * j * inverse(p);
}

}  // namespace

MonodromyTuple random_tuple(std::size_t rank, std::size_t k, std::uint64_t seed) {
  if (rank == 0 || k == 0) throw Error(ErrorKind::Precondition, "random_tuple needs rank >= 1 and k >= 1");
  Rng rng(seed);
  constexpr int kMaxAttempts = 1000;

  std::vector<SingularPoint> points;
  for (std::size_t i = 0; i < k; ++i) {
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxAttempts && !accepted; ++attempt) {
      QMatrix m = rng.coin() ? structured_draw(rng, rank) : random_integer_matrix(rng, rank, rank, -2, 2);
      if (m.is_identity() || !is_invertible(m)) continue;
      points.push_back({Rational(static_cast<long>(i)), std::move(m)});
      accepted = true;
    }
    if (!accepted) throw Error(ErrorKind::Generation, "random_tuple: rejection bound exceeded");
  }
  return make_tuple(rank, std::move(points));
}

}  // namespace rigidity
