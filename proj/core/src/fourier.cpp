#include "rigidity/fourier.hpp"

#include "rigidity/error.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/similarity.hpp"

#include <algorithm>

namespace rigidity {

namespace {

// Minimal pair over (F, T_F) whose nearby space has dimension `nearby_dim`:
// returns the nearby monodromy T_E, with T_E restricted to im(T_E - I)
// similar to T_F and dim ker(T_E - I) = nearby_dim - dim F.
QMatrix reconstruct_nearby_monodromy(const QMatrix& vanishing_monodromy, std::size_t nearby_dim) {
  const std::size_t f = vanishing_monodromy.rows();
  const UnitSplit split = split_unit_part(vanishing_monodromy);
  const UnitBlockPartition unit_blocks = unit_block_partition(vanishing_monodromy);

  const auto padding = static_cast<long long>(nearby_dim) - static_cast<long long>(f) -
                       static_cast<long long>(unit_blocks.parts());
  if (padding < 0) {
    throw Error(ErrorKind::NonRealizable,
                "non-realizable minimal pair: sum of rank(A_i - I) < n + dim ker(A_oo - I); "
                "tuple cannot be irreducible");
  }

  std::vector<QMatrix> blocks{split.rest};
  for (auto s : unit_blocks.sizes) blocks.push_back(QMatrix::jordan_block(1, s + 1));
  for (long long i = 0; i < padding; ++i) blocks.push_back(QMatrix::identity(1));
  return block_diagonal(blocks);
}

}  // namespace

FourierLocalData stationary_phase(const MonodromyTuple& t) {
  validate(t);
  FourierLocalData d;
  d.source_rank = t.rank;
  if (!is_irreducible(t)) {
    d.warnings.emplace_back("input tuple is reducible; the stationary-phase data is computed but the "
                            "preservation theorem does not apply");
  }

  for (const auto& pt : t.finite_points) {
    Restriction r = restrict_to_image(pt.monodromy);
    ExponentialComponent c;
    c.coefficient = pt.location;
    c.dimension = r.matrix.rows();
    c.regular_monodromy = std::move(r.matrix);
    d.rank_hat += c.dimension;
    d.components.push_back(std::move(c));
  }

  d.zero_monodromy = reconstruct_nearby_monodromy(t.infinity_matrix, d.rank_hat);

  // Postconditions of the reconstruction.
  if (fixed_space_dim(d.zero_monodromy) != d.rank_hat - t.rank) {
    throw Error(ErrorKind::Internal, "stationary_phase: dim ker(T_0 - I) != rank_hat - n");
  }
  if (!similar(restrict_to_image(d.zero_monodromy).matrix, t.infinity_matrix)) {
    throw Error(ErrorKind::Internal, "stationary_phase: vanishing monodromy at 0 is not similar to A_oo");
  }
  return d;
}

long long rig_fourier(const FourierLocalData& d) {
  long long sum_sq = 0;
  long long total = 0;
  for (const auto& c : d.components) {
    const auto n = static_cast<long long>(c.dimension);
    sum_sq += n * n;
    total += n;
  }
  return static_cast<long long>(centralizer_dimension(d.zero_monodromy)) +
         static_cast<long long>(formal_euler_end_min(d)) + sum_sq - total * total;
}

std::size_t irregularity_end(const FourierLocalData& d) {
  std::size_t sum_sq = 0;
  std::size_t total = 0;
  for (const auto& c : d.components) {
    sum_sq += c.dimension * c.dimension;
    total += c.dimension;
  }
  return total * total - sum_sq;
}

std::size_t formal_euler_end_min(const FourierLocalData& d) {
  std::size_t sum = 0;
  for (const auto& c : d.components) sum += centralizer_dimension(c.regular_monodromy);
  return sum;
}

PreservationReport verify_preservation(const MonodromyTuple& t, VerifyOptions options) {
  validate(t);
  PreservationReport r;
  r.hypothesis_satisfied = is_irreducible(t);
  if (!r.hypothesis_satisfied && !options.force) {
    throw Error(ErrorKind::HypothesisViolated, "theorem hypothesis violated: input tuple is reducible");
  }

  r.rig_source = rigidity_index(t);
  r.data = stationary_phase(t);
  const FourierLocalData& d = r.data;
  r.rig_fourier = rig_fourier(d);
  r.equal = r.rig_source == r.rig_fourier;
  r.irregularity = irregularity_end(d);

  const auto n = static_cast<long long>(t.rank);
  for (std::size_t i = 0; i < t.num_finite(); ++i) {
    const auto& comp = d.components[i];
    const auto ni = static_cast<long long>(comp.dimension);
    r.per_point_identities.push_back({
        to_string(t.finite_points[i].location),
        static_cast<long long>(centralizer_dimension(t.finite_points[i].monodromy)) -
            static_cast<long long>(centralizer_dimension(comp.regular_monodromy)),
        (n - ni) * (n - ni),
    });
  }
  const auto excess = static_cast<long long>(d.rank_hat) - n;
  r.per_point_identities.push_back({
      "infinity",
      static_cast<long long>(centralizer_dimension(t.infinity_matrix)) -
          static_cast<long long>(centralizer_dimension(d.zero_monodromy)),
      -excess * excess,
  });
  return r;
}

bool identities_hold(const PreservationReport& r) {
  return std::all_of(r.per_point_identities.begin(), r.per_point_identities.end(),
                     [](const PointIdentity& p) { return p.lhs == p.rhs; });
}

}  // namespace rigidity
