#pragma once

#include "rigidity/fourier.hpp"
#include "rigidity/monodromy.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rigidity {

struct CampaignConfig {
  std::size_t trials = 500;
  std::size_t max_rank = 4;
  /// Upper bound on the number of finite singular points k; infinity is extra.
  std::size_t max_points = 4;
  std::uint64_t seed = 7;
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Throws Error(Validation) unless trials, max_rank and max_points are positive.
void validate_config(const CampaignConfig& config);

struct TrialResult {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  std::size_t points = 0;
  /// Reducible draws thrown away before an irreducible tuple was found.
  std::size_t discarded = 0;
  MonodromyTuple tuple;
  PreservationReport report;
  /// Per-point identities plus dim ker(T_0 - I) = rank_hat - n.
  bool corollaries_hold = false;
  std::string error;  // empty unless the trial could not be completed
};

struct TrialFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string reason;
};

struct CampaignSummary {
  std::size_t trials_run = 0;
  bool all_equal = false;
  std::vector<TrialFailure> failures;
  std::size_t corollary_failures = 0;
  std::size_t discarded_reducible = 0;
  std::vector<TrialResult> trials;
};

/// Trial i is seeded with mix_seed(config.seed, i), so results do not depend
/// on scheduling; rank is uniform in [1, max_rank] and k uniform over the
/// feasible range (k >= 2 when rank >= 2, since one finite point gives a
/// cyclic monodromy group). Reducible draws are redrawn with the same rank
/// and k, up to a fixed bound.
CampaignSummary run_campaign(const CampaignConfig& config);

/// One trial of the campaign, exposed for replay.
TrialResult run_trial(const CampaignConfig& config, std::size_t trial);

}  // namespace rigidity
