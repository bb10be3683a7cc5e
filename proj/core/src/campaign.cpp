#include "rigidity/campaign.hpp"

#include "rigidity/error.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/random.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace rigidity {

namespace {

constexpr std::size_t kMaxRedraws = 200;

}  // namespace

void validate_config(const CampaignConfig& config) {
  if (config.trials == 0 || config.max_rank == 0 || config.max_points == 0) {
    throw Error(ErrorKind::Validation, "campaign trials, max_rank and max_points must all be positive");
  }
}

TrialResult run_trial(const CampaignConfig& config, std::size_t trial) {
  TrialResult out;
  out.trial = trial;
  out.seed = mix_seed(config.seed, trial);
  Rng rng(out.seed);

  // With a single finite point the group is cyclic, so only rank 1 can be irreducible.
  const std::size_t max_rank = config.max_points == 1 ? 1 : config.max_rank;
  out.rank = static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(max_rank)));
  const long long min_points = out.rank >= 2 ? 2 : 1;
  out.points = static_cast<std::size_t>(rng.uniform(min_points, static_cast<long long>(config.max_points)));

  try {
    bool found = false;
    for (std::size_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
      MonodromyTuple t = random_tuple(out.rank, out.points, mix_seed(out.seed, attempt));
      if (!is_irreducible(t)) {
        ++out.discarded;
        continue;
      }
      out.tuple = std::move(t);
      found = true;
      break;
    }
    if (!found) throw Error(ErrorKind::Generation, "no irreducible draw within the redraw bound");

    out.report = verify_preservation(out.tuple);
    const auto& d = out.report.data;
    out.corollaries_hold = identities_hold(out.report) &&
                           fixed_space_dim(d.zero_monodromy) == d.rank_hat - out.tuple.rank;
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  validate_config(config);
  std::vector<TrialResult> results(config.trials);

  unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, config.trials));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) results[i] = run_trial(config, i);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  CampaignSummary s;
  s.trials_run = results.size();
  for (const auto& r : results) {
    s.discarded_reducible += r.discarded;
    if (!r.error.empty()) {
      s.failures.push_back({r.trial, r.seed, r.error});
      continue;
    }
    if (!r.report.equal) {
      s.failures.push_back({r.trial, r.seed,
                            "rig_source " + std::to_string(r.report.rig_source) + " != rig_fourier " +
                                std::to_string(r.report.rig_fourier)});
    }
    if (!r.corollaries_hold) ++s.corollary_failures;
  }
  s.all_equal = s.failures.empty();
  s.trials = std::move(results);
  return s;
}

}  // namespace rigidity
