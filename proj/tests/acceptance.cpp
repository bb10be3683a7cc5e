// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "rigidity/campaign.hpp"
#include "rigidity/catalog.hpp"
#include "rigidity/fourier.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/similarity.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

namespace {

using namespace rigidity;
using namespace rigidity::testing;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome preservation(const CampaignSummary& s, double seconds) {
  std::ostringstream os;
  os << s.trials_run << " trials, " << s.failures.size() << " failures, " << seconds << " s";
  if (!s.failures.empty()) os << "; first: trial " << s.failures[0].trial << ": " << s.failures[0].reason;
  return {s.trials_run == 500 && s.all_equal && s.failures.empty() && seconds < 120.0, os.str()};
}

Outcome katz_values() {
  const auto catalog = load_catalog();
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& e : catalog) {
    const auto r = rigidity_report(e.tuple);
    const bool rank_one_or_hyp = e.tuple.rank == 1 || e.name == "hypergeometric2";
    if (rank_one_or_hyp) {
      ok = ok && r.index == 2 && r.physically_rigid;
      ++checked;
    }
    if (e.name == "nonrigid4") {
      ok = ok && r.index == 0 && !r.physically_rigid;
      ++checked;
    }
  }
  return {ok && checked >= 5, std::to_string(checked) + " entries checked"};
}

Outcome worked_example() {
  const auto t = make_tuple(1, {{0, QMatrix{{2}}}, {1, QMatrix{{3}}}});
  const auto r = verify_preservation(t);
  const auto& d = r.data;
  const bool ok = t.infinity_matrix == QMatrix{{Rational(1, 6)}} && d.components.size() == 2 &&
                  d.components[0].dimension == 1 && d.components[1].dimension == 1 && d.rank_hat == 2 &&
                  similar(d.zero_monodromy, QMatrix{{Rational(1, 6), 0}, {0, 1}}) && irregularity_end(d) == 2 &&
                  r.rig_source == 2 && r.rig_fourier == 2 && r.equal;
  return {ok, "rig_source " + std::to_string(r.rig_source) + ", rig_fourier " + std::to_string(r.rig_fourier)};
}

Outcome corollaries(const CampaignSummary& s) {
  std::size_t failures = 0;
  std::size_t identities = 0;
  for (const auto& t : s.trials) {
    if (!t.error.empty()) {
      ++failures;
      continue;
    }
    const auto& d = t.report.data;
    const auto n = static_cast<long long>(t.tuple.rank);
    for (std::size_t i = 0; i < t.tuple.num_finite(); ++i) {
      const auto& c = d.components[i];
      const long long lhs = static_cast<long long>(centralizer_dimension(t.tuple.finite_points[i].monodromy)) -
                            static_cast<long long>(centralizer_dimension(c.regular_monodromy));
      const long long diff = n - static_cast<long long>(c.dimension);
      failures += lhs != diff * diff;
      ++identities;
    }
    const long long excess = static_cast<long long>(d.rank_hat) - n;
    const long long lhs = static_cast<long long>(centralizer_dimension(t.tuple.infinity_matrix)) -
                          static_cast<long long>(centralizer_dimension(d.zero_monodromy));
    failures += lhs != -excess * excess;
    failures += static_cast<long long>(fixed_space_dim(d.zero_monodromy)) != excess;
    identities += 2;
  }
  failures += s.corollary_failures;
  return {failures == 0, std::to_string(identities) + " identities, " + std::to_string(failures) + " failures"};
}

Outcome theta_identity() {
  Rng rng(mix_seed(7, 5));
  std::size_t pairs = 0;
  std::size_t bad = 0;
  while (pairs < 250) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    // alternate Jordan-data monodromies with unstructured invertible ones
    const QMatrix t = pairs % 2 == 0 ? realize(rng, random_jordan_data(rng, n)) : random_invertible(rng, n);
    const ThetaPair p = scrambled_star_pair(rng, t);
    if (!is_minimal(p)) {
      ++bad;
      continue;
    }
    const auto r = centralizer_identity_check(p);
    bad += r.lhs != r.rhs;
    ++pairs;
  }
  return {bad == 0, std::to_string(pairs) + " minimal pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome centralizer_oracle() {
  Rng rng(mix_seed(7, 6));
  std::size_t bad = 0;
  const std::size_t total = 250;
  for (std::size_t i = 0; i < total; ++i) {
    const JordanData data = random_jordan_data(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    bad += centralizer_dimension(realize(rng, data)) != partition_centralizer(data);
  }
  return {bad == 0, std::to_string(total) + " matrices, " + std::to_string(bad) + " mismatches"};
}

bool same_class(const QMatrix& a, const QMatrix& b) { return invariant_factors(a) == invariant_factors(b); }

Outcome conjugation_invariance() {
  Rng rng(mix_seed(7, 7));
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (std::uint64_t s = 0; checked < 120; ++s) {
    const auto rank = static_cast<std::size_t>(1 + s % 4);
    const std::size_t k = rank == 1 ? 1 + s % 3 : 2 + s % 3;
    const MonodromyTuple t = irreducible_tuple(rank, k, mix_seed(77, s));
    if (!is_irreducible(t)) continue;
    const MonodromyTuple c = conjugate(t, random_invertible(rng, rank));
    const auto d = stationary_phase(t);
    const auto dc = stationary_phase(c);
    bool ok = rigidity_index(c) == rigidity_index(t) && rig_fourier(dc) == rig_fourier(d);
    for (std::size_t i = 0; i < t.num_finite(); ++i) {
      ok = ok && same_class(c.finite_points[i].monodromy, t.finite_points[i].monodromy);
      ok = ok && same_class(dc.components[i].regular_monodromy, d.components[i].regular_monodromy);
    }
    ok = ok && same_class(c.infinity_matrix, t.infinity_matrix) && same_class(dc.zero_monodromy, d.zero_monodromy);
    bad += !ok;
    ++checked;
  }
  return {bad == 0, std::to_string(checked) + " conjugated tuples, " + std::to_string(bad) + " mismatches"};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  };

  CampaignConfig config;  // trials 500, max_rank 4, max_points 4, seed 7
  CampaignSummary summary;
  double seconds = 0;
  try {
    const auto start = std::chrono::steady_clock::now();
    summary = run_campaign(config);
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  } catch (const std::exception& e) {
    std::printf("campaign aborted: %s\n", e.what());
  }

  report(1, "index preserved on 500 random tuples (seed 7)", [&] { return preservation(summary, seconds); });
  report(2, "catalog rigidity values", katz_values);
  report(3, "worked rank-1 example", worked_example);
  report(4, "local corollaries on every campaign tuple", [&] { return corollaries(summary); });
  report(5, "centralizer identity on random minimal pairs", theta_identity);
  report(6, "centralizer dimension against the partition formula", centralizer_oracle);
  report(7, "conjugation invariance", conjugation_invariance);
  return failed == 0 ? 0 : 1;
}
