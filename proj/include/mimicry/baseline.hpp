#pragma once

#include <cstdint>
#include <span>

#include "mimicry/dyads.hpp"
#include "mimicry/matching.hpp"
#include "mimicry/model.hpp"

namespace mimicry {

/// Candidates come from the focal's (shop, date, daypart) cell, pooled over
/// registers.
struct RandomizationSpec {
  std::uint64_t seed = 0;
  bool drop_if_no_candidate = true;
};

/// Replaces each dyad's partner with a uniformly drawn transaction from the
/// focal's cell, excluding the focal person's transactions and the original
/// partner transaction. The delay is recomputed and may be negative. Each
/// dyad draws from a seed derived from its position.
DyadSet randomize_partners(const TransactionLog& log, std::span<const Dyad> dyads, const RandomizationSpec& spec);

struct CoordinationResult {
  double t = 0.0;
  double p = 1.0;
  std::size_t n_pairs_used = 0;
};

/// Order test for the pre-purchase coordination hypothesis. Matched pairs
/// are grouped by the treated dyad's unordered person pair {A, B} with A
/// the smaller person id. Pairs with at least min_per_order matched pairs
/// in both orders qualify; from each order sample_per_pair treated-focal
/// outcomes are drawn without replacement and pooled into an A-to-B and a
/// B-to-A sample, then compared with a two-sided Welch t-test. Throws
/// InsufficientDataError with fewer than two qualifying pairs.
CoordinationResult coordination_test(const TransactionLog& log, std::span<const MatchedPair> pairs,
                                     std::size_t min_per_order = 10, std::size_t sample_per_pair = 10,
                                     std::uint64_t seed = 0);

}  // namespace mimicry
