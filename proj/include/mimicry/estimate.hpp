#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mimicry/context.hpp"
#include "mimicry/dyads.hpp"
#include "mimicry/matching.hpp"
#include "mimicry/model.hpp"

namespace mimicry {

/// Focal outcomes of one matched pair.
struct PairOutcome {
  bool treated = false;  // treated-arm focal bought the item
  bool control = false;  // control-arm focal bought the item
};

std::vector<PairOutcome> pair_outcomes(const TransactionLog& log, std::span<const MatchedPair> pairs);

struct PairedCounts {
  std::size_t n11 = 0;  // both focals purchase
  std::size_t n10 = 0;  // treated focal only
  std::size_t n01 = 0;  // control focal only
  std::size_t n00 = 0;

  std::size_t total() const noexcept { return n11 + n10 + n01 + n00; }
  std::size_t treated_yes() const noexcept { return n11 + n10; }
  std::size_t control_yes() const noexcept { return n11 + n01; }
  std::size_t discordant() const noexcept { return n10 + n01; }
  std::optional<double> discordant_ratio() const;

  friend bool operator==(const PairedCounts&, const PairedCounts&) = default;
};

/// Throws NoPairsError on an empty set.
PairedCounts paired_counts(std::span<const PairOutcome> outcomes);
PairedCounts paired_counts(const TransactionLog& log, std::span<const MatchedPair> pairs);

/// (n11+n10)/N - (n11+n01)/N. Throws NoPairsError when N = 0.
double risk_difference(const PairedCounts& counts);

/// (n11+n10)/(n11+n01); empty when the control arm has no purchases.
std::optional<double> risk_ratio(const PairedCounts& counts);

struct PairedTest {
  double statistic = 0.0;  // McNemar, no continuity correction
  double p = 1.0;          // two-sided
  bool exact = false;      // exact binomial p used (fewer than 25 discordant pairs)
};

/// Empty when there are no discordant pairs.
std::optional<PairedTest> paired_chi2(const PairedCounts& counts);

enum class Statistic { RD, RR };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Percentile bootstrap over pairs at 2.5/97.5. Each replicate draws from
/// its own seed derived from `seed`. RR replicates with no control
/// purchases are skipped; empty if none remain. Throws DomainError for
/// fewer than two pairs.
std::optional<Interval> bootstrap_ci(std::span<const PairOutcome> outcomes, Statistic statistic,
                                     std::size_t replicates, std::uint64_t seed);

struct BootstrapIntervals {
  Interval rd;
  std::optional<Interval> rr;
  double rd_se = 0.0;  // standard deviation of the RD replicates
};

/// RD and RR intervals from one shared set of replicates.
BootstrapIntervals bootstrap_intervals(std::span<const PairOutcome> outcomes, std::size_t replicates,
                                       std::uint64_t seed);

struct EstimationOptions {
  std::size_t bootstrap = 1000;
  std::uint64_t seed = 0;
};

struct EffectEstimate {
  PairedCounts counts;
  std::size_t n_pairs = 0;
  double rd = 0.0;
  Interval rd_ci;
  double rd_se = 0.0;
  std::optional<double> rr;
  std::optional<Interval> rr_ci;
  std::optional<PairedTest> test;
};

/// Throws NoPairsError for an empty set and DomainError for a single pair.
EffectEstimate estimate_effect(std::span<const PairOutcome> outcomes, const EstimationOptions& options);

enum class Grouping {
  PartnerStatus,
  FocalStatus,
  StatusPair,
  PartnerAge,
  FocalAge,
  PartnerGender,
  FocalGender,
  Year,
  Shop,
  TieStrength,
  AdditionItem,
  Daypart,
};

std::string_view grouping_name(Grouping g);
std::optional<Grouping> parse_grouping(std::string_view name);

/// Attribute sources for subgroup strata. Pairs whose attribute is missing
/// land in an "unknown" stratum so strata always partition the input.
struct SubgroupContext {
  const Demographics* demographics = nullptr;
  AgeBins age_bins;
  const TieStrengthIndex* ties = nullptr;
};

struct StratumEstimate {
  std::string stratum;
  std::size_t n_pairs = 0;
  std::optional<EffectEstimate> estimate;  // empty when below the minimum size
};

/// Strata are keyed on the treated dyad and returned in label order.
std::vector<StratumEstimate> subgroup_estimates(const TransactionLog& log, std::span<const MatchedPair> pairs,
                                                Grouping grouping, const SubgroupContext& context,
                                                const EstimationOptions& options, std::size_t min_pairs = 50);

/// Stratum label of one pair under a grouping.
std::string stratum_label(const TransactionLog& log, const MatchedPair& pair, Grouping grouping,
                          const SubgroupContext& context);

enum class AnchorAttribute { MealVegetarian, BeverageKind };
std::string_view anchor_attribute_name(AnchorAttribute a);

/// Study items standing for an anchor attribute: lunch/vegetarian_meal, or
/// breakfast/tea and afternoon/tea.
std::vector<StudyItem> anchor_items(AnchorAttribute attribute);

struct AnchorMimicry {
  std::vector<MatchedPair> pairs;
  std::optional<EffectEstimate> estimate;  // empty when no pair could be formed
};

/// Matching and estimation with the anchor attribute as the item. Throws
/// NoPairsError when no dyad holds the relevant anchor class.
AnchorMimicry anchor_mimicry(const TransactionLog& log, std::span<const Dyad> dyads, const ContextStats& context,
                             AnchorAttribute attribute, const AdjustmentSpec& spec,
                             const EstimationOptions& options);

struct DoseBin {
  double midpoint = 0.0;
  EffectEstimate estimate;
};

struct DoseResponseResult {
  std::vector<DoseBin> bins;
  double slope_rd = 0.0;
  double intercept_rd = 0.0;
  double p_rd = 1.0;
  std::optional<double> slope_rr;
  std::optional<double> p_rr;
};

/// Bins pairs by the treated dyad's delay. Bins with fewer than two pairs
/// are left out; throws InsufficientDataError below three usable bins.
DoseResponseResult dose_response(const TransactionLog& log, std::span<const MatchedPair> pairs,
                                 const EstimationOptions& options, int bin_width_s = 30, int max_delay_s = 300);

/// Unmatched contrast over every anchored dyad in the item's daypart:
/// P(focal buys | partner buys) - P(focal buys | partner does not).
std::optional<double> naive_risk_difference(const TransactionLog& log, std::span<const Dyad> dyads,
                                            const StudyItem& item);

}  // namespace mimicry
