#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mimicry/context.hpp"
#include "mimicry/dyads.hpp"
#include "mimicry/model.hpp"

namespace mimicry {

enum class CaliperMode { Relative, Absolute };

/// Which back-door adjustment set to match on. The defaults match partner
/// identity, shop, daypart, availability, and popularity within a relative
/// caliper. match_focal_identity adds the focal person; match_exact_anchor
/// adds both anchor subtypes (ignored for anchor-attribute items, where the
/// partner's anchor is the treatment).
struct AdjustmentSpec {
  bool match_focal_identity = false;
  bool match_exact_anchor = false;
  double caliper = 0.10;
  CaliperMode caliper_mode = CaliperMode::Relative;

  /// Throws DomainError unless caliper is in (0, 1).
  void validate() const;
};

/// |pt - pc| / max(pt, pc) <= caliper in relative mode, |pt - pc| <= caliper
/// in absolute mode.
bool within_caliper(double popularity_treated, double popularity_control, const AdjustmentSpec& spec);

struct MatchedPair {
  StudyItem item;
  Dyad treated;
  Dyad control;
  double popularity_treated = 0.0;
  double popularity_control = 0.0;
};

struct MatchResult {
  StudyItem item;
  std::vector<MatchedPair> pairs;
  // Every dyad that could enter matching, with its cell popularity.
  DyadSet eligible_treated;
  DyadSet eligible_control;
  std::vector<double> popularity_treated;
  std::vector<double> popularity_control;
  std::size_t unmatched_treated = 0;
};

/// Greedy 1:1 nearest-popularity matching without replacement inside each
/// exact-key stratum. Treated dyads are visited in (date, partner tx_id,
/// focal tx_id) order; each takes the remaining control closest in
/// popularity that satisfies the caliper, ties going to the earlier control.
MatchResult build_matched_pairs(const TransactionLog& log, std::span<const Dyad> dyads, const StudyItem& item,
                                const ContextStats& context, const AdjustmentSpec& spec = {});

/// (mean_t - mean_c) / sqrt((var_t + var_c) / 2) with n-1 variances. Zero
/// pooled variance gives 0 for equal means and +/-infinity otherwise.
/// Throws DomainError with fewer than two values in an arm.
double smd(std::span<const double> treated, std::span<const double> control);

enum class Covariate { Popularity, Delay, HourOfDay, Shop };
std::string_view covariate_name(Covariate c);

struct CovariateBalance {
  Covariate covariate = Covariate::Popularity;
  double before = 0.0;
  double after = 0.0;
};

struct BalanceReport {
  std::vector<CovariateBalance> covariates;
  bool pass = false;  // every |after| < threshold
};

inline constexpr double kBalanceThreshold = 0.2;

/// Throws NoPairsError on an empty matched set.
BalanceReport balance_report(const TransactionLog& log, const MatchResult& result,
                             std::span<const Covariate> covariates);

/// item,treated_partner_tx,treated_focal_tx,control_partner_tx,control_focal_tx,popularity_t,popularity_c
void write_matched_pairs_csv(std::ostream& out, const TransactionLog& log, std::span<const MatchedPair> pairs);
std::vector<MatchedPair> read_matched_pairs_csv(std::istream& in, const TransactionLog& log);

}  // namespace mimicry
