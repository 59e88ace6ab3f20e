#pragma once

#include <ostream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mimicry/baseline.hpp"
#include "mimicry/estimate.hpp"
#include "mimicry/matching.hpp"
#include "mimicry/sensitivity.hpp"

namespace mimicry {

/// Non-finite values become null.
nlohmann::json number_or_null(double x);

/// {item, stratum, n_pairs, rd, rd_ci, rr, rr_ci, chi2, p, counts}; baseline
/// estimates carry an extra `baseline: true`.
nlohmann::json estimate_json(std::string_view item, std::string_view stratum, const EffectEstimate& estimate,
                             bool baseline = false);
nlohmann::json sensitivity_json(std::string_view item, const SensitivityResult& result);
nlohmann::json dose_json(std::string_view item, const DoseResponseResult& result);
nlohmann::json balance_json(const BalanceReport& report);
nlohmann::json coordination_json(const CoordinationResult& result);

// CSV tables. Each takes the `items` array of a results document (or a
// partial document with the same layout) and skips items lacking the
// section, so a stage run and a full run print identical tables.

/// item,stratum,n_pairs,n11,n10,n01,n00,rd,rd_lo,rd_hi,rr,rr_lo,rr_hi,chi2,p,baseline
void write_estimates_csv(std::ostream& out, const nlohmann::json& items);
void write_baseline_csv(std::ostream& out, const nlohmann::json& items);
/// item,grouping,stratum,n_pairs,status,rd,rd_lo,rd_hi,rr,rr_lo,rr_hi,p
void write_subgroups_csv(std::ostream& out, const nlohmann::json& items);
/// item,midpoint_s,n_pairs,rd,rd_lo,rd_hi,rr
void write_dose_csv(std::ostream& out, const nlohmann::json& items);
/// item,gamma_star,alpha,lambda,delta
void write_sensitivity_csv(std::ostream& out, const nlohmann::json& items);
/// item,status,t,p,n_pairs_used
void write_coordination_csv(std::ostream& out, const nlohmann::json& items);
/// item,covariate,smd_before,smd_after,pass
void write_balance_csv(std::ostream& out, const nlohmann::json& items);
/// Estimate rows for the anchor_mimicry array of a results document.
void write_anchor_csv(std::ostream& out, const nlohmann::json& anchors);

}  // namespace mimicry
