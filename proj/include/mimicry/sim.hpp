#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mimicry/model.hpp"

namespace mimicry {

/// Per daypart (breakfast, lunch, afternoon) values.
using DaypartValues = std::array<double, 3>;
/// Per daypart, per feature probabilities. Feature slots follow the Feature
/// enum; the VegetarianMeal slot is only read at lunch and the Tea slot
/// only at breakfast and afternoon.
using FeatureTable = std::array<std::array<double, kFeatureCount>, 3>;

struct GapSpec {
  enum class Kind { Lognormal, Uniform } kind = Kind::Lognormal;
  double median_s = 40.0;
  double sigma = 0.8;
  double min_s = 1.0;
  double max_s = 300.0;
};

struct SocialSpec {
  enum class Mode { Matching, Random, Pairs } mode = Mode::Matching;
  double paired_fraction = 0.8;                          // matching mode
  double density = 0.0;                                  // random mode
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // pairs mode, 0-based person indices
  DaypartValues pair_visit_rate{0.05, 0.3, 0.05};        // joint visits per pair per day
  DaypartValues solo_visit_rate{0.1, 0.2, 0.1};          // solo visits per person per day
};

struct SimulationConfig {
  std::uint64_t seed = 0;
  std::size_t n_persons = 2000;
  std::size_t n_shops = 2;
  std::size_t n_registers_per_shop = 3;
  std::size_t n_days = 250;
  Date start_date = std::chrono::sys_days{std::chrono::year{2018} / 1 / 1};
  std::array<double, 3> status_mix{0.65, 0.30, 0.05};  // student, staff, other
  double labeled_fraction = 1.0;
  bool status_signatures = true;  // status-specific month and hour schedules
  double weekend_factor = 0.3;

  FeatureTable base_probability{};
  double propensity_sd = 1.0;  // spread of person propensities on the logit scale
  double homophily = 0.0;      // correlation of tied persons' latent propensities
  SocialSpec social;

  FeatureTable delta{};  // mimicry per (daypart, feature); anchor slots hold anchor mimicry
  std::map<Status, FeatureTable> delta_by_focal_status;
  std::optional<double> tau_s;  // decay time constant; none disables decay
  bool asymmetric_mimicry = false;

  enum class Coordination { None, PreAgreement } coordination = Coordination::None;
  double agreement_prob = 0.5;

  GapSpec gap;
  double service_min_s = 10.0;
  double service_max_s = 30.0;
  double availability_dropout = 0.0;
  double popularity_shock_sd = 0.0;
  double no_anchor_rate = 0.02;
  double other_item_rate = 0.2;

  /// Default menu with sensible base probabilities and no mimicry.
  static SimulationConfig defaults();
  /// Missing keys keep their defaults. Throws Error on invalid values.
  static SimulationConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  void validate() const;
};

struct SimPerson {
  std::string id;
  Status status = Status::Student;
  Gender gender = Gender::Female;
  int birth_year = 1995;
  std::uint32_t home_shop = 0;
  bool labeled = true;
  FeatureTable latent{};       // standard-normal propensity scores
  FeatureTable probability{};  // logistic(logit(base) + sd * latent)
};

struct Population {
  std::vector<SimPerson> persons;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ties;  // (lower index, higher index)
};

/// Deterministic under config.seed. Throws Error for an infeasible social
/// graph spec.
Population generate_population(const SimulationConfig& config);

struct GroundTruthEntry {
  double rd = 0.0;             // mean injected increase in purchase probability
  std::size_t n_treated = 0;   // pair visits where the partner bought
};

struct GroundTruth {
  std::map<std::string, GroundTruthEntry> items;  // by study item name
  std::map<std::string, std::map<std::string, GroundTruthEntry>> by_status_pair;  // item, "partner-focal"
  std::map<std::string, GroundTruthEntry> anchors;  // meal_vegetarian, beverage_kind

  nlohmann::json to_json() const;
};

struct SimulationOutput {
  std::vector<Transaction> transactions;  // ordered by (timestamp, tx_id)
  ItemCatalog catalog;
  Demographics demographics;  // labeled persons only
  GroundTruth truth;
};

ItemCatalog simulation_catalog();

SimulationOutput simulate_log(const Population& population, const SimulationConfig& config);

inline SimulationOutput simulate(const SimulationConfig& config) {
  return simulate_log(generate_population(config), config);
}

}  // namespace mimicry
