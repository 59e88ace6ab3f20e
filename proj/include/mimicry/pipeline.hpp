#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mimicry/baseline.hpp"
#include "mimicry/context.hpp"
#include "mimicry/dyads.hpp"
#include "mimicry/estimate.hpp"
#include "mimicry/infer.hpp"
#include "mimicry/matching.hpp"
#include "mimicry/model.hpp"
#include "mimicry/sensitivity.hpp"
#include "mimicry/sim.hpp"

namespace mimicry {

/// Declarative run description. Input paths are kept as written and
/// resolved against base_dir (the config file's directory).
struct RunConfig {
  std::uint64_t seed = 0;

  std::string transactions;
  TransactionFormat format = TransactionFormat::Csv;
  std::string catalog;
  std::string demographics;  // empty when absent
  std::filesystem::path base_dir;

  DyadOptions dyads;
  std::size_t min_pair_count = 10;
  double min_item_fraction = 0.01;

  AdjustmentSpec adjustment;

  std::size_t bootstrap = 1000;
  double alpha = 0.05;
  std::size_t min_stratum_pairs = 50;
  bool two_sided_sensitivity = false;
  int dose_bin_width_s = 30;
  int dose_max_delay_s = 300;
  std::size_t coordination_min_per_order = 10;
  std::size_t coordination_sample = 10;
  AgeBins age_bins;

  std::vector<std::string> items;  // empty: every selected addition
  bool baseline = true;
  bool sensitivity = true;
  bool dose_response = true;
  bool coordination = true;
  std::vector<Grouping> subgroups;
  bool anchor_mimicry = true;
  bool infer_status = false;

  std::string output_dir = "out";

  /// The seed is mandatory: throws Error when neither the document nor
  /// `seed_override` provides one. Unknown keys are rejected.
  static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir,
                             std::optional<std::uint64_t> seed_override = std::nullopt);
  static RunConfig load(const std::filesystem::path& path, std::optional<std::uint64_t> seed_override = std::nullopt);
  /// Everything except base_dir and the output directory.
  nlohmann::json to_json() const;
  void validate() const;

  std::filesystem::path resolve(const std::string& path) const;
};

struct Inputs {
  TransactionLog log;
  ItemCatalog catalog;
  Demographics demographics;
  bool has_demographics = false;
  std::size_t unknown_items = 0;
  std::vector<RecordError> rejected;
};

/// Reads the configured files. Throws Error when a path does not exist.
Inputs load_inputs(const RunConfig& config);
Inputs inputs_from_simulation(const SimulationOutput& sim);

struct DyadStage {
  ContextStats context;
  DyadSet extracted;  // every anchored dyad
  DyadSet frequent;   // dyads of frequently co-queuing person pairs
  std::vector<AdditionSelection> selection;
};

DyadStage dyad_stage(const TransactionLog& log, const RunConfig& config);
/// Rebuilds the stage from a persisted frequent-dyad dump. `extracted` is
/// left empty.
DyadStage dyad_stage_from(const TransactionLog& log, DyadSet frequent, const RunConfig& config);

/// The "dyads" section of results.json.
nlohmann::json dyads_summary(const DyadStage& stage, const RunConfig& config);

/// Selected additions, restricted to config.items when given.
std::vector<StudyItem> study_items(const DyadStage& stage, const RunConfig& config);

// Per-item sections of results.json. Each derives its seed from the run seed
// and the item name, so stage commands reproduce the full run exactly.
nlohmann::json estimate_section(const TransactionLog& log, std::span<const MatchedPair> pairs, const StudyItem& item,
                                const RunConfig& config);
nlohmann::json sensitivity_section(const nlohmann::json& estimate, const StudyItem& item, const RunConfig& config);
nlohmann::json dose_section(const TransactionLog& log, std::span<const MatchedPair> pairs, const StudyItem& item,
                            const RunConfig& config);
nlohmann::json coordination_section(const TransactionLog& log, std::span<const MatchedPair> pairs,
                                    const StudyItem& item, const RunConfig& config);
nlohmann::json baseline_section(const TransactionLog& log, std::span<const Dyad> baseline_dyads,
                                const ContextStats& context, const StudyItem& item, const RunConfig& config);
DyadSet baseline_dyads(const TransactionLog& log, std::span<const Dyad> dyads, const RunConfig& config);

struct PipelineResult {
  nlohmann::json results;
  DyadStage dyads;
  std::vector<MatchedPair> pairs;  // every item, in item order
  DyadSet baseline;
  std::optional<InferResult> inference;
  bool balance_pass = true;
};

/// Runs every enabled analysis in memory. results.json content is
/// validated against the shipped schema; a violation throws Error.
PipelineResult run_analysis(const Inputs& inputs, const RunConfig& config);

/// results.json, per-table CSVs, intermediate dumps and plots.
void write_run_outputs(const PipelineResult& result, const Inputs& inputs, const std::filesystem::path& dir,
                       std::ostream& notices);

/// The shipped results schema.
const nlohmann::json& results_schema();

/// Writes `content` to dir/name, creating dir as needed.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

/// Groups matched pairs by item name, keeping first-appearance order.
std::vector<std::pair<StudyItem, std::vector<MatchedPair>>> group_by_item(std::span<const MatchedPair> pairs);

}  // namespace mimicry
