#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mimicry/forest.hpp"
#include "mimicry/model.hpp"

namespace mimicry {

/// Temporal activity profile of one person. Purchased items never enter.
struct FeatureVector {
  double total_tx = 0.0;
  double years_active = 0.0;  // (last - first) / 365.25 days
  std::array<double, 12> month_dist{};
  std::array<double, 7> weekday_dist{};  // Sunday first
  std::array<double, 24> hour_dist{};

  std::vector<double> values() const;
  static constexpr std::size_t kWidth = 2 + 12 + 7 + 24;
};

/// Throws Error for a person without transactions.
FeatureVector extract_features(const TransactionLog& log, std::string_view person_id);

/// Features for every person in the log, keyed by person id.
std::map<std::string, FeatureVector> extract_all_features(const TransactionLog& log);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  std::size_t support = 0;  // held-out examples of the class
};

struct TrainOptions {
  double holdout = 0.2;
  std::uint64_t seed = 0;
  std::size_t trees = 100;
  int max_depth = 12;
  std::size_t min_per_class = 50;
};

/// Binary student/staff classifier.
struct StatusModel {
  static constexpr int kVersion = 1;
  RandomForest forest;
  std::uint64_t seed = 0;
  std::size_t trees = 0;
  int max_depth = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  ClassMetrics student;
  ClassMetrics staff;
};

/// Stratified single holdout split. Labels other than student and staff
/// are rejected with DomainError; a class below min_per_class raises
/// InsufficientDataError.
StatusModel train_status_model(std::span<const FeatureVector> features, std::span<const Status> labels,
                               const TrainOptions& options);

struct StatusPrediction {
  Status label = Status::Student;
  double confidence = 0.0;
};

StatusPrediction predict_status(const StatusModel& model, const FeatureVector& features);

void write_model_json(std::ostream& out, const StatusModel& model);
StatusModel read_model_json(std::istream& in);

/// person_id,label,confidence
void write_predictions_csv(std::ostream& out, const std::map<std::string, StatusPrediction>& predictions);

/// Trains on labeled persons in `demographics` and predicts everyone whose
/// status is missing.
struct InferResult {
  StatusModel model;
  std::map<std::string, StatusPrediction> predictions;
};
InferResult infer_missing_status(const TransactionLog& log, const Demographics& demographics,
                                 const TrainOptions& options);

}  // namespace mimicry
