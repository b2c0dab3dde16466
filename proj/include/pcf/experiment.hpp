#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pcf/classifiers.hpp"
#include "pcf/dataset.hpp"
#include "pcf/density.hpp"
#include "pcf/engine.hpp"
#include "pcf/pca.hpp"
#include "pcf/serialize.hpp"

namespace pcf {

struct ExperimentConfig {
  std::filesystem::path dataset;
  std::string label_column = "label";
  // Row label in the result table; defaults to the dataset file stem.
  std::string dataset_name;
  std::optional<int> pca_components;
  bool pca_standardize = false;
  int cv_folds = 4;
  int hyper_folds = 5;
  // "softmax", "tree" or "both".
  std::string model = "softmax";
  ObjectiveKind objective = ObjectiveKind::WeightedL1;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "out";
  SoftmaxOptions softmax;
  TreeOptions tree;
  double margin = kDefaultMargin;
  std::vector<int> gmm_components{1, 2, 3, 4, 5, 6, 7, 8};
  // KDE bandwidth candidates, as multiples of the class's mean feature std.
  std::vector<double> kde_bandwidth_factors{0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0};
  double delta_quantile = 0.5;
  // Regression targets: label 1 iff value >= threshold.
  std::optional<double> binarize_threshold;
  // Image datasets: rows x cols, pixel multiplier before clamping to [0, 255],
  // and how many test samples per fold get PGM dumps.
  std::optional<std::pair<int, int>> image_shape;
  double image_value_scale = 1.0;
  int image_dumps_per_fold = 5;

  void validate() const;
  std::string name() const;
  std::vector<std::string> models() const;
};

ExperimentConfig config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::filesystem::path& path);

// Loads the dataset and applies the configured binarization.
LabeledDataset load_experiment_data(const ExperimentConfig& config);

// Everything fit on one fold's training rows. The classifier, GMMs and KDEs
// live in the PCA latent space when a map is present.
struct FoldArtifacts {
  int fold = 0;
  std::optional<AffineMap> pca;
  std::vector<Classifier> models;  // aligned with config.models()
  std::vector<ClassGmm> gmms;
  std::vector<DensityThreshold> thresholds;
  std::vector<ClassKde> kdes;
};

FoldArtifacts fit_fold(const LabeledDataset& data, const FoldPlan& plan, int fold, const ExperimentConfig& config);

struct SampleRecord {
  int fold = 0;
  std::size_t index = 0;
  int label = 0;
  int target = 0;
  Vector x;
  CounterfactualResult baseline;
  CounterfactualResult plausible;
  double baseline_distance = 0.0;   // Manhattan, original space
  double plausible_distance = 0.0;
  bool included = false;            // both found and both audits passed
};

struct ResultRow {
  std::string model;
  std::string dataset;
  double median_log_density_without = 0.0;
  double median_distance_without = 0.0;
  double median_log_density_with = 0.0;
  double median_distance_with = 0.0;
  std::size_t n_explained = 0;
  std::size_t n_infeasible = 0;
  std::size_t n_audit_failed = 0;
};

struct FoldSummary {
  int fold = 0;
  ResultRow row;
};

struct ModelReport {
  ResultRow pooled;
  std::vector<FoldSummary> folds;
  std::vector<SampleRecord> samples;
};

struct ExperimentReport {
  std::vector<ModelReport> models;
};

// Random target != label drawn from (seed, fold, sample index).
int draw_target(std::uint64_t seed, int fold, std::size_t index, int label, int num_classes);

ExperimentReport run_experiment(const ExperimentConfig& config);

inline constexpr const char* kResultCsvHeader =
    "model,dataset,median_log_density_without,median_distance_without,median_log_density_with,"
    "median_distance_with,n_explained,n_infeasible,n_audit_failed";
std::string result_csv(const std::vector<ResultRow>& rows);
Json to_json(const ExperimentReport& report);

// Writes results_<dataset>_seed<seed>.{csv,json} (and PGM dumps for image
// datasets) under config.output_dir. Returns the CSV path.
std::filesystem::path write_experiment(const ExperimentConfig& config, const ExperimentReport& report);

// Per-fold artifacts: fold<f>_seed<s>_model_<type>.json,
// fold<f>_seed<s>_gmm_class<c>.json, fold<f>_seed<s>_kde_class<c>.json and a
// folds_seed<s>.json with the fold plan. Returns the written paths.
std::vector<std::filesystem::path> write_fit_artifacts(const ExperimentConfig& config);

// Binary 8-bit PGM; values are rounded and clamped to [0, 255].
void write_pgm(const std::filesystem::path& path, const Vector& pixels, int rows, int cols, double scale = 1.0);

}  // namespace pcf
