#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcf/common.hpp"

namespace pcf {

// n x d feature matrix with contiguous class ids 0..K-1.
struct LabeledDataset {
  Matrix features;
  std::vector<int> labels;
  std::vector<std::string> feature_names;
  // label_values[k] is the raw value that was re-encoded to class k.
  std::vector<double> label_values;

  std::size_t size() const { return labels.size(); }
  int dim() const { return static_cast<int>(features.cols()); }
  int num_classes() const { return static_cast<int>(label_values.size()); }

  Vector row(std::size_t i) const { return features.row(static_cast<Eigen::Index>(i)).transpose(); }
  LabeledDataset subset(std::span<const std::size_t> indices) const;
  // Rows of the given class, in dataset order.
  Matrix class_points(int class_id) const;

  // Throws ArgumentError if any invariant is broken.
  void validate() const;
};

// Reads a comma-separated numeric table with a header row. The label column
// is re-encoded to 0..K-1 in ascending order of its raw values.
LabeledDataset load_csv(const std::filesystem::path& path, std::string_view label_column);

// Builds a dataset from raw label values (re-encoded like load_csv).
LabeledDataset make_dataset(Matrix features, const std::vector<double>& raw_labels,
                            std::vector<std::string> feature_names = {});

// Regression target -> {0, 1}: label 1 iff the raw value >= threshold.
LabeledDataset binarize_labels(const LabeledDataset& ds, double threshold);

struct FoldPlan {
  int k = 0;
  std::vector<int> assignments;
  bool stratified = false;

  std::vector<std::size_t> test_indices(int fold) const;
  std::vector<std::size_t> train_indices(int fold) const;
  std::vector<std::size_t> fold_sizes() const;
};

// Seeded k-fold assignment. Stratified by class when every class has at least
// k members; otherwise falls back to a plain shuffle and clears `stratified`.
FoldPlan kfold_split(const LabeledDataset& ds, int k, std::uint64_t seed);

// Unlabeled variant used for inner cross validation on a single class.
FoldPlan kfold_split(std::size_t n, int k, std::uint64_t seed);

}  // namespace pcf
