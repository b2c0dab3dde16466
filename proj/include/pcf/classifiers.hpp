#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pcf/common.hpp"
#include "pcf/constraints.hpp"
#include "pcf/dataset.hpp"

namespace pcf {

inline constexpr double kDefaultMargin = 1e-4;

// Multinomial logistic regression: scores = W x + b, prediction = argmax
// (lowest class id on ties).
struct SoftmaxModel {
  Matrix weights;  // K x d
  Vector biases;   // K

  int num_classes() const { return static_cast<int>(biases.size()); }
  int dim() const { return static_cast<int>(weights.cols()); }
  Vector scores(const Vector& x) const { return weights * x + biases; }
  int predict(const Vector& x) const;
};

struct SoftmaxOptions {
  double lr = 0.1;
  int epochs = 2000;
  double l2 = 1e-4;
  // Gradient descent runs on z-scored features; the learned weights are mapped
  // back so the model acts on raw inputs.
  bool standardize = true;
};

struct SoftmaxFit {
  SoftmaxModel model;
  double final_loss = 0.0;
};

// Mean cross-entropy + l2 * ||W||^2 / 2 and its gradient.
struct SoftmaxLoss {
  double loss = 0.0;
  Matrix grad_weights;
  Vector grad_biases;
};
SoftmaxLoss softmax_loss(const Matrix& weights, const Vector& biases, const Matrix& X,
                         const std::vector<int>& labels, double l2);

SoftmaxFit fit_softmax(const LabeledDataset& ds, const SoftmaxOptions& options = {});

// K-1 halfspaces (w_i - w_c)^T x <= (b_c - b_i) - margin, one per i != target.
LinearRegion softmax_target_region(const SoftmaxModel& model, int target, double margin = kDefaultMargin);

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;     // x[feature] <= threshold
  int right = -1;    // x[feature] > threshold
  int label = 0;

  bool is_leaf() const { return feature < 0; }
};

// Nodes are stored in preorder; node 0 is the root and a leaf's id is its index.
struct TreeModel {
  std::vector<TreeNode> nodes;
  int num_classes = 0;
  int dim = 0;

  int leaf_of(const Vector& x) const;
  int predict(const Vector& x) const { return nodes[static_cast<std::size_t>(leaf_of(x))].label; }
  int num_leaves() const;
  int depth() const;
  void validate() const;
};

struct TreeOptions {
  int max_depth = 5;
  int min_leaf = 1;
};

// Greedy CART on Gini impurity with thresholds at midpoints of adjacent sorted
// distinct values.
TreeModel fit_tree(const LabeledDataset& ds, const TreeOptions& options = {});

// One axis-aligned box per leaf labelled `target`; the strict side of each split
// is tightened by `margin`.
std::vector<LinearRegion> tree_target_regions(const TreeModel& model, int target, double margin = kDefaultMargin);

// Leaf box of every leaf with no margin (used to check the path partition).
LinearRegion tree_leaf_region(const TreeModel& model, int leaf_id, double margin = 0.0);

using Classifier = std::variant<SoftmaxModel, TreeModel>;

int predict(const Classifier& model, const Vector& x);
int num_classes(const Classifier& model);
int input_dim(const Classifier& model);
std::string model_name(const Classifier& model);
// Target-class feasible set as a disjunction of linear regions.
std::vector<LinearRegion> target_regions(const Classifier& model, int target, double margin = kDefaultMargin);

}  // namespace pcf
