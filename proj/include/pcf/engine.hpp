#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcf/classifiers.hpp"
#include "pcf/common.hpp"
#include "pcf/dataset.hpp"
#include "pcf/density.hpp"
#include "pcf/pca.hpp"
#include "pcf/solver.hpp"

namespace pcf {

// The query x and the objective live in the original feature space. When `pca`
// is set, the classifier and the density model live in its latent space.
struct CounterfactualRequest {
  Vector x;
  int target = 0;
  // Anchor is replaced by x; only kind, weights and metric are read.
  ObjectiveSpec objective;
  std::optional<DensityThreshold> delta;
  std::optional<AffineMap> pca;
  double margin = kDefaultMargin;
  SolverSettings settings;

  void validate(const Classifier& model) const;
  Vector latent(const Vector& point) const { return pca ? pca->transform(point) : point; }
};

enum class ResultStatus { Found, Infeasible };
std::string to_string(ResultStatus status);

struct SubproblemOutcome {
  int component = -1;  // -1: no density constraint
  int leaf = -1;       // -1: softmax region
  SolveStatus status = SolveStatus::Infeasible;
  double objective_value = 0.0;
  // Solved to optimality and the model predicts the target at the solution.
  bool accepted = false;
  // Skipped without solving because the component's ellipsoid is empty.
  bool skipped = false;
};

struct PlausibilityAudit {
  int predicted = -1;
  bool prediction_ok = false;
  // (z - mu_j)^T Sigma_j^-1 (z - mu_j) + c_j against delta' for the selected j.
  bool density_checked = false;
  bool density_ok = true;
  double quadratic_form = 0.0;
  double delta_prime = 0.0;
  double recomputed_distance = 0.0;
  bool distance_ok = false;
  double approx_log_density = 0.0;
  std::optional<double> kde_log_density;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct CounterfactualResult {
  ResultStatus status = ResultStatus::Infeasible;
  int target = 0;
  Vector point;
  double objective_value = 0.0;
  std::optional<int> component;
  std::string region_provenance;
  int leaf_id = -1;
  // Densities of the target class at the counterfactual, when a model was given.
  std::optional<double> approx_log_density;
  std::optional<double> kde_log_density;
  std::vector<SubproblemOutcome> subproblems;
  std::optional<PlausibilityAudit> audit;

  bool found() const { return status == ResultStatus::Found; }
};

// Closest point the model assigns to the target, with no density constraint.
// gmm / kde are only used to report densities at the result.
CounterfactualResult counterfactual_baseline(const CounterfactualRequest& req, const Classifier& model,
                                             const ClassGmm* gmm = nullptr, const ClassKde* kde = nullptr);

// One program per (component, target region); the smallest optimum wins, ties
// to the lowest (component, leaf). Requires req.delta.
CounterfactualResult counterfactual_plausible(const CounterfactualRequest& req, const Classifier& model,
                                              const ClassGmm& gmm, const ClassKde* kde = nullptr);

// Recomputes prediction, densities and distance at a found result. The
// density check runs when both gmm and a threshold are available.
PlausibilityAudit audit(const CounterfactualResult& result, const CounterfactualRequest& req, const Classifier& model,
                        const ClassGmm* gmm, const ClassKde* kde,
                        const std::optional<DensityThreshold>& delta);

// True iff the model predicts y at x and the `neighbors` training samples
// closest to x (under `metric`, anchored at x) all get their own label.
// Training rows are in the original space; the model sees pca(x) if set.
bool check_local_sufficiency(const Classifier& model, const std::optional<AffineMap>& pca, const Vector& x, int y,
                             const LabeledDataset& train, int neighbors, const ObjectiveSpec& metric);

struct IndependenceOptions {
  int neighbors = 5;
  std::optional<AffineMap> pca;
  ObjectiveSpec objective;
  double margin = kDefaultMargin;
  SolverSettings settings;
};

struct IndependenceEntry {
  std::size_t sample = 0;
  int label = 0;
  int target = 0;
  bool sufficient_a = false;
  bool sufficient_b = false;
  bool evaluated = false;  // both sufficient and both counterfactuals found
  double objective_a = 0.0;
  double objective_b = 0.0;
  double relative_difference = 0.0;  // |a - b| / max(|a|, |b|, 1e-12)
};

struct IndependenceReport {
  std::vector<IndependenceEntry> entries;
  std::size_t evaluated = 0;
  double median_relative_difference = 0.0;
  double max_relative_difference = 0.0;
};

// For every sample and every class other than its label, compares the
// plausible counterfactuals of two models. Only reports; never asserts.
IndependenceReport model_independence_experiment(const Classifier& model_a, const Classifier& model_b,
                                                 const LabeledDataset& train, const LabeledDataset& samples,
                                                 const std::vector<ClassGmm>& gmms,
                                                 const std::vector<DensityThreshold>& thresholds,
                                                 const IndependenceOptions& options);

}  // namespace pcf
