#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "pcf/common.hpp"
#include "pcf/constraints.hpp"

namespace pcf {

// One weighted Gaussian pi * N(mu, Sigma) with the quantities the density
// constraint needs cached at construction.
class GaussianComponent {
 public:
  GaussianComponent(double weight, Vector mean, Matrix covariance);

  double weight() const { return weight_; }
  const Vector& mean() const { return mean_; }
  const Matrix& covariance() const { return covariance_; }
  const Matrix& precision() const { return precision_; }
  double log_det_precision() const { return log_det_precision_; }
  // c = -2 log(pi) + d log(2 pi) - log det(Sigma^-1)
  double constraint_constant() const { return constraint_constant_; }
  int dim() const { return static_cast<int>(mean_.size()); }

  // (x - mu)^T Sigma^-1 (x - mu)
  double mahalanobis_sq(const Vector& x) const;
  // log(pi * N(x | mu, Sigma)) = -(mahalanobis_sq + c) / 2
  double log_weighted_density(const Vector& x) const;

 private:
  double weight_;
  Vector mean_;
  Matrix covariance_;
  Matrix precision_;
  double log_det_precision_ = 0.0;
  double constraint_constant_ = 0.0;
};

struct ClassGmm {
  std::vector<GaussianComponent> components;
  int class_id = 0;

  int size() const { return static_cast<int>(components.size()); }
  int dim() const { return components.empty() ? 0 : components.front().dim(); }
  void validate() const;
};

struct ClassKde {
  Matrix samples;  // n x d
  double bandwidth = 1.0;
  Vector weights;  // n, positive, sums to one

  ClassKde() = default;
  ClassKde(Matrix samples, double bandwidth);
  ClassKde(Matrix samples, double bandwidth, Vector weights);
  int dim() const { return static_cast<int>(samples.cols()); }
};

// Density floor delta and its transformed form delta' = -2 log(delta). Stored
// in log form so thresholds far below the smallest double stay exact.
class DensityThreshold {
 public:
  explicit DensityThreshold(double delta);
  static DensityThreshold from_log(double log_delta);

  double delta() const { return std::exp(log_delta_); }
  double delta_prime() const { return -2.0 * log_delta_; }
  double log_delta() const { return log_delta_; }

 private:
  DensityThreshold() = default;
  double log_delta_ = 0.0;
};

struct GmmOptions {
  int max_iter = 200;
  double tol = 1e-6;
  int restarts = 5;
};

struct GmmFit {
  ClassGmm gmm;
  // Mean per-sample log-likelihood of every EM iteration, one trace per restart.
  std::vector<std::vector<double>> traces;
  int best_restart = 0;
  double log_likelihood = 0.0;
  bool degenerate = false;
};

// EM with k-means++ seeded means, global-covariance initialisation and a
// lambda * I covariance floor (lambda = 1e-6 * mean feature variance) added in
// every M-step. Best of `restarts` runs by final log-likelihood.
GmmFit fit_gmm(const Matrix& points, int components, std::uint64_t seed, const GmmOptions& options = {});

// Picks the component count with the best mean held-out log-likelihood
// (ties -> fewer components) and refits on all points.
struct GmmSelection {
  GmmFit fit;
  int components = 1;
  std::vector<double> scores;  // aligned with the grid; -inf when skipped
};
GmmSelection select_gmm(const Matrix& points, const std::vector<int>& component_grid, int folds,
                        std::uint64_t seed, const GmmOptions& options = {});

double gmm_log_density(const ClassGmm& gmm, const Vector& x);

struct ApproxDensity {
  double log_density;
  int component;
};
// Component-wise maximum: max_j log(pi_j N(x | mu_j, Sigma_j)), lowest j on ties.
ApproxDensity approx_log_density(const ClassGmm& gmm, const Vector& x);

// pi N(x | mu, Sigma) >= delta  <=>  x^T Q x + q^T x + r <= 0.
QuadraticInequality component_constraint(const GaussianComponent& comp, const DensityThreshold& threshold);

double kde_log_density(const ClassKde& kde, const Vector& x);

struct KdeSelection {
  ClassKde kde;
  std::vector<double> scores;  // aligned with the grid
};
KdeSelection select_kde(const Matrix& points, const std::vector<double>& bandwidth_grid, int folds,
                        std::uint64_t seed);
ClassKde fit_kde(const Matrix& points, const std::vector<double>& bandwidth_grid, int folds, std::uint64_t seed);

// Quantile (linear interpolation) of exp(approx_log_density) over the points;
// the default 0.5 is the median, averaging the two middle values for even n.
// The interpolation is carried out in log space.
DensityThreshold median_threshold(const ClassGmm& gmm, const Matrix& points, double quantile = 0.5);
double quantile_of(std::vector<double> values, double quantile);

}  // namespace pcf
