#pragma once

#include "pcf/common.hpp"
#include "pcf/constraints.hpp"
#include "pcf/dataset.hpp"

namespace pcf {

// z = W ((x - center) ./ scale). Rows of W are orthonormal; `scale` is all
// ones unless the map was fit on z-scored features.
struct AffineMap {
  Matrix projection;      // k x d
  Vector center;          // d
  Vector scale;           // d
  Matrix reconstruction;  // d x k, right inverse of the effective linear part

  int input_dim() const { return static_cast<int>(projection.cols()); }
  int latent_dim() const { return static_cast<int>(projection.rows()); }

  // Effective linear part A = W diag(1/scale), so z = A (x - center).
  Matrix linear_part() const;
  Vector transform(const Vector& x) const;
  Matrix transform_rows(const Matrix& rows) const;
  Vector inverse(const Vector& z) const;

  static AffineMap identity(int d);
};

struct EigenDecomposition {
  Vector values;   // descending
  Matrix vectors;  // columns, matched to values
  int sweeps = 0;
  bool converged = false;
};

// Cyclic Jacobi rotations on a symmetric matrix. Stops once the off-diagonal
// Frobenius norm drops below `tolerance` or after `max_sweeps` sweeps. The
// result is sorted by descending eigenvalue (stable) and each eigenvector is
// sign-fixed so its largest-magnitude entry is positive.
EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tolerance = 1e-10, int max_sweeps = 100);

// Top-`components` principal axes of the sample covariance.
AffineMap fit_pca(const LabeledDataset& ds, int components, bool standardize = false);
AffineMap fit_pca(const Matrix& points, int components, bool standardize = false);

// Rewrites latent-space constraints as constraints on the original input.
LinearInequality compose(const AffineMap& map, const LinearInequality& latent);
QuadraticInequality compose(const AffineMap& map, const QuadraticInequality& latent);
LinearRegion compose(const AffineMap& map, const LinearRegion& latent);
FeasibleRegion pca_compose_constraints(const AffineMap& map, const FeasibleRegion& latent);

}  // namespace pcf
