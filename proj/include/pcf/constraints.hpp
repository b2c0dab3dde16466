#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcf/common.hpp"

namespace pcf {

// a^T x <= b
struct LinearInequality {
  Vector a;
  double b = 0.0;

  // Signed violation: positive when the inequality fails.
  double violation(const Vector& x) const { return a.dot(x) - b; }
};

// x^T Q x + q^T x + r <= 0 with Q symmetric PSD.
struct QuadraticInequality {
  Matrix Q;
  Vector q;
  double r = 0.0;

  double violation(const Vector& x) const { return x.dot(Q * x) + q.dot(x) + r; }
  Vector gradient(const Vector& x) const { return 2.0 * (Q * x) + q; }
  int dim() const { return static_cast<int>(q.size()); }
};

// Conjunction of linear inequalities; an empty list is the whole space.
struct LinearRegion {
  std::vector<LinearInequality> inequalities;
  // "softmax-margin" or "leaf:<id>".
  std::string provenance;
  int leaf_id = -1;

  bool contains(const Vector& x, double slack = 0.0) const;
};

// A classifier region plus at most one convex quadratic (density) constraint.
struct FeasibleRegion {
  LinearRegion linear;
  std::optional<QuadraticInequality> quadratic;

  bool contains(const Vector& x, double slack = 0.0) const;
};

}  // namespace pcf
