#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcf/common.hpp"
#include "pcf/constraints.hpp"

namespace pcf {

enum class ObjectiveKind { WeightedL1, Mahalanobis };

// Distance to an anchor point: sum_i w_i |x_i - a_i|  or  (x - a)^T M (x - a).
struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::WeightedL1;
  Vector anchor;
  Vector weights;  // WeightedL1 only, strictly positive
  Matrix metric;   // Mahalanobis only, symmetric PSD

  static ObjectiveSpec weighted_l1(Vector anchor, Vector weights = {});
  static ObjectiveSpec mahalanobis(Vector anchor, Matrix metric = {});

  int dim() const { return static_cast<int>(anchor.size()); }
  double evaluate(const Vector& x) const;
  ObjectiveSpec with_anchor(Vector new_anchor) const;
  void validate() const;
};

std::string to_string(ObjectiveKind kind);
ObjectiveKind objective_kind_from_string(const std::string& name);

struct ConvexProgram {
  ObjectiveSpec objective;
  std::vector<LinearInequality> linear;
  std::optional<QuadraticInequality> quadratic;

  int dim() const { return objective.dim(); }
  void validate() const;
  // Largest constraint violation at x (<= 0 when x is feasible).
  double max_violation(const Vector& x) const;
};

// min c^T z  s.t.  linear rows and an optional quadratic over z.
struct LinearObjectiveProgram {
  Vector cost;
  std::vector<LinearInequality> linear;
  std::optional<QuadraticInequality> quadratic;
  int original_dim = 0;
  // Rows [0, carried_rows) are the original linear constraints.
  int carried_rows = 0;
};

// Epigraph lift of a weighted-L1 program: variables z = (x, t) with
// +-(x_i - a_i) <= t_i and objective sum_i w_i t_i.
LinearObjectiveProgram l1_epigraph(const ConvexProgram& program);

enum class SolveStatus { Optimal, Infeasible, MaxIter };
std::string to_string(SolveStatus status);

struct SolverSettings {
  double feasibility_tol = 1e-7;  // phase-1 slack above this => infeasible
  double gap_tol = 1e-8;          // barrier stops once m / tau <= gap_tol
  int max_iter = 200;             // Newton steps per centering problem
  double barrier_growth = 10.0;   // tau <- barrier_growth * tau
  double kkt_tol = 1e-6;
  double regularization = 1e-10;  // added to a singular Newton system
};

struct Solution {
  SolveStatus status = SolveStatus::MaxIter;
  Vector point;
  double objective_value = 0.0;
  // KKT residual of the program actually solved (the epigraph lift for L1).
  double kkt_residual = 0.0;
  int iterations = 0;
  // Multipliers of the original constraints.
  Vector linear_duals;
  double quadratic_dual = 0.0;
  // Phase-1 slack optimum; positive when infeasible.
  double certificate = 0.0;
};

Solution solve(const ConvexProgram& program, const SolverSettings& settings = {});

struct KktReport {
  double primal = 0.0;
  double dual = 0.0;
  double complementarity = 0.0;
  double stationarity = 0.0;

  double residual() const;
};

// KKT residual of the original (unlifted) program. For L1 objectives the
// stationarity term is the distance of -sum(lambda_i grad f_i) to the
// subdifferential of the weighted L1 norm.
KktReport kkt_report(const ConvexProgram& program, const Vector& point, const Vector& linear_duals,
                     double quadratic_dual);
double check_kkt(const ConvexProgram& program, const Vector& point, const Vector& linear_duals,
                 double quadratic_dual);

// Plain-text dump for cross-checking with external solvers.
void dump_program(std::ostream& out, const ConvexProgram& program);

}  // namespace pcf
