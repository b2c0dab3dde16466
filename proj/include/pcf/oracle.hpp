#pragma once

#include "pcf/common.hpp"
#include "pcf/solver.hpp"

namespace pcf {

struct OracleResult {
  bool feasible = false;  // false: no feasible grid point at this resolution
  Vector point;
  double value = 0.0;
  double increment = 0.0;  // largest grid spacing over the box axes
};

// Exhaustive scan of a regular grid with `resolution` cells per axis over the
// box [lo, hi] (resolution + 1 points per axis). Only for d <= 3.
OracleResult brute_force_oracle(const ConvexProgram& program, const Vector& lo, const Vector& hi, int resolution);

}  // namespace pcf
