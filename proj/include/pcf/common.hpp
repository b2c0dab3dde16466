#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pcf {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Precondition violated by the caller (bad sizes, out-of-range counts, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or unreadable input data.
class IngestionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gradient descent produced a non-finite loss.
class TrainingDivergedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// mt19937_64 is fully specified by the standard, unlike the std:: distributions,
// so all sampling below goes through these helpers to stay reproducible across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::initializer_list<std::uint64_t> seeds);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n).
  std::size_t index(std::size_t n);
  // Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

void require(bool condition, const std::string& message);

// log(sum(exp(v))) without overflow; -inf for an empty or all -inf input.
double log_sum_exp(const std::vector<double>& values);

}  // namespace pcf
