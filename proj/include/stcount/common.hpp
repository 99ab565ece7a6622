#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace stcount {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Input data or model-state violation. CLI maps it to exit code 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad usage or configuration. CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Optimizer failed to converge; carries the best iterate seen.
class FitError : public std::runtime_error {
 public:
  FitError(const std::string& msg, VectorXd best_x, double best_value)
      : std::runtime_error(msg), best_iterate(std::move(best_x)), best_value(best_value) {}
  VectorXd best_iterate;
  double best_value;
};

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double x) { return std::isnan(x); }

// Type-7 sample quantile (linear interpolation), the convention used by
// the summary tables. `xs` need not be sorted.
double quantile(std::vector<double> xs, double p);

double sample_mean(const std::vector<double>& xs);
double sample_variance(const std::vector<double>& xs);  // divisor n-1

}  // namespace stcount
