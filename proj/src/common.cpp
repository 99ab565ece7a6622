#include "stcount/common.hpp"

#include <algorithm>

namespace stcount {

double quantile(std::vector<double> xs, double p) {
  if (xs.empty()) throw DataError("quantile of empty sample");
  std::sort(xs.begin(), xs.end());
  const double idx = (static_cast<double>(xs.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(idx));
  const auto hi = static_cast<std::size_t>(std::ceil(idx));
  const double h = idx - static_cast<double>(lo);
  return (1.0 - h) * xs[lo] + h * xs[hi];
}

double sample_mean(const std::vector<double>& xs) {
  if (xs.empty()) throw DataError("mean of empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_variance(const std::vector<double>& xs) {
  if (xs.size() < 2) throw DataError("variance needs at least two values");
  const double m = sample_mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

}  // namespace stcount
