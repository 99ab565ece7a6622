#pragma once

#include <vector>

#include "stcount/types.hpp"

namespace stcount {

// Trailing mean over the last `window` values; the first window-1 entries
// are NaN. Uses only past values so downstream forecasts never see the
// future through a smoothed covariate.
VectorXd trailing_mean(const VectorXd& series, int window);

struct Correlogram {
  std::vector<int> lags;              // 0..max_lag
  std::vector<double> correlations;   // Pearson; NaN where undefined
  std::vector<int> peak_lags;         // local maxima, descending correlation
};

// Pearson correlation of x shifted forward by each lag d against y, over the
// overlapping window: corr[d] = cor(x[t-d], y[t]). Lags with a zero-variance
// overlap are flagged NaN.
Correlogram cross_correlogram(const VectorXd& x, const VectorXd& y, int max_lag);

// Counts per `per` inhabitants: out(k,t) = per * y(k,t) / population(k).
MatrixXd incidence(const CountPanel& panel, const VectorXd& populations,
                   double per = 100000.0);

struct MeanVariancePair {
  double mean;
  double variance;
  bool positive;  // both entries positive, usable on a log-log plot
};

// Cross-region sample mean/variance per day (divisor K-1), the raw material
// of the mean-variance overdispersion diagnostic.
std::vector<MeanVariancePair> mean_variance_pairs(const CountPanel& panel);

}  // namespace stcount
