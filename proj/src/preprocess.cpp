#include "stcount/preprocess.hpp"

#include <algorithm>
#include <cmath>

namespace stcount {

VectorXd trailing_mean(const VectorXd& series, int window) {
  const int n = static_cast<int>(series.size());
  if (window <= 0) throw DataError("smoothing window must be positive");
  if (window > n) throw DataError("smoothing window exceeds series length");
  VectorXd out = VectorXd::Constant(n, kNaN);
  double running = 0.0;
  for (int t = 0; t < n; ++t) {
    running += series(t);
    if (t >= window) running -= series(t - window);
    if (t >= window - 1) out(t) = running / window;
  }
  return out;
}

namespace {

double pearson(const double* a, const double* b, int n, bool& defined) {
  double ma = 0.0, mb = 0.0;
  for (int i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (int i = 0; i < n; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa <= 0.0 || sbb <= 0.0) {
    defined = false;
    return kNaN;
  }
  defined = true;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

Correlogram cross_correlogram(const VectorXd& x, const VectorXd& y, int max_lag) {
  const int n = static_cast<int>(x.size());
  if (y.size() != n) throw DataError("cross-correlogram series must have equal length");
  if (max_lag < 0) throw DataError("max_lag must be non-negative");
  if (n < max_lag + 3) throw DataError("series too short for requested max_lag");

  Correlogram cg;
  cg.lags.resize(max_lag + 1);
  cg.correlations.resize(max_lag + 1);
  for (int d = 0; d <= max_lag; ++d) {
    cg.lags[d] = d;
    // overlap: pairs (x[t-d], y[t]) for t = d..n-1
    const int m = n - d;
    bool defined = false;
    cg.correlations[d] = pearson(x.data(), y.data() + d, m, defined);
  }

  // Local maxima over the defined lags; endpoints qualify against their
  // single neighbour.
  std::vector<int> peaks;
  auto defined_at = [&](int d) { return !is_missing(cg.correlations[d]); };
  for (int d = 0; d <= max_lag; ++d) {
    if (!defined_at(d)) continue;
    const bool left_ok = d == 0 || !defined_at(d - 1) ||
                         cg.correlations[d] > cg.correlations[d - 1];
    const bool right_ok = d == max_lag || !defined_at(d + 1) ||
                          cg.correlations[d] > cg.correlations[d + 1];
    if (left_ok && right_ok) peaks.push_back(d);
  }
  std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
    return cg.correlations[a] > cg.correlations[b];
  });
  cg.peak_lags = std::move(peaks);
  return cg;
}

MatrixXd incidence(const CountPanel& panel, const VectorXd& populations, double per) {
  if (populations.size() != panel.n_regions())
    throw DataError("population vector does not match panel regions");
  for (int k = 0; k < populations.size(); ++k)
    if (!(populations(k) > 0.0)) throw DataError("non-positive population");
  MatrixXd out(panel.n_regions(), panel.n_days());
  for (int k = 0; k < panel.n_regions(); ++k)
    out.row(k) = per * panel.values.row(k).cast<double>() / populations(k);
  return out;
}

std::vector<MeanVariancePair> mean_variance_pairs(const CountPanel& panel) {
  const int K = panel.n_regions();
  if (K < 2) throw DataError("mean-variance diagnostic needs at least two regions");
  std::vector<MeanVariancePair> out;
  out.reserve(panel.n_days());
  for (int t = 0; t < panel.n_days(); ++t) {
    double m = 0.0;
    for (int k = 0; k < K; ++k) m += static_cast<double>(panel.values(k, t));
    m /= K;
    double ss = 0.0;
    for (int k = 0; k < K; ++k) {
      const double d = static_cast<double>(panel.values(k, t)) - m;
      ss += d * d;
    }
    const double v = ss / (K - 1);
    out.push_back({m, v, m > 0.0 && v > 0.0});
  }
  return out;
}

}  // namespace stcount
