#include "stcount/types.hpp"

namespace stcount {

void CountPanel::validate() const {
  const int k = n_regions();
  const int n = n_days();
  if (k < 1 || n < 2) throw DataError("count panel needs K >= 1 regions and N >= 2 days");
  if (static_cast<int>(regions.size()) != k)
    throw DataError("region list does not match value matrix rows");
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < n; ++t)
      if (values(i, t) < 0) throw DataError("negative count at region " + regions[i] +
                                            ", date " + date(t).to_string());
}

CountPanel CountPanel::slice_days(int t0, int t1) const {
  if (t0 < 0 || t1 > n_days() || t0 >= t1) throw DataError("invalid day slice");
  CountPanel out;
  out.regions = regions;
  out.start_date = start_date + t0;
  out.values = values.middleCols(t0, t1 - t0);
  return out;
}

void Adjacency::validate() const {
  const int k = n_regions();
  if (k < 1 || w.cols() != k) throw DataError("adjacency matrix must be square");
  if (static_cast<int>(regions.size()) != k)
    throw DataError("adjacency region list does not match matrix size");
  for (int i = 0; i < k; ++i) {
    if (w(i, i) != 0.0)
      throw DataError("adjacency diagonal must be zero (region " + regions[i] + ")");
    for (int j = 0; j < k; ++j) {
      if (w(i, j) != 0.0 && w(i, j) != 1.0)
        throw DataError("adjacency entries must be 0 or 1");
      if (w(i, j) != w(j, i))
        throw DataError("asymmetric adjacency between " + regions[i] + " and " + regions[j]);
    }
  }
}

std::vector<int> Adjacency::neighbors(int k) const {
  std::vector<int> out;
  for (int j = 0; j < n_regions(); ++j)
    if (w(k, j) == 1.0) out.push_back(j);
  return out;
}

int Adjacency::degree(int k) const { return static_cast<int>(w.row(k).sum()); }

MatrixXd row_normalize(const Adjacency& adj) {
  const int k = adj.n_regions();
  MatrixXd out = MatrixXd::Zero(k, k);
  for (int row = 0; row < k; ++row) {
    const double d = adj.w.row(row).sum();
    if (d > 0.0) out.row(row) = adj.w.row(row) / d;
  }
  return out;
}

bool CovariatePanel::defined_at(int t) const {
  if (t < 0 || t >= n_total_days()) return false;
  for (int k = 0; k < n_regions(); ++k)
    if (is_missing(values(k, t))) return false;
  return true;
}

int CovariatePanel::first_defined_day() const {
  for (int t = 0; t < n_total_days(); ++t)
    if (defined_at(t)) return t;
  return n_total_days();
}

int CovariatePanel::last_defined_day() const {
  for (int t = n_total_days() - 1; t >= 0; --t)
    if (defined_at(t)) return t;
  return -1;
}

CovariatePanel CovariatePanel::from_source(const std::string& name, const MatrixXd& source,
                                           int lag, int smooth_window) {
  if (lag < 0) throw DataError("covariate lag must be >= 0");
  if (smooth_window < 1) throw DataError("smoothing window must be >= 1");
  const int k = static_cast<int>(source.rows());
  const int n = static_cast<int>(source.cols());
  if (smooth_window > n) throw DataError("smoothing window exceeds series length");

  MatrixXd smoothed(k, n);
  for (int i = 0; i < k; ++i) {
    for (int t = 0; t < n; ++t) {
      if (t < smooth_window - 1) {
        smoothed(i, t) = kNaN;
      } else {
        smoothed(i, t) = source.row(i).segment(t - smooth_window + 1, smooth_window).mean();
      }
    }
  }

  CovariatePanel out;
  out.name = name;
  out.lag = lag;
  out.n_panel_days = n;
  out.values = MatrixXd::Constant(k, n + lag, kNaN);
  for (int t = lag; t < n + lag; ++t) out.values.col(t) = smoothed.col(t - lag);
  return out;
}

OffsetSpec population_fractions(const VectorXd& populations) {
  if (populations.size() < 1) throw DataError("need at least one population");
  for (int i = 0; i < populations.size(); ++i)
    if (!(populations(i) > 0.0)) throw DataError("non-positive population");
  OffsetSpec out;
  out.populations = populations;
  out.fractions = populations / populations.sum();
  return out;
}

}  // namespace stcount
