#pragma once

#include <string>
#include <vector>

#include "stcount/common.hpp"
#include "stcount/dates.hpp"

namespace stcount {

// K regions x N consecutive days of non-negative counts. Region order is
// fixed at load time and shared with any adjacency/covariate used with it.
struct CountPanel {
  std::vector<std::string> regions;  // length K
  Date start_date;                   // dates are start_date + t, t = 0..N-1
  CountMatrix values;                // K x N

  int n_regions() const { return static_cast<int>(values.rows()); }
  int n_days() const { return static_cast<int>(values.cols()); }
  Date date(int t) const { return start_date + t; }
  // Throws DataError if the invariants do not hold.
  void validate() const;
  // Columns [t0, t1); region set unchanged.
  CountPanel slice_days(int t0, int t1) const;
  MatrixXd values_real() const { return values.cast<double>(); }
};

// Symmetric 0/1 neighbourhood matrix with zero diagonal.
struct Adjacency {
  std::vector<std::string> regions;
  MatrixXd w;  // K x K

  int n_regions() const { return static_cast<int>(w.rows()); }
  void validate() const;
  std::vector<int> neighbors(int k) const;
  int degree(int k) const;
};

// Normalised weight matrix: entry (q,k) = w_qk / sum_q w_qk, so the incoming
// weights of every non-isolated region sum to one. For symmetric W this also
// makes every nonzero row sum to one. All-zero rows stay zero.
MatrixXd row_normalize(const Adjacency& adj);

// K x N real covariate surface. Entries before the first valid day (set by
// the lag and any smoothing applied at construction) are NaN and excluded
// from fitting windows. `values` may carry extra columns beyond the panel
// length: a lag of L makes the source observable L days into the future,
// which is what caps forecast horizons.
struct CovariatePanel {
  std::string name;
  int lag = 0;
  Date start_date;    // day axis shared with the panel it accompanies
  MatrixXd values;    // K x (N + lag); column t aligns with panel day t
  int n_panel_days = 0;

  int n_regions() const { return static_cast<int>(values.rows()); }
  int n_total_days() const { return static_cast<int>(values.cols()); }
  bool defined_at(int t) const;                 // all regions defined at day t
  int first_defined_day() const;                // smallest t with defined_at(t)
  int last_defined_day() const;                 // largest t with defined_at(t)
  double at(int k, int t) const { return values(k, t); }

  // Builds a lagged (and optionally trailing-mean smoothed) covariate from a
  // source surface observed on the same day axis as the panel.
  static CovariatePanel from_source(const std::string& name, const MatrixXd& source,
                                    int lag, int smooth_window = 1);
};

// Population offsets: e_k = p_k / sum_q p_q.
struct OffsetSpec {
  VectorXd populations;  // p_k > 0
  VectorXd fractions;    // e_k, sums to 1
};

OffsetSpec population_fractions(const VectorXd& populations);

}  // namespace stcount
