#pragma once

#include <string>

#include "stcount/types.hpp"

namespace stcount {

// Long-format CSV `region_id,date,value` with ISO-8601 dates. Every
// (region, date) cell must be present exactly once; dates must be
// consecutive. Region order is first-appearance order.
CountPanel load_count_panel(const std::string& path);
void write_count_panel(const CountPanel& panel, const std::string& path);

// Square CSV: first row and first column are region ids, body is 0/1.
Adjacency load_adjacency(const std::string& path);
void write_adjacency(const Adjacency& adj, const std::string& path);

// Long-format CSV like counts but with real values; lag/smoothing are
// applied after loading.
CovariatePanel load_covariate_panel(const std::string& path, int lag = 0,
                                    int smooth_window = 1);
void write_covariate_source(const std::string& name, const MatrixXd& source,
                            const std::vector<std::string>& regions, Date start,
                            const std::string& path);

// CSV `region_id,population`, one row per region, order must match `regions`.
VectorXd load_populations(const std::string& path, const std::vector<std::string>& regions);

}  // namespace stcount
