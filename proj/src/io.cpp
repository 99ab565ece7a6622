#include "stcount/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace stcount {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw DataError("empty file: " + path);
  return rows;
}

double parse_real(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError("cannot parse number '" + s + "' in " + context);
  }
}

struct LongRecord {
  int region;
  std::int64_t day;
  double value;
};

// Shared reader for `region_id,date,value` long-format files. Returns the
// dense matrix (region order = first appearance), start date, and region ids.
void read_long_format(const std::string& path, std::vector<std::string>& regions,
                      Date& start, MatrixXd& dense) {
  auto rows = read_csv(path);
  const auto& header = rows.front();
  if (header.size() != 3 || header[0] != "region_id" || header[1] != "date" ||
      header[2] != "value")
    throw DataError(path + ": expected header region_id,date,value");

  regions.clear();
  std::unordered_map<std::string, int> region_index;
  std::vector<LongRecord> records;
  std::int64_t min_day = 0, max_day = 0;
  bool first = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 3) throw DataError(path + ": malformed row " + std::to_string(i + 1));
    auto it = region_index.find(r[0]);
    int k;
    if (it == region_index.end()) {
      k = static_cast<int>(regions.size());
      region_index.emplace(r[0], k);
      regions.push_back(r[0]);
    } else {
      k = it->second;
    }
    const std::int64_t day = Date::parse(r[1]).serial();
    const double v = parse_real(r[2], path + " row " + std::to_string(i + 1));
    records.push_back({k, day, v});
    if (first) {
      min_day = max_day = day;
      first = false;
    } else {
      min_day = std::min(min_day, day);
      max_day = std::max(max_day, day);
    }
  }
  if (records.empty()) throw DataError(path + ": no data rows");

  const int K = static_cast<int>(regions.size());
  const auto N = max_day - min_day + 1;
  start = Date(min_day);
  dense = MatrixXd::Constant(K, static_cast<int>(N), kNaN);
  for (const auto& rec : records) {
    const int t = static_cast<int>(rec.day - min_day);
    if (!is_missing(dense(rec.region, t)))
      throw DataError(path + ": duplicate row for region " + regions[rec.region] +
                      ", date " + Date(rec.day).to_string());
    dense(rec.region, t) = rec.value;
  }
  // A fully absent date column means the date range has a gap; a partially
  // absent one means a missing cell. Both are load errors.
  for (int t = 0; t < static_cast<int>(N); ++t) {
    int present = 0;
    for (int k = 0; k < K; ++k)
      if (!is_missing(dense(k, t))) ++present;
    if (present == 0)
      throw DataError(path + ": non-consecutive dates, no rows for " +
                      (start + t).to_string());
    if (present < K)
      for (int k = 0; k < K; ++k)
        if (is_missing(dense(k, t)))
          throw DataError(path + ": missing cell for region " + regions[k] + ", date " +
                          (start + t).to_string());
  }
}

}  // namespace

CountPanel load_count_panel(const std::string& path) {
  std::vector<std::string> regions;
  Date start;
  MatrixXd dense;
  read_long_format(path, regions, start, dense);

  CountPanel panel;
  panel.regions = std::move(regions);
  panel.start_date = start;
  panel.values.resize(dense.rows(), dense.cols());
  for (int k = 0; k < dense.rows(); ++k) {
    for (int t = 0; t < dense.cols(); ++t) {
      const double v = dense(k, t);
      if (v < 0) throw DataError(path + ": negative count for region " + panel.regions[k] +
                                 ", date " + (start + t).to_string());
      const auto iv = static_cast<std::int64_t>(std::llround(v));
      if (static_cast<double>(iv) != v)
        throw DataError(path + ": non-integer count for region " + panel.regions[k]);
      panel.values(k, t) = iv;
    }
  }
  panel.validate();
  return panel;
}

void write_count_panel(const CountPanel& panel, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  out << "region_id,date,value\n";
  for (int k = 0; k < panel.n_regions(); ++k)
    for (int t = 0; t < panel.n_days(); ++t)
      out << panel.regions[k] << ',' << panel.date(t).to_string() << ','
          << panel.values(k, t) << '\n';
}

Adjacency load_adjacency(const std::string& path) {
  auto rows = read_csv(path);
  const auto& header = rows.front();
  if (header.size() < 2) throw DataError(path + ": adjacency header too short");
  const int K = static_cast<int>(header.size()) - 1;
  if (static_cast<int>(rows.size()) != K + 1)
    throw DataError(path + ": adjacency matrix must be square");

  Adjacency adj;
  adj.regions.assign(header.begin() + 1, header.end());
  adj.w.resize(K, K);
  for (int i = 0; i < K; ++i) {
    const auto& r = rows[i + 1];
    if (static_cast<int>(r.size()) != K + 1)
      throw DataError(path + ": adjacency row " + std::to_string(i + 2) + " has wrong width");
    if (r[0] != adj.regions[i])
      throw DataError(path + ": row/column region order mismatch at " + r[0]);
    for (int j = 0; j < K; ++j)
      adj.w(i, j) = parse_real(r[j + 1], path);
  }
  adj.validate();
  return adj;
}

void write_adjacency(const Adjacency& adj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  for (const auto& r : adj.regions) out << ',' << r;
  out << '\n';
  for (int i = 0; i < adj.n_regions(); ++i) {
    out << adj.regions[i];
    for (int j = 0; j < adj.n_regions(); ++j) out << ',' << static_cast<int>(adj.w(i, j));
    out << '\n';
  }
}

CovariatePanel load_covariate_panel(const std::string& path, int lag, int smooth_window) {
  std::vector<std::string> regions;
  Date start;
  MatrixXd dense;
  read_long_format(path, regions, start, dense);

  std::string name = path;
  if (auto pos = name.find_last_of('/'); pos != std::string::npos) name = name.substr(pos + 1);
  if (auto pos = name.find_last_of('.'); pos != std::string::npos) name = name.substr(0, pos);

  CovariatePanel cov = CovariatePanel::from_source(name, dense, lag, smooth_window);
  cov.start_date = start;
  return cov;
}

void write_covariate_source(const std::string& /*name*/, const MatrixXd& source,
                            const std::vector<std::string>& regions, Date start,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  out << "region_id,date,value\n";
  char buf[64];
  for (int k = 0; k < source.rows(); ++k)
    for (int t = 0; t < source.cols(); ++t) {
      std::snprintf(buf, sizeof(buf), "%.10g", source(k, t));
      out << regions[k] << ',' << (start + t).to_string() << ',' << buf << '\n';
    }
}

VectorXd load_populations(const std::string& path, const std::vector<std::string>& regions) {
  auto rows = read_csv(path);
  if (rows.front().size() != 2 || rows.front()[0] != "region_id" ||
      rows.front()[1] != "population")
    throw DataError(path + ": expected header region_id,population");
  std::map<std::string, double> by_region;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw DataError(path + ": malformed row");
    if (!by_region.emplace(rows[i][0], parse_real(rows[i][1], path)).second)
      throw DataError(path + ": duplicate region " + rows[i][0]);
  }
  VectorXd out(static_cast<int>(regions.size()));
  for (std::size_t k = 0; k < regions.size(); ++k) {
    auto it = by_region.find(regions[k]);
    if (it == by_region.end()) throw DataError(path + ": no population for region " + regions[k]);
    out(static_cast<int>(k)) = it->second;
  }
  return out;
}

}  // namespace stcount
