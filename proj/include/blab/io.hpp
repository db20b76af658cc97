#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blab/map.hpp"
#include "blab/metric.hpp"

namespace blab::io {

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);
double parse_double(const std::string& token, int line = -1);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Triangulation text format, bit-exact:
///   tri <n> <class>
///   <id> <twin> <next> <origin>     (one line per dart, ids 0-based)
/// The dart count is pinned by n (6(n-2) darts); the reader rejects any
/// deviation from the canonical rendering, with the offending line number.
std::string triangulation_to_text(const Triangulation& t);
Triangulation triangulation_from_text(const std::string& text);
void save_triangulation(const Triangulation& t, const std::string& path);
Triangulation load_triangulation(const std::string& path);

/// Distance matrix format: first line the point count, then the strict
/// lower triangle, one whitespace-separated row per point after the first.
std::string metric_space_to_text(const FiniteMetricSpace& space);
FiniteMetricSpace metric_space_from_text(const std::string& text);
void save_metric_space(const FiniteMetricSpace& space, const std::string& path);
FiniteMetricSpace load_metric_space(const std::string& path);

/// Key/value reproducibility manifest with an optional record table.
/// First line is the version header `blab-manifest v1`; loads of any other
/// version fail with VersionMismatch.
struct Manifest {
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<std::string> record_fields;
  std::vector<std::vector<std::string>> records;

  void set(const std::string& key, const std::string& value);
  const std::string& get(const std::string& key) const;
  bool has(const std::string& key) const;
};

std::string manifest_to_text(const Manifest& m);
Manifest manifest_from_text(const std::string& text);
void save_manifest(const Manifest& m, const std::string& path);
Manifest load_manifest(const std::string& path);

/// Comma-separated tables with a single header row; cells must be free of
/// commas and newlines.
std::string csv_to_text(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows);
std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> csv_from_text(
    const std::string& text);
void save_csv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows);

/// Ball-growth profile as `radius,mean_volume` CSV.
std::string profile_to_csv(const BallGrowthProfile& profile);
BallGrowthProfile profile_from_csv(const std::string& text);

}  // namespace blab::io
