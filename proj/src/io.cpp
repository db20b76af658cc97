#include "blab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace blab::io {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      // final line without terminator
      lines.push_back(text.substr(start));
      return lines;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> split_tokens(const std::string& line, char sep) {
  std::vector<std::string> tokens;
  size_t start = 0;
  while (true) {
    size_t end = line.find(sep, start);
    if (end == std::string::npos) {
      tokens.push_back(line.substr(start));
      return tokens;
    }
    tokens.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

int64_t parse_int(const std::string& token, int line) {
  int64_t value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    fail(Errc::ParseError, "expected integer, got '" + token + "'", line);
  return value;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) fail(Errc::InvalidArgument, "double formatting failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& token, int line) {
  double value = 0.0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    fail(Errc::ParseError, "expected number, got '" + token + "'", line);
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::InvalidArgument, "cannot write " + path);
  out << content;
  if (!out) fail(Errc::InvalidArgument, "write failed for " + path);
}

std::string triangulation_to_text(const Triangulation& t) {
  const RotationSystem& m = t.map();
  std::string out = "tri " + std::to_string(t.n()) + " " + map_class_name(t.map_class()) + "\n";
  for (int32_t d = 0; d < m.dart_count(); ++d) {
    out += std::to_string(d);
    out += ' ';
    out += std::to_string(m.twin(d));
    out += ' ';
    out += std::to_string(m.next(d));
    out += ' ';
    out += std::to_string(m.origin(d));
    out += '\n';
  }
  return out;
}

Triangulation triangulation_from_text(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "empty triangulation file", 1);
  if (!text.empty() && text.back() != '\n')
    fail(Errc::ParseError, "missing final newline", static_cast<int>(lines.size()));

  const auto header = split_tokens(lines[0], ' ');
  if (header.size() != 3 || header[0] != "tri")
    fail(Errc::ParseError, "expected header 'tri <n> <class>'", 1);
  const int64_t n = parse_int(header[1], 1);
  if (std::to_string(n) != header[1] || n < 3)
    fail(Errc::ParseError, "bad vertex count '" + header[1] + "'", 1);
  const MapClass cls = [&] {
    if (header[2] == "simple") return MapClass::Simple;
    if (header[2] == "general") return MapClass::General;
    fail(Errc::ParseError, "unknown class '" + header[2] + "'", 1);
  }();

  const int64_t darts = 6 * (n - 2);
  if (static_cast<int64_t>(lines.size()) != darts + 1)
    fail(Errc::ParseError,
         "expected " + std::to_string(darts) + " dart lines, found " +
             std::to_string(lines.size() - 1),
         static_cast<int>(lines.size()));

  std::vector<int32_t> twin(darts), next(darts), origin(darts);
  for (int64_t d = 0; d < darts; ++d) {
    const int line_no = static_cast<int>(d + 2);
    const auto tok = split_tokens(lines[d + 1], ' ');
    if (tok.size() != 4)
      fail(Errc::ParseError, "expected '<id> <twin> <next> <origin>'", line_no);
    int64_t vals[4];
    for (int k = 0; k < 4; ++k) {
      vals[k] = parse_int(tok[k], line_no);
      if (std::to_string(vals[k]) != tok[k])
        fail(Errc::ParseError, "non-canonical integer '" + tok[k] + "'", line_no);
    }
    if (vals[0] != d) fail(Errc::ParseError, "dart ids must be consecutive from 0", line_no);
    if (vals[1] < 0 || vals[1] >= darts || vals[2] < 0 || vals[2] >= darts || vals[3] < 0 ||
        vals[3] >= n)
      fail(Errc::ParseError, "field out of range", line_no);
    twin[d] = static_cast<int32_t>(vals[1]);
    next[d] = static_cast<int32_t>(vals[2]);
    origin[d] = static_cast<int32_t>(vals[3]);
  }
  Triangulation t = build_from_rotation(std::move(twin), std::move(next), std::move(origin), cls);
  if (t.n() != n) fail(Errc::ParseError, "vertex count does not match header", 1);
  return t;
}

void save_triangulation(const Triangulation& t, const std::string& path) {
  write_file(path, triangulation_to_text(t));
}

Triangulation load_triangulation(const std::string& path) {
  return triangulation_from_text(read_file(path));
}

std::string metric_space_to_text(const FiniteMetricSpace& space) {
  std::string out = std::to_string(space.size()) + "\n";
  for (int32_t i = 1; i < space.size(); ++i) {
    for (int32_t j = 0; j < i; ++j) {
      if (j) out += ' ';
      out += format_double(space(i, j));
    }
    out += '\n';
  }
  return out;
}

FiniteMetricSpace metric_space_from_text(const std::string& text) {
  std::istringstream in(text);
  int64_t n = 0;
  if (!(in >> n) || n < 1) fail(Errc::ParseError, "bad point count", 1);
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int64_t i = 1; i < n; ++i) {
    for (int64_t j = 0; j < i; ++j) {
      std::string token;
      if (!(in >> token))
        fail(Errc::ParseError, "missing matrix entry", static_cast<int>(i + 1));
      const double v = parse_double(token, static_cast<int>(i + 1));
      d[static_cast<size_t>(i) * n + j] = v;
      d[static_cast<size_t>(j) * n + i] = v;
    }
  }
  std::string trailing;
  if (in >> trailing) fail(Errc::ParseError, "trailing content '" + trailing + "'");
  FiniteMetricSpace space(static_cast<int32_t>(n), std::move(d));
  // slack covers 1-ulp rounding of stored single-rounded products
  double largest = 0.0;
  for (double v : space.data()) largest = std::max(largest, v);
  space.validate(256, 200000, 0, 1e-12 * (1.0 + largest));
  return space;
}

void save_metric_space(const FiniteMetricSpace& space, const std::string& path) {
  write_file(path, metric_space_to_text(space));
}

FiniteMetricSpace load_metric_space(const std::string& path) {
  return metric_space_from_text(read_file(path));
}

void Manifest::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries.emplace_back(key, value);
}

const std::string& Manifest::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  fail(Errc::InvalidArgument, "manifest key not found: " + key);
}

bool Manifest::has(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

namespace {

void check_manifest_token(const std::string& s, bool allow_space) {
  if (s.empty()) fail(Errc::InvalidArgument, "empty manifest token");
  for (char c : s) {
    if (c == '\n' || (!allow_space && c == ' '))
      fail(Errc::InvalidArgument, "manifest token contains separator: '" + s + "'");
  }
}

}  // namespace

std::string manifest_to_text(const Manifest& m) {
  std::string out = "blab-manifest v1\n";
  for (const auto& [k, v] : m.entries) {
    check_manifest_token(k, false);
    check_manifest_token(v, true);
    out += k;
    out += ' ';
    out += v;
    out += '\n';
  }
  if (!m.record_fields.empty()) {
    out += "@records";
    for (const auto& f : m.record_fields) {
      check_manifest_token(f, false);
      out += ' ';
      out += f;
    }
    out += '\n';
    for (const auto& rec : m.records) {
      if (rec.size() != m.record_fields.size())
        fail(Errc::InvalidArgument, "manifest record width mismatch");
      for (size_t i = 0; i < rec.size(); ++i) {
        check_manifest_token(rec[i], false);
        if (i) out += ' ';
        out += rec[i];
      }
      out += '\n';
    }
  }
  return out;
}

Manifest manifest_from_text(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "blab-manifest v1")
    fail(Errc::VersionMismatch, "expected 'blab-manifest v1' header");
  if (!text.empty() && text.back() != '\n')
    fail(Errc::ParseError, "missing final newline", static_cast<int>(lines.size()));
  Manifest m;
  size_t i = 1;
  for (; i < lines.size(); ++i) {
    if (lines[i].rfind("@records", 0) == 0) break;
    const size_t sep = lines[i].find(' ');
    if (sep == std::string::npos || sep == 0)
      fail(Errc::ParseError, "expected '<key> <value>'", static_cast<int>(i + 1));
    m.entries.emplace_back(lines[i].substr(0, sep), lines[i].substr(sep + 1));
  }
  if (i < lines.size()) {
    auto fields = split_tokens(lines[i], ' ');
    if (fields.size() < 2)
      fail(Errc::ParseError, "@records needs at least one field", static_cast<int>(i + 1));
    m.record_fields.assign(fields.begin() + 1, fields.end());
    for (++i; i < lines.size(); ++i) {
      auto rec = split_tokens(lines[i], ' ');
      if (rec.size() != m.record_fields.size())
        fail(Errc::ParseError, "record width mismatch", static_cast<int>(i + 1));
      m.records.push_back(std::move(rec));
    }
  }
  return m;
}

void save_manifest(const Manifest& m, const std::string& path) {
  write_file(path, manifest_to_text(m));
}

Manifest load_manifest(const std::string& path) { return manifest_from_text(read_file(path)); }

std::string csv_to_text(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
  auto render = [](const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
      for (char c : cells[i])
        if (c == ',' || c == '\n') fail(Errc::InvalidArgument, "csv cell contains separator");
      if (i) line += ',';
      line += cells[i];
    }
    return line + "\n";
  };
  std::string out = render(header);
  for (const auto& row : rows) {
    if (row.size() != header.size()) fail(Errc::InvalidArgument, "csv row width mismatch");
    out += render(row);
  }
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> csv_from_text(
    const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::ParseError, "empty csv", 1);
  auto header = split_tokens(lines[0], ',');
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto row = split_tokens(lines[i], ',');
    if (row.size() != header.size())
      fail(Errc::ParseError, "csv row width mismatch", static_cast<int>(i + 1));
    rows.push_back(std::move(row));
  }
  return {std::move(header), std::move(rows)};
}

void save_csv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  write_file(path, csv_to_text(header, rows));
}

std::string profile_to_csv(const BallGrowthProfile& profile) {
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < profile.radii.size(); ++i)
    rows.push_back({format_double(profile.radii[i]), format_double(profile.mean_volumes[i])});
  return csv_to_text({"radius", "mean_volume"}, rows);
}

BallGrowthProfile profile_from_csv(const std::string& text) {
  const auto [header, rows] = csv_from_text(text);
  if (header != std::vector<std::string>{"radius", "mean_volume"})
    fail(Errc::ParseError, "expected 'radius,mean_volume' header", 1);
  BallGrowthProfile p;
  for (size_t i = 0; i < rows.size(); ++i) {
    p.radii.push_back(parse_double(rows[i][0], static_cast<int>(i + 2)));
    p.mean_volumes.push_back(parse_double(rows[i][1], static_cast<int>(i + 2)));
  }
  return p;
}

}  // namespace blab::io
