#include <cmath>
#include <filesystem>
#include <functional>
#include <vector>

#include "blab/io.hpp"
#include "blab/metric.hpp"
#include "blab/sampler.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace blab;
namespace fs = std::filesystem;

namespace {

int parse_error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) return e.line();
    return -2;
  }
  return -3;
}

}  // namespace

TEST_CASE("triangulation text round-trips byte for byte") {
  const Triangulation t = fixtures::tetrahedron();
  const std::string text = io::triangulation_to_text(t);
  CHECK(text.substr(0, 13) == "tri 4 simple\n");
  const Triangulation back = io::triangulation_from_text(text);
  CHECK(io::triangulation_to_text(back) == text);
  CHECK(are_isomorphic(t, back));

  const Triangulation g = initial_triangulation(5, MapClass::General);
  const std::string gtext = io::triangulation_to_text(g);
  CHECK(io::triangulation_to_text(io::triangulation_from_text(gtext)) == gtext);
}

TEST_CASE("triangulation reader rejects deviations with line numbers") {
  const std::string good = io::triangulation_to_text(fixtures::tetrahedron());

  // missing final newline
  CHECK(parse_error_line([&] {
          io::triangulation_from_text(good.substr(0, good.size() - 1));
        }) == 13);
  // truncated file
  const auto cut = good.find('\n', good.find('\n') + 1);
  CHECK(parse_error_line([&] { io::triangulation_from_text(good.substr(0, cut + 1)); }) == 2);
  // bad header
  CHECK(parse_error_line([] { io::triangulation_from_text("tri x simple\n"); }) == 1);
  CHECK(parse_error_line([] { io::triangulation_from_text("quad 4 simple\n"); }) == 1);
  CHECK(parse_error_line([] { io::triangulation_from_text("tri 4 fancy\n"); }) == 1);
  // doubled space
  std::string spaced = good;
  spaced.replace(spaced.find("\n0 "), 3, "\n0  ");
  CHECK(parse_error_line([&] { io::triangulation_from_text(spaced); }) == 2);
  // non-canonical integer
  std::string padded = good;
  padded.replace(padded.find("\n0 "), 3, "\n00 ");
  CHECK(parse_error_line([&] { io::triangulation_from_text(padded); }) == 2);
  // wrong dart id sequence
  std::string shifted = good;
  shifted.replace(shifted.find("\n1 "), 3, "\n2 ");
  CHECK(parse_error_line([&] { io::triangulation_from_text(shifted); }) == 3);
}

TEST_CASE("triangulation file i/o") {
  const fs::path dir = fs::temp_directory_path() / "blab_io_test";
  fs::create_directories(dir);
  const std::string path = (dir / "t.tri").string();
  io::save_triangulation(fixtures::octahedron(), path);
  const Triangulation back = io::load_triangulation(path);
  CHECK(back.n() == 6);
  CHECK(io::read_file(path) == io::triangulation_to_text(back));
  fs::remove_all(dir);
}

TEST_CASE("metric space matrix round-trips and validates") {
  const FiniteMetricSpace space = rescaled_space(fixtures::octahedron());
  const std::string text = io::metric_space_to_text(space);
  const FiniteMetricSpace back = io::metric_space_from_text(text);
  CHECK(back.size() == 6);
  CHECK(io::metric_space_to_text(back) == text);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(back(i, j) == space(i, j));
}

TEST_CASE("matrix reader rejects malformed input") {
  CHECK_THROWS_AS(io::metric_space_from_text("0\n"), Error);
  CHECK_THROWS_AS(io::metric_space_from_text("3\n1.0\n"), Error);          // missing row
  CHECK_THROWS_AS(io::metric_space_from_text("2\n1.0 extra\n"), Error);    // trailing token
  CHECK_THROWS_AS(io::metric_space_from_text("2\nbogus\n"), Error);        // not a number
  CHECK_THROWS_AS(io::metric_space_from_text("2\n-1.0\n"), Error);         // negative distance
}

TEST_CASE("manifest round-trip and version gate") {
  io::Manifest m;
  m.set("command", "sample");
  m.set("n", "6");
  m.set("note", "two words");
  m.record_fields = {"index", "file"};
  m.records.push_back({"0", "sample_00000.tri"});
  m.records.push_back({"1", "sample_00001.tri"});
  const std::string text = io::manifest_to_text(m);
  const io::Manifest back = io::manifest_from_text(text);
  CHECK(io::manifest_to_text(back) == text);
  CHECK(back.get("note") == "two words");
  REQUIRE(back.records.size() == 2);

  std::string wrong = text;
  wrong.replace(wrong.find("v1"), 2, "v2");
  try {
    io::manifest_from_text(wrong);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::VersionMismatch);
  }
}

TEST_CASE("csv round-trip") {
  const std::vector<std::string> header{"n", "observable", "median", "iqr", "ks_to_next"};
  const std::vector<std::vector<std::string>> rows{{"64", "rescaled_diameter", "1.5", "0.2", "0.1"},
                                                   {"128", "rescaled_diameter", "1.4", "0.1", ""}};
  const std::string text = io::csv_to_text(header, rows);
  const auto [h, r] = io::csv_from_text(text);
  CHECK(h == header);
  CHECK(r == rows);
  CHECK(io::csv_to_text(h, r) == text);
}

TEST_CASE("profile csv round-trip") {
  BallGrowthProfile p;
  p.radii = {0, 1, 2};
  p.mean_volumes = {1, 4.25, 9.5};
  const std::string text = io::profile_to_csv(p);
  const BallGrowthProfile back = io::profile_from_csv(text);
  CHECK(back.radii == p.radii);
  CHECK(back.mean_volumes == p.mean_volumes);
  CHECK(io::profile_to_csv(back) == text);
}

TEST_CASE("format_double is shortest-round-trip stable") {
  for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 4 * std::atan(1.0), 1e-300, 12345.6789}) {
    const std::string s = io::format_double(v);
    CHECK(io::parse_double(s) == v);
  }
  CHECK(io::format_double(0.0) == "0");
}
