#include <algorithm>
#include <cmath>
#include <vector>

#include "blab/gromov_hausdorff.hpp"
#include "blab/metric.hpp"
#include "blab/sampler.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles/grid_torus.hpp"

using namespace blab;

TEST_CASE("tetrahedron hop distances: complete graph") {
  const auto d = hop_distances(fixtures::tetrahedron(), 0);
  CHECK(d == std::vector<int32_t>{0, 1, 1, 1});
}

TEST_CASE("octahedron has exactly one vertex at hop distance 2") {
  const Triangulation oct = fixtures::octahedron();
  for (int v = 0; v < 6; ++v) {
    const auto d = hop_distances(oct, v);
    CHECK(std::count(d.begin(), d.end(), 0) == 1);
    CHECK(std::count(d.begin(), d.end(), 1) == 4);
    CHECK(std::count(d.begin(), d.end(), 2) == 1);
  }
}

TEST_CASE("double fan: pole to pole in one hop, path metric along the fan") {
  const Triangulation fan = double_fan(10);
  const auto d = hop_distances(fan, 0);
  CHECK(d[1] == 1);              // poles adjacent in this construction
  for (int v = 2; v < 10; ++v) CHECK(d[v] == 1);
}

TEST_CASE("rescaled tetrahedron distances equal 4^(-1/4) = 1/sqrt(2)") {
  const FiniteMetricSpace space = rescaled_space(fixtures::tetrahedron());
  const double expected = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(space(i, j) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(std::fabs(diameter(space) - expected) <= 1e-12);
  space.validate();
}

TEST_CASE("rescaled octahedron: antipodal distance 2 * 6^(-1/4)") {
  const FiniteMetricSpace space = rescaled_space(fixtures::octahedron());
  const double unit = std::pow(6.0, -0.25);
  CHECK(diameter(space) == doctest::Approx(2.0 * unit).epsilon(1e-14));
  CHECK(diameter(space) == doctest::Approx(1.27789).epsilon(1e-5));
  space.validate();
}

TEST_CASE("rescaled distance over hop distance is constant n^(-1/4)") {
  const Triangulation t = double_fan(9);
  const FiniteMetricSpace space = rescaled_space(t);
  const double scale = rescale_factor(9);
  for (int src = 0; src < 9; ++src) {
    const auto hops = hop_distances(t, src);
    for (int v = 0; v < 9; ++v)
      CHECK(space(src, v) == hops[v] * scale);
  }
}

TEST_CASE("single point space has diameter zero") {
  const FiniteMetricSpace point(1, {0.0});
  CHECK(diameter(point) == 0.0);
}

TEST_CASE("hop_diameter matches brute-force eccentricities") {
  for (int n = 4; n <= 8; ++n) {
    for (const auto& t : enumerate_classes(n, MapClass::Simple)) {
      const Adjacency adj = build_adjacency(t);
      int brute = 0;
      for (int v = 0; v < n; ++v) {
        const auto d = hop_distances(adj, v);
        brute = std::max(brute, *std::max_element(d.begin(), d.end()));
      }
      CHECK(hop_diameter(adj) == brute);
    }
  }
  EnsembleSpec spec;
  spec.n = 300;
  spec.seed = 2024;
  McmcSampler chain(spec);
  for (int i = 0; i < 3; ++i) {
    const Triangulation t = chain.next();
    const Adjacency adj = build_adjacency(t);
    int brute = 0;
    for (int v = 0; v < t.n(); ++v) {
      const auto d = hop_distances(adj, v);
      brute = std::max(brute, *std::max_element(d.begin(), d.end()));
    }
    CHECK(hop_diameter(adj) == brute);
    CHECK(rescaled_diameter(t) == brute * rescale_factor(t.n()));
  }
}

TEST_CASE("rescaled_diameter equals diameter of the materialised space") {
  EnsembleSpec spec;
  spec.n = 64;
  spec.seed = 7;
  McmcSampler chain(spec);
  const Triangulation t = chain.next();
  CHECK(rescaled_diameter(t) == diameter(rescaled_space(t)));
}

TEST_CASE("two-point distance on the tetrahedron is always 1/sqrt(2)") {
  Rng rng(5);
  const Triangulation t = fixtures::tetrahedron();
  for (int i = 0; i < 50; ++i)
    CHECK(two_point_distance(t, rng) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("two-point distance is deterministic under a fixed seed") {
  const Triangulation t = double_fan(20);
  Rng a(99), b(99);
  for (int i = 0; i < 20; ++i) CHECK(two_point_distance(t, a) == two_point_distance(t, b));
}

TEST_CASE("octahedron two-point mean matches the exact pair census") {
  // 12 adjacent pairs at hop 1 and 3 antipodal pairs at hop 2:
  // mean = (12 + 6) / 15 = 1.2 hops.
  const Triangulation oct = fixtures::octahedron();
  Rng rng(31);
  const int draws = 10000;
  double sum = 0.0;
  for (int i = 0; i < draws; ++i) sum += two_point_distance(oct, rng);
  const double unit = std::pow(6.0, -0.25);
  const double mean_hops = sum / draws / unit;
  // exact per-draw variance: E[h^2] - 1.2^2 = (12 + 4*3)/15 - 1.44 = 0.16
  const double se = std::sqrt(0.16 / draws);
  CHECK(std::fabs(mean_hops - 1.2) < 3.0 * se);
}

TEST_CASE("ball growth on fixtures") {
  Rng rng(1);
  const auto tet = ball_growth(fixtures::tetrahedron(), 4, rng);
  REQUIRE(tet.radii.size() == 2);  // radii 0 and 1
  CHECK(tet.mean_volumes[0] == 1.0);
  CHECK(tet.mean_volumes[1] == 4.0);

  const auto oct = ball_growth(fixtures::octahedron(), 6, rng);
  REQUIRE(oct.radii.size() == 3);
  CHECK(oct.mean_volumes[0] == 1.0);
  CHECK(oct.mean_volumes[1] == 5.0);  // degree 4 plus the center
  CHECK(oct.mean_volumes[2] == 6.0);  // saturated at n
}

TEST_CASE("ball growth saturates at n for radius >= hop diameter") {
  EnsembleSpec spec;
  spec.n = 40;
  spec.seed = 3;
  McmcSampler chain(spec);
  const Triangulation t = chain.next();
  Rng rng(8);
  const auto profile = ball_growth(t, 10, rng);
  CHECK(profile.radii.back() == hop_diameter(t));
  CHECK(profile.mean_volumes.back() == static_cast<double>(t.n()));
  for (size_t i = 1; i < profile.mean_volumes.size(); ++i)
    CHECK(profile.mean_volumes[i] >= profile.mean_volumes[i - 1]);
  CHECK(profile.mean_volumes.front() >= 1.0);
}

TEST_CASE("dimension estimate recovers an exact power law") {
  BallGrowthProfile synthetic;
  for (int r = 0; r <= 64; ++r) {
    synthetic.radii.push_back(r);
    synthetic.mean_volumes.push_back(static_cast<double>(r) * r);
  }
  synthetic.mean_volumes[0] = 1.0;  // r = 0 placeholder, outside any window
  const double slope = dimension_estimate(synthetic, FitWindow{2.0, 32.0});
  CHECK(slope == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("dimension estimate rejects windows with fewer than 3 radii") {
  BallGrowthProfile p;
  for (int r = 0; r <= 10; ++r) {
    p.radii.push_back(r);
    p.mean_volumes.push_back(1.0 + r);
  }
  CHECK_THROWS_AS(dimension_estimate(p, FitWindow{4.0, 5.0}), Error);
}

TEST_CASE("grid torus fixtures recover their dimension within 0.2") {
  for (int d : {2, 3}) {
    const int l = 64;
    const auto volumes = oracle::torus_ball_volumes(l, d);
    BallGrowthProfile profile;
    for (size_t r = 0; r < volumes.size(); ++r) {
      profile.radii.push_back(static_cast<double>(r));
      profile.mean_volumes.push_back(volumes[r]);
    }
    const double slope = dimension_estimate(profile, FitWindow{l / 8.0, l / 2.0});
    CHECK(std::fabs(slope - d) < 0.2);
  }
}

TEST_CASE("ball_growth on the torus graph equals the convolution oracle") {
  const int l = 16, d = 2;
  const Adjacency adj = oracle::torus_adjacency(l, d);
  Rng rng(17);
  const auto profile = ball_growth(adj, adj.size(), rng);  // all centers
  const auto volumes = oracle::torus_ball_volumes(l, d);
  REQUIRE(profile.mean_volumes.size() == volumes.size());
  for (size_t r = 0; r < volumes.size(); ++r)
    CHECK(profile.mean_volumes[r] == doctest::Approx(volumes[r]).epsilon(1e-12));
}

TEST_CASE("diameter is 2-Lipschitz with respect to GH distance") {
  Rng rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    auto random_space = [&rng](int n) {
      std::vector<double> coords(n);
      for (double& c : coords) c = rng.next_double();
      std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[static_cast<size_t>(i) * n + j] = std::fabs(coords[i] - coords[j]);
      return FiniteMetricSpace(n, std::move(d));
    };
    const FiniteMetricSpace x = random_space(3);
    const FiniteMetricSpace y = random_space(4);
    const GhResult gh = gh_distance_exact(x, y);
    CHECK(std::fabs(diameter(x) - diameter(y)) <= 2.0 * gh.value + 1e-12);
  }
}

TEST_CASE("rescaled metric axioms are exact on the hop metric") {
  // exhaustive for n <= 200, sampled triples beyond
  for (int n = 4; n <= 7; ++n)
    for (const auto& t : enumerate_classes(n, MapClass::Simple))
      CHECK_NOTHROW(check_rescaled_axioms(t, 200, 0, 0));
  EnsembleSpec spec;
  spec.n = 200;
  spec.seed = 1234;
  McmcSampler chain(spec);
  CHECK_NOTHROW(check_rescaled_axioms(chain.next(), 200, 0, 0));  // exhaustive at n = 200
  spec.n = 1000;
  McmcSampler big_chain(spec);
  CHECK_NOTHROW(check_rescaled_axioms(big_chain.next(), 200, 500, 99));  // sampled
}

TEST_CASE("metric space validation catches violations") {
  CHECK_THROWS_AS(FiniteMetricSpace(2, {0.0, 1.0, 2.0, 0.0}).validate(), Error);  // asymmetric
  CHECK_THROWS_AS(FiniteMetricSpace(2, {0.0, 0.0, 0.0, 0.0}).validate(), Error);  // zero off-diag
  // triangle violation: d(0,2) = 5 > 1 + 1
  std::vector<double> bad{0, 1, 5, 1, 0, 1, 5, 1, 0};
  CHECK_THROWS_AS(FiniteMetricSpace(3, std::move(bad)).validate(), Error);
}
