#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "blab/sampler.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles/glue_generator.hpp"
#include "oracles/split_generator.hpp"

using namespace blab;

TEST_CASE("no tetrahedron edge is flippable in the simple class") {
  const Triangulation t = fixtures::tetrahedron();
  for (int e = 0; e < t.edge_count(); ++e) {
    CHECK(classify_flip(t, e) == FlipReject::ParallelDiagonal);
    CHECK_THROWS_AS(flip_edge(t, e), Error);
  }
  CHECK(count_flippable_edges(t) == 0);
}

TEST_CASE("every octahedron edge flips to a valid 6-vertex triangulation") {
  const Triangulation oct = fixtures::octahedron();
  CHECK(count_flippable_edges(oct) == oct.edge_count());
  for (int e = 0; e < oct.edge_count(); ++e) {
    const Triangulation f = flip_edge(oct, e);
    CHECK(f.n() == 6);
    CHECK(f.edge_count() == 12);
    CHECK(euler_characteristic(f.map()) == 2);
    CHECK_FALSE(are_isomorphic(f, oct));  // flip leaves the octahedron class
  }
}

TEST_CASE("flipping the new diagonal undoes the flip up to isomorphism") {
  const Triangulation oct = fixtures::octahedron();
  for (int e = 0; e < oct.edge_count(); ++e) {
    const Triangulation once = flip_edge(oct, e);
    const Triangulation twice = flip_edge(once, e);  // same edge index
    CHECK(are_isomorphic(twice, oct));
  }
}

TEST_CASE("double flip equals the identity up to swapping the edge's darts") {
  // flip∘flip relabels the flipped edge's two darts and nothing else; this
  // is the exact-involution property behind the chain's detailed balance.
  const Triangulation oct = fixtures::octahedron();
  for (int e = 0; e < oct.edge_count(); ++e) {
    const Triangulation once = flip_edge(oct, e);       // paired dart layout
    const Triangulation thrice = flip_edge(flip_edge(once, e), e);
    const RotationSystem& a = once.map();
    const RotationSystem& b = thrice.map();
    auto tau = [e](int32_t d) {
      if (d == 2 * e) return 2 * e + 1;
      if (d == 2 * e + 1) return 2 * e;
      return d;
    };
    for (int32_t d = 0; d < a.dart_count(); ++d) {
      CHECK(b.next(tau(d)) == tau(a.next(d)));
      CHECK(b.origin(tau(d)) == a.origin(d));
      CHECK(b.twin(tau(d)) == tau(a.twin(d)));
    }
  }
}

TEST_CASE("enumeration matches the known small counts") {
  // Orientation-preserving classes; from n = 7 these exceed the classical
  // reflection-inclusive polytope counts because chiral pairs split.
  CHECK(enumerate_triangulations(4, MapClass::Simple).size() == 1);
  CHECK(enumerate_triangulations(5, MapClass::Simple).size() == 1);
  CHECK(enumerate_triangulations(6, MapClass::Simple).size() == 2);
  CHECK(enumerate_triangulations(7, MapClass::Simple).size() == 6);
  CHECK(enumerate_triangulations(8, MapClass::Simple).size() == 17);
}

TEST_CASE("enumeration agrees with the vertex-splitting oracle up to n = 7") {
  for (int n = 4; n <= 7; ++n) {
    CHECK(enumerate_triangulations(n, MapClass::Simple).size() ==
          static_cast<size_t>(oracle::count_simple_classes(n)));
  }
}

TEST_CASE("enumeration agrees with the triangle-gluing census at n = 3, 4") {
  for (int n = 3; n <= 4; ++n) {
    const oracle::GlueCensus census = oracle::glue_census(n);
    CHECK(enumerate_triangulations(n, MapClass::General).size() == census.general_codes.size());
    CHECK(enumerate_triangulations(n, MapClass::Simple).size() == census.simple_codes.size());
  }
}

TEST_CASE("enumerate returns nothing below n = 3") {
  CHECK(enumerate_triangulations(1, MapClass::General).empty());
  CHECK(enumerate_triangulations(2, MapClass::General).empty());
}

TEST_CASE("enumeration budget is enforced") {
  EnumerationBudget tiny;
  tiny.max_operations = 3;
  CHECK_THROWS_AS(enumerate_classes(7, MapClass::Simple, tiny), Error);
}

TEST_CASE("general-class flips may create loops and parallel edges") {
  const Triangulation start = initial_triangulation(4, MapClass::General);
  std::set<std::string> seen;
  for (int e = 0; e < start.edge_count(); ++e) {
    if (classify_flip(start, e) != FlipReject::None) continue;
    const Triangulation f = flip_edge(start, e);
    CHECK(euler_characteristic(f.map()) == 2);
    seen.insert(canonical_code(f));
  }
  CHECK(!seen.empty());
}

TEST_CASE("mcmc at n = 4 simple emits only the tetrahedron") {
  EnsembleSpec spec;
  spec.n = 4;
  spec.seed = 11;
  McmcSampler chain(spec);
  const std::string tet = canonical_code(fixtures::tetrahedron());
  for (int i = 0; i < 20; ++i) CHECK(canonical_code(chain.next()) == tet);
}

TEST_CASE("identical spec and seed give identical streams") {
  EnsembleSpec spec;
  spec.n = 8;
  spec.seed = 123;
  McmcSampler a(spec), b(spec);
  for (int i = 0; i < 10; ++i) {
    const Triangulation ta = a.next();
    const Triangulation tb = b.next();
    CHECK(ta.map().nexts() == tb.map().nexts());
    CHECK(ta.map().origins() == tb.map().origins());
  }
}

TEST_CASE("every mcmc sample validates, both classes") {
  for (MapClass cls : {MapClass::Simple, MapClass::General}) {
    EnsembleSpec spec;
    spec.n = 12;
    spec.map_class = cls;
    spec.seed = 5;
    McmcSampler chain(spec);
    for (int i = 0; i < 25; ++i) {
      const Triangulation t = chain.next();  // build_from_rotation re-validates
      CHECK(t.n() == 12);
      CHECK(t.edge_count() == 30);
      CHECK(euler_characteristic(t.map()) == 2);
    }
  }
}

TEST_CASE("mcmc visits every class at n = 6 and n = 7") {
  for (int n : {6, 7}) {
    const auto classes = enumerate_triangulations(n, MapClass::Simple);
    EnsembleSpec spec;
    spec.n = n;
    spec.seed = 77;
    McmcSampler chain(spec);
    std::set<std::string> visited;
    for (int i = 0; i < 2000 && visited.size() < classes.size(); ++i)
      visited.insert(canonical_code(chain.next()));
    CHECK(visited.size() == classes.size());
    for (const auto& code : visited)
      CHECK(std::find(classes.begin(), classes.end(), code) != classes.end());
  }
}

TEST_CASE("exact sampler draws classes uniformly, unlike the rooted-level chain") {
  // n = 6 has two classes whose rooted weights are 12 : 1, so the chain
  // favors the low-symmetry class heavily; the enumeration sampler is
  // uniform over the classes themselves.
  const auto classes = enumerate_classes(6, MapClass::Simple);
  REQUIRE(classes.size() == 2);
  std::map<std::string, int> counts;
  ExactSampler exact(6, MapClass::Simple, 99);
  const int draws = 4000;
  for (int i = 0; i < draws; ++i) ++counts[canonical_code(exact.next())];
  REQUIRE(counts.size() == 2);
  for (const auto& [code, c] : counts)
    CHECK(std::abs(c - draws / 2) < 5 * std::sqrt(draws / 4.0));

  ExactSampler a(6, MapClass::Simple, 7), b(6, MapClass::Simple, 7);
  for (int i = 0; i < 10; ++i) CHECK(canonical_code(a.next()) == canonical_code(b.next()));
  CHECK_THROWS_AS(ExactSampler(2, MapClass::General, 1), Error);
}

TEST_CASE("spec validation bounds") {
  EnsembleSpec spec;
  spec.n = 3;
  spec.map_class = MapClass::Simple;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec.map_class = MapClass::General;
  CHECK_NOTHROW(spec.validate());
  spec.n = 0;
  CHECK_THROWS_AS(spec.validate(), Error);
}
