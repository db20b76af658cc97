#include <functional>
#include <set>
#include <vector>

#include "blab/io.hpp"
#include "blab/map.hpp"
#include "blab/sampler.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace blab;

namespace {

bool throws_code(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("tetrahedron validates with the polytope counts") {
  const Triangulation t = fixtures::tetrahedron();
  CHECK(t.n() == 4);
  CHECK(t.edge_count() == 6);
  CHECK(t.face_count() == 4);
  CHECK(t.map().dart_count() == 12);
  CHECK(euler_characteristic(t.map()) == 2);
}

TEST_CASE("cube is rejected as not triangular") {
  CHECK(throws_code(Errc::NotTriangular,
                    [] { build_from_rotation(fixtures::cube_map(), MapClass::Simple); }));
  CHECK(euler_characteristic(fixtures::cube_map()) == 2);
}

TEST_CASE("K7 torus map is all triangles but fails the sphere check") {
  const RotationSystem k7 = fixtures::k7_torus_map();
  CHECK(k7.vertex_count() == 7);
  CHECK(k7.edge_count() == 21);
  CHECK(k7.face_count() == 14);
  CHECK(euler_characteristic(k7) == 0);
  for (const auto& f : k7.faces()) CHECK(f.size() == 3);
  CHECK(throws_code(Errc::NotSphere,
                    [&] { build_from_rotation(k7, MapClass::General); }));
}

TEST_CASE("single loop map has Euler characteristic 2") {
  CHECK(euler_characteristic(fixtures::loop_map()) == 2);
}

TEST_CASE("malformed inputs are caught") {
  // twin with a fixed point
  CHECK(throws_code(Errc::MalformedPermutation, [] {
    RotationSystem::from_arrays({0, 1}, {1, 0}, {0, 0});
  }));
  // next not a permutation
  CHECK(throws_code(Errc::MalformedPermutation, [] {
    RotationSystem::from_arrays({1, 0}, {1, 1}, {0, 0});
  }));
  // origin inconsistent on a rotation cycle
  CHECK(throws_code(Errc::MalformedPermutation, [] {
    RotationSystem::from_arrays({1, 0}, {1, 0}, {0, 1});
  }));
  // two components (two separate loop maps)
  CHECK(throws_code(Errc::Disconnected, [] {
    RotationSystem::from_arrays({1, 0, 3, 2}, {1, 0, 3, 2}, {0, 0, 1, 1});
  }));
}

TEST_CASE("Euler characteristic via V - E + F on fixtures") {
  CHECK(euler_characteristic(fixtures::tetrahedron().map()) == 2);
  CHECK(euler_characteristic(fixtures::octahedron().map()) == 2);
}

TEST_CASE("relabelled tetrahedra are isomorphic; octahedron is not") {
  const Triangulation a = fixtures::tetrahedron();
  const Triangulation b = fixtures::tetrahedron_relabelled();
  CHECK(are_isomorphic(a, b));
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK_FALSE(are_isomorphic(a, fixtures::octahedron()));
}

TEST_CASE("canonical code is invariant under the double fan construction size") {
  CHECK(canonical_code(double_fan(4)) == canonical_code(fixtures::tetrahedron()));
}

TEST_CASE("tetrahedron automorphism group is orientation-preserving A4") {
  CHECK(automorphism_count(fixtures::tetrahedron().map()) == 12);
  CHECK(automorphism_count(fixtures::octahedron().map()) == 24);
}

TEST_CASE("mirroring keeps validity and achiral maps stay isomorphic") {
  const Triangulation t = fixtures::tetrahedron();
  const Triangulation m = mirrored(t);
  CHECK(are_isomorphic(t, m));
  CHECK(canonical_code(t, true) == canonical_code(m, true));
}

TEST_CASE("chiral triangulations separate from their mirrors") {
  // Chirality first appears at n = 7: one mirror pair among the six
  // orientation-preserving classes. The reflection-quotient counts must
  // collapse to the classical polytope census 1, 1, 2, 5, 14.
  const int expected_chiral[] = {0, 0, 0, 2, 6};      // n = 4..8
  const size_t expected_reflect[] = {1, 1, 2, 5, 14};  // n = 4..8
  for (int n = 4; n <= 8; ++n) {
    const auto classes = enumerate_classes(n, MapClass::Simple);
    int chiral = 0;
    std::set<std::string> reflection_codes;
    for (const auto& t : classes) {
      const Triangulation m = mirrored(t);
      reflection_codes.insert(canonical_code(t, true));
      if (!are_isomorphic(t, m)) {
        ++chiral;
        CHECK(canonical_code(t) != canonical_code(m));
        // the reflection-quotient code identifies the pair
        CHECK(canonical_code(t, true) == canonical_code(m, true));
      }
    }
    CHECK(chiral == expected_chiral[n - 4]);
    CHECK(reflection_codes.size() == expected_reflect[n - 4]);
  }
}

TEST_CASE("the n = 9 census also contains chiral instances") {
  const auto classes = enumerate_classes(9, MapClass::Simple);
  int chiral = 0;
  std::set<std::string> reflection_codes;
  for (const auto& t : classes) {
    reflection_codes.insert(canonical_code(t, true));
    if (!are_isomorphic(t, mirrored(t))) ++chiral;
  }
  CHECK(chiral > 0);
  CHECK(classes.size() == 73);
  CHECK(reflection_codes.size() == 50);  // classical count including reflections
}

TEST_CASE("isomorphism is an equivalence relation matching codes, n <= 8") {
  std::vector<Triangulation> maps;
  std::vector<std::string> codes;
  for (int n = 4; n <= 8; ++n) {
    for (auto& t : enumerate_classes(n, MapClass::Simple)) {
      codes.push_back(canonical_code(t));
      maps.push_back(std::move(t));
    }
  }
  for (const auto& a : maps) CHECK(are_isomorphic(a, a));
  for (size_t i = 0; i < maps.size(); ++i) {
    for (size_t j = i + 1; j < maps.size(); ++j) {
      CHECK(are_isomorphic(maps[i], maps[j]) == are_isomorphic(maps[j], maps[i]));
      CHECK(are_isomorphic(maps[i], maps[j]) == (codes[i] == codes[j]));
    }
  }
}

TEST_CASE("triangulation counting identities 2E = 3F and E = 3(n-2)") {
  for (int n = 4; n <= 8; ++n) {
    for (const auto& t : enumerate_classes(n, MapClass::Simple)) {
      CHECK(2 * t.edge_count() == 3 * t.face_count());
      CHECK(t.edge_count() == 3 * (t.n() - 2));
      CHECK(euler_characteristic(t.map()) == 2);
    }
  }
}

TEST_CASE("doubled triangle is the unique 3-vertex sphere triangulation") {
  const Triangulation t = doubled_triangle();
  CHECK(t.n() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.face_count() == 2);
  CHECK(euler_characteristic(t.map()) == 2);
}
