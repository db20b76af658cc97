#pragma once

#include <vector>

#include "blab/map.hpp"

namespace blab::fixtures {

inline Triangulation tetrahedron() {
  return build_from_rotation(
      RotationSystem::from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}),
      MapClass::Simple);
}

/// The same tetrahedron with faces listed in a different order and vertices
/// renamed; isomorphic to tetrahedron() but dart-labelled differently.
inline Triangulation tetrahedron_relabelled() {
  return build_from_rotation(
      RotationSystem::from_faces({{2, 0, 3}, {1, 0, 2}, {3, 0, 1}, {2, 3, 1}}),
      MapClass::Simple);
}

inline Triangulation octahedron() {
  return build_from_rotation(
      RotationSystem::from_faces({{0, 1, 2},
                                  {0, 2, 3},
                                  {0, 3, 4},
                                  {0, 4, 1},
                                  {5, 2, 1},
                                  {5, 3, 2},
                                  {5, 4, 3},
                                  {5, 1, 4}}),
      MapClass::Simple);
}

/// Cube surface map: quadrilateral faces, so build_from_rotation must reject
/// it as a triangulation.
inline RotationSystem cube_map() {
  return RotationSystem::from_faces({{0, 1, 2, 3},
                                     {0, 4, 5, 1},
                                     {1, 5, 6, 2},
                                     {2, 6, 7, 3},
                                     {3, 7, 4, 0},
                                     {7, 6, 5, 4}});
}

/// The 7-vertex triangulation of the torus (K7 embedded): faces {i, i+1, i+3}
/// and {i, i+3, i+2} mod 7. All faces are triangles but the Euler
/// characteristic is 0.
inline RotationSystem k7_torus_map() {
  std::vector<std::vector<int32_t>> faces;
  for (int32_t i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 3) % 7, (i + 2) % 7});
  }
  return RotationSystem::from_faces(faces);
}

/// One vertex with a single loop: V=1, E=1, F=2, hence Euler characteristic 2
/// even though it is no triangulation.
inline RotationSystem loop_map() {
  return RotationSystem::from_arrays({1, 0}, {1, 0}, {0, 0});
}

}  // namespace blab::fixtures
