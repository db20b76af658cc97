#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blab/error.hpp"

namespace blab {

/// Which combinatorial maps count as triangulations: General permits loops
/// and multiple edges, Simple forbids both.
enum class MapClass { General, Simple };

const char* map_class_name(MapClass c);
MapClass map_class_from_name(const std::string& name);

/// One directed half-edge of a combinatorial map.
struct Dart {
  int32_t id;
  int32_t twin;    ///< other half of the same edge
  int32_t next;    ///< next dart counterclockwise around the origin vertex
  int32_t origin;  ///< vertex the dart points away from
};

/// An orientation-preserving combinatorial map of a closed surface, encoded
/// as a rotation system: `twin` is a fixed-point-free involution pairing the
/// two darts of each edge, `next` is the counterclockwise successor at the
/// origin vertex, and faces are the orbits of next∘twin. Immutable once
/// built; validation happens in the factory functions.
class RotationSystem {
 public:
  /// Builds from parallel arrays and validates the permutation structure,
  /// origin consistency, and connectivity.
  static RotationSystem from_arrays(std::vector<int32_t> twin,
                                    std::vector<int32_t> next,
                                    std::vector<int32_t> origin);

  /// Builds from a list of oriented face circuits (vertex ids). Every
  /// directed edge must occur in exactly one face, which pins the oriented
  /// gluing. Not usable for maps with loops or parallel edges; fixtures that
  /// need those are built from raw arrays.
  static RotationSystem from_faces(const std::vector<std::vector<int32_t>>& faces);

  int32_t dart_count() const { return static_cast<int32_t>(twin_.size()); }
  int32_t vertex_count() const { return vertex_count_; }
  int32_t edge_count() const { return dart_count() / 2; }
  int32_t face_count() const { return face_count_; }

  int32_t twin(int32_t d) const { return twin_[d]; }
  int32_t next(int32_t d) const { return next_[d]; }
  int32_t origin(int32_t d) const { return origin_[d]; }
  /// Successor inside the face containing d (orbit of next∘twin).
  int32_t face_next(int32_t d) const { return next_[twin_[d]]; }

  const std::vector<int32_t>& twins() const { return twin_; }
  const std::vector<int32_t>& nexts() const { return next_; }
  const std::vector<int32_t>& origins() const { return origin_; }

  /// Face circuits as dart lists, in order of their minimal dart.
  std::vector<std::vector<int32_t>> faces() const;

  /// Degree (dart count) per vertex; loops contribute two.
  std::vector<int32_t> vertex_degrees() const;

  /// Same map with the orientation reversed (next replaced by its inverse).
  RotationSystem mirrored() const;

  RotationSystem() = default;

 private:
  std::vector<int32_t> twin_, next_, origin_;
  int32_t vertex_count_ = 0;
  int32_t face_count_ = 0;
};

int32_t euler_characteristic(const RotationSystem& map);

/// A validated triangulation of the 2-sphere: every face a triangle, Euler
/// characteristic 2, connected; in Simple class additionally loop-free and
/// multi-edge-free.
class Triangulation {
 public:
  const RotationSystem& map() const { return map_; }
  int32_t n() const { return map_.vertex_count(); }
  MapClass map_class() const { return class_; }
  int32_t edge_count() const { return map_.edge_count(); }
  int32_t face_count() const { return map_.face_count(); }

  /// Dart with the smaller id of edge `e`, under the edge order used across
  /// the project (edges sorted by their minimal dart id).
  int32_t edge_dart(int32_t e) const { return edge_dart_[e]; }

 private:
  friend Triangulation build_from_rotation(RotationSystem, MapClass);

  RotationSystem map_;
  MapClass class_ = MapClass::Simple;
  std::vector<int32_t> edge_dart_;
};

/// Validates a rotation system as a sphere triangulation of the given class.
/// Throws Error with code NotTriangular, NotSphere, Disconnected or
/// MalformedPermutation (the latter surfacing from RotationSystem::from_arrays
/// when building from raw arrays).
Triangulation build_from_rotation(RotationSystem map, MapClass cls);
Triangulation build_from_rotation(std::vector<int32_t> twin,
                                  std::vector<int32_t> next,
                                  std::vector<int32_t> origin, MapClass cls);

/// Canonical byte string invariant under orientation-preserving isomorphism:
/// the lexicographic minimum, over all root darts, of the (next, twin)
/// tables relabelled by a breadth-first traversal from the root. Two maps
/// get equal codes iff they are related by an orientation-preserving
/// isomorphism. With `quotient_reflection` set, the minimum is also taken
/// over the mirrored map, identifying chiral pairs (diagnostic use only).
std::string canonical_code(const RotationSystem& map, bool quotient_reflection = false);
std::string canonical_code(const Triangulation& t, bool quotient_reflection = false);

bool are_isomorphic(const Triangulation& a, const Triangulation& b);

/// Order of the orientation-preserving automorphism group. Equals the number
/// of root darts whose relabelled table achieves the canonical minimum (map
/// automorphisms act freely on darts of a connected map).
int32_t automorphism_count(const RotationSystem& map);

/// The mirrored triangulation (valid whenever the input is).
Triangulation mirrored(const Triangulation& t);

/// Deterministic starter triangulation on n >= 4 vertices: two adjacent
/// poles both joined to a path of n-2 vertices. The n = 4 case is the
/// tetrahedron. Simple for every n >= 4.
Triangulation double_fan(int32_t n);

/// The 3-vertex triangulation of the sphere: two triangles glued along their
/// shared boundary. Loop-free and multi-edge-free, but degenerate in the
/// sense that both faces have the same vertex set.
Triangulation doubled_triangle();

}  // namespace blab
