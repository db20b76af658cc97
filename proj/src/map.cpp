#include "blab/map.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace blab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotTriangular: return "NotTriangular";
    case Errc::NotSphere: return "NotSphere";
    case Errc::Disconnected: return "Disconnected";
    case Errc::MalformedPermutation: return "MalformedPermutation";
    case Errc::NotFlippable: return "NotFlippable";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::EmptySet: return "EmptySet";
    case Errc::DegenerateWindow: return "DegenerateWindow";
    case Errc::ParseError: return "ParseError";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const char* map_class_name(MapClass c) {
  return c == MapClass::Simple ? "simple" : "general";
}

MapClass map_class_from_name(const std::string& name) {
  if (name == "simple") return MapClass::Simple;
  if (name == "general") return MapClass::General;
  fail(Errc::InvalidArgument, "unknown triangulation class: " + name);
}

RotationSystem RotationSystem::from_arrays(std::vector<int32_t> twin,
                                           std::vector<int32_t> next,
                                           std::vector<int32_t> origin) {
  const size_t d = twin.size();
  if (d == 0 || d % 2 != 0 || next.size() != d || origin.size() != d)
    fail(Errc::MalformedPermutation, "dart arrays must be equal-sized and of even length");
  const auto n_darts = static_cast<int32_t>(d);
  auto in_range = [n_darts](int32_t v) { return v >= 0 && v < n_darts; };

  for (int32_t i = 0; i < n_darts; ++i) {
    if (!in_range(twin[i]) || twin[twin[i]] != i || twin[i] == i)
      fail(Errc::MalformedPermutation, "twin is not a fixed-point-free involution");
  }
  std::vector<char> seen(d, 0);
  for (int32_t i = 0; i < n_darts; ++i) {
    if (!in_range(next[i]) || seen[next[i]])
      fail(Errc::MalformedPermutation, "next is not a permutation of the darts");
    seen[next[i]] = 1;
  }
  // origin must be constant on next-orbits, and vertex ids must be exactly
  // 0..V-1 with one rotation cycle each.
  std::vector<int32_t> cycle_of(d, -1);
  int32_t n_cycles = 0;
  for (int32_t i = 0; i < n_darts; ++i) {
    if (cycle_of[i] >= 0) continue;
    for (int32_t j = i; cycle_of[j] < 0; j = next[j]) cycle_of[j] = n_cycles;
    ++n_cycles;
  }
  std::vector<int32_t> cycle_vertex(n_cycles, -1);
  int32_t max_vertex = -1;
  for (int32_t i = 0; i < n_darts; ++i) {
    if (origin[i] < 0)
      fail(Errc::MalformedPermutation, "negative vertex id");
    if (cycle_vertex[cycle_of[i]] < 0)
      cycle_vertex[cycle_of[i]] = origin[i];
    else if (cycle_vertex[cycle_of[i]] != origin[i])
      fail(Errc::MalformedPermutation, "origin not constant on a vertex rotation");
    max_vertex = std::max(max_vertex, origin[i]);
  }
  if (max_vertex + 1 != n_cycles)
    fail(Errc::MalformedPermutation, "vertex ids must be 0..V-1, one per rotation cycle");
  std::vector<char> vertex_used(n_cycles, 0);
  for (int32_t c = 0; c < n_cycles; ++c) {
    if (vertex_used[cycle_vertex[c]])
      fail(Errc::MalformedPermutation, "two rotation cycles share a vertex id");
    vertex_used[cycle_vertex[c]] = 1;
  }

  // Connectivity of the dart graph under {twin, next}.
  std::vector<char> reached(d, 0);
  std::vector<int32_t> stack{0};
  reached[0] = 1;
  size_t visited = 1;
  while (!stack.empty()) {
    const int32_t v = stack.back();
    stack.pop_back();
    for (int32_t w : {twin[v], next[v]}) {
      if (!reached[w]) {
        reached[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  if (visited != d) fail(Errc::Disconnected, "map is not connected");

  RotationSystem rs;
  rs.twin_ = std::move(twin);
  rs.next_ = std::move(next);
  rs.origin_ = std::move(origin);
  rs.vertex_count_ = n_cycles;

  std::vector<char> face_seen(d, 0);
  int32_t faces = 0;
  for (int32_t i = 0; i < n_darts; ++i) {
    if (face_seen[i]) continue;
    for (int32_t j = i; !face_seen[j]; j = rs.face_next(j)) face_seen[j] = 1;
    ++faces;
  }
  rs.face_count_ = faces;
  return rs;
}

RotationSystem RotationSystem::from_faces(const std::vector<std::vector<int32_t>>& faces) {
  // Assign one dart per directed edge occurrence, then derive next = φ∘twin
  // from the face successor permutation φ.
  std::map<std::pair<int32_t, int32_t>, int32_t> dart_of;
  std::vector<std::pair<int32_t, int32_t>> ends;
  std::vector<int32_t> face_succ;
  for (const auto& f : faces) {
    const auto k = static_cast<int32_t>(f.size());
    if (k < 1) fail(Errc::InvalidArgument, "empty face");
    const auto base = static_cast<int32_t>(ends.size());
    for (int32_t i = 0; i < k; ++i) {
      const int32_t u = f[i];
      const int32_t v = f[(i + 1) % k];
      if (u == v) fail(Errc::InvalidArgument, "from_faces cannot express loops");
      auto [it, inserted] = dart_of.emplace(std::make_pair(u, v), base + i);
      if (!inserted) fail(Errc::InvalidArgument, "directed edge repeated across faces");
      ends.emplace_back(u, v);
      face_succ.push_back(base + (i + 1) % k);
    }
  }
  const auto d = static_cast<int32_t>(ends.size());
  std::vector<int32_t> twin(d, -1), next(d, -1), origin(d, -1);
  for (int32_t i = 0; i < d; ++i) {
    origin[i] = ends[i].first;
    auto it = dart_of.find({ends[i].second, ends[i].first});
    if (it == dart_of.end())
      fail(Errc::InvalidArgument, "directed edge without its reversal");
    twin[i] = it->second;
  }
  for (int32_t i = 0; i < d; ++i) next[twin[i]] = face_succ[i];
  return from_arrays(std::move(twin), std::move(next), std::move(origin));
}

std::vector<std::vector<int32_t>> RotationSystem::faces() const {
  std::vector<std::vector<int32_t>> out;
  std::vector<char> seen(twin_.size(), 0);
  for (int32_t i = 0; i < dart_count(); ++i) {
    if (seen[i]) continue;
    std::vector<int32_t> circuit;
    for (int32_t j = i; !seen[j]; j = face_next(j)) {
      seen[j] = 1;
      circuit.push_back(j);
    }
    out.push_back(std::move(circuit));
  }
  return out;
}

std::vector<int32_t> RotationSystem::vertex_degrees() const {
  std::vector<int32_t> deg(vertex_count_, 0);
  for (int32_t d = 0; d < dart_count(); ++d) ++deg[origin_[d]];
  return deg;
}

RotationSystem RotationSystem::mirrored() const {
  std::vector<int32_t> prev(twin_.size());
  for (int32_t d = 0; d < dart_count(); ++d) prev[next_[d]] = d;
  return from_arrays(twin_, std::move(prev), origin_);
}

int32_t euler_characteristic(const RotationSystem& map) {
  return map.vertex_count() - map.edge_count() + map.face_count();
}

Triangulation build_from_rotation(RotationSystem map, MapClass cls) {
  for (const auto& f : map.faces()) {
    if (f.size() != 3)
      fail(Errc::NotTriangular, "face of degree " + std::to_string(f.size()));
  }
  if (euler_characteristic(map) != 2)
    fail(Errc::NotSphere, "Euler characteristic " + std::to_string(euler_characteristic(map)) +
                              ", expected 2");
  if (cls == MapClass::Simple) {
    std::vector<std::pair<int32_t, int32_t>> edges;
    edges.reserve(map.edge_count());
    for (int32_t d = 0; d < map.dart_count(); ++d) {
      if (d > map.twin(d)) continue;
      const int32_t u = map.origin(d);
      const int32_t v = map.origin(map.twin(d));
      if (u == v) fail(Errc::NotTriangular, "loop edge in simple class");
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      fail(Errc::NotTriangular, "parallel edges in simple class");
  }
  Triangulation t;
  t.class_ = cls;
  t.edge_dart_.reserve(map.edge_count());
  for (int32_t d = 0; d < map.dart_count(); ++d)
    if (d < map.twin(d)) t.edge_dart_.push_back(d);
  t.map_ = std::move(map);
  return t;
}

Triangulation build_from_rotation(std::vector<int32_t> twin, std::vector<int32_t> next,
                                  std::vector<int32_t> origin, MapClass cls) {
  return build_from_rotation(
      RotationSystem::from_arrays(std::move(twin), std::move(next), std::move(origin)), cls);
}

namespace {

// Relabels darts breadth-first from `root` and writes the relabelled
// (next, twin) table into `code` as 2*D entries. Deterministic: from each
// dart the traversal visits its next, then its twin.
void code_from_root(const RotationSystem& map, int32_t root, std::vector<int32_t>& order,
                    std::vector<int32_t>& new_id, std::vector<int32_t>& code) {
  const int32_t d = map.dart_count();
  std::fill(new_id.begin(), new_id.end(), -1);
  order.clear();
  order.push_back(root);
  new_id[root] = 0;
  for (int32_t head = 0; head < static_cast<int32_t>(order.size()); ++head) {
    const int32_t cur = order[head];
    for (int32_t nb : {map.next(cur), map.twin(cur)}) {
      if (new_id[nb] < 0) {
        new_id[nb] = static_cast<int32_t>(order.size());
        order.push_back(nb);
      }
    }
  }
  code.resize(2 * static_cast<size_t>(d));
  for (int32_t i = 0; i < d; ++i) {
    code[2 * i] = new_id[map.next(order[i])];
    code[2 * i + 1] = new_id[map.twin(order[i])];
  }
}

struct CanonicalScan {
  std::vector<int32_t> best;
  int32_t hits = 0;  // number of roots achieving the minimum
};

CanonicalScan scan_roots(const RotationSystem& map) {
  CanonicalScan result;
  const int32_t d = map.dart_count();
  std::vector<int32_t> order, new_id(d), code;
  order.reserve(d);
  for (int32_t root = 0; root < d; ++root) {
    code_from_root(map, root, order, new_id, code);
    if (result.best.empty() || code < result.best) {
      result.best = code;
      result.hits = 1;
    } else if (code == result.best) {
      ++result.hits;
    }
  }
  return result;
}

std::string encode_bytes(const std::vector<int32_t>& code) {
  std::string out;
  out.reserve(code.size() * 4);
  for (int32_t v : code) {
    const auto u = static_cast<uint32_t>(v);
    out.push_back(static_cast<char>((u >> 24) & 0xFF));
    out.push_back(static_cast<char>((u >> 16) & 0xFF));
    out.push_back(static_cast<char>((u >> 8) & 0xFF));
    out.push_back(static_cast<char>(u & 0xFF));
  }
  return out;
}

}  // namespace

std::string canonical_code(const RotationSystem& map, bool quotient_reflection) {
  CanonicalScan scan = scan_roots(map);
  if (quotient_reflection) {
    CanonicalScan mirror_scan = scan_roots(map.mirrored());
    if (mirror_scan.best < scan.best) scan.best = std::move(mirror_scan.best);
  }
  return encode_bytes(scan.best);
}

std::string canonical_code(const Triangulation& t, bool quotient_reflection) {
  return canonical_code(t.map(), quotient_reflection);
}

bool are_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.map().dart_count() != b.map().dart_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

int32_t automorphism_count(const RotationSystem& map) {
  return scan_roots(map).hits;
}

Triangulation mirrored(const Triangulation& t) {
  return build_from_rotation(t.map().mirrored(), t.map_class());
}

Triangulation double_fan(int32_t n) {
  if (n < 4) fail(Errc::InvalidArgument, "double_fan requires n >= 4");
  std::vector<std::vector<int32_t>> faces;
  faces.push_back({0, 1, 2});
  faces.push_back({1, 0, n - 1});
  for (int32_t k = 2; k < n - 1; ++k) {
    faces.push_back({0, k, k + 1});
    faces.push_back({1, k + 1, k});
  }
  return build_from_rotation(RotationSystem::from_faces(faces), MapClass::Simple);
}

Triangulation doubled_triangle() {
  std::vector<std::vector<int32_t>> faces{{0, 1, 2}, {2, 1, 0}};
  return build_from_rotation(RotationSystem::from_faces(faces), MapClass::General);
}

}  // namespace blab
