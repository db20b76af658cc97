#include "oracles/split_generator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

FaceList tetrahedron_faces() {
  return {{{0, 1, 2}}, {{0, 2, 3}}, {{0, 3, 1}}, {{1, 3, 2}}};
}

namespace {

// Counterclockwise neighbor cycle at v, recovered from the corners: a face
// (v, a, b) means b follows a in the rotation at v.
std::vector<int> neighbor_cycle(const FaceList& faces, int v) {
  std::map<int, int> succ;
  for (const auto& f : faces) {
    for (int r = 0; r < 3; ++r) {
      if (f[r] == v) {
        succ[f[(r + 1) % 3]] = f[(r + 2) % 3];
        break;
      }
    }
  }
  if (succ.empty()) throw std::runtime_error("vertex absent from face list");
  std::vector<int> cycle;
  const int start = succ.begin()->first;
  int cur = start;
  do {
    cycle.push_back(cur);
    cur = succ.at(cur);
  } while (cur != start);
  if (cycle.size() != succ.size()) throw std::runtime_error("broken rotation at vertex");
  return cycle;
}

}  // namespace

std::vector<FaceList> vertex_splits(const FaceList& faces, int vertex_count) {
  std::vector<FaceList> out;
  const int fresh = vertex_count;  // id of the new vertex
  for (int v = 0; v < vertex_count; ++v) {
    const std::vector<int> cycle = neighbor_cycle(faces, v);
    const int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        // v keeps the arc cycle[i..j]; the new vertex takes cycle[j..i].
        std::vector<char> keeps(k, 0);
        for (int t = i; t != j; t = (t + 1) % k) keeps[t] = 1;
        keeps[j] = 1;
        FaceList next_faces;
        for (const auto& f : faces) {
          int r = -1;
          for (int s = 0; s < 3; ++s)
            if (f[s] == v) r = s;
          if (r < 0) {
            next_faces.push_back(f);
            continue;
          }
          // corner (a -> b) at v belongs to v iff a's position t has
          // t in [i, j), i.e. both a and its successor stay with v.
          const int a = f[(r + 1) % 3];
          int t = -1;
          for (int s = 0; s < k; ++s)
            if (cycle[s] == a) t = s;
          const bool corner_stays = keeps[t] && t != j;
          std::array<int, 3> g = f;
          if (!corner_stays) g[r] = fresh;
          next_faces.push_back(g);
        }
        next_faces.push_back({{v, fresh, cycle[i]}});
        next_faces.push_back({{v, cycle[j], fresh}});
        out.push_back(std::move(next_faces));
      }
    }
  }
  return out;
}

namespace {

struct DartTable {
  std::vector<int> twin, next;
};

DartTable darts_from_faces(const FaceList& faces) {
  std::map<std::pair<int, int>, int> dart_of;
  std::vector<std::pair<int, int>> ends;
  std::vector<int> face_succ;
  for (const auto& f : faces) {
    const int base = static_cast<int>(ends.size());
    for (int r = 0; r < 3; ++r) {
      const int u = f[r];
      const int v = f[(r + 1) % 3];
      if (!dart_of.emplace(std::make_pair(u, v), base + r).second)
        throw std::runtime_error("directed edge repeated");
      ends.emplace_back(u, v);
      face_succ.push_back(base + (r + 1) % 3);
    }
  }
  const int d = static_cast<int>(ends.size());
  DartTable t;
  t.twin.assign(d, -1);
  t.next.assign(d, -1);
  for (int i = 0; i < d; ++i) {
    auto it = dart_of.find({ends[i].second, ends[i].first});
    if (it == dart_of.end()) throw std::runtime_error("missing reversed edge");
    t.twin[i] = it->second;
  }
  for (int i = 0; i < d; ++i) t.next[t.twin[i]] = face_succ[i];
  return t;
}

}  // namespace

std::string dfs_code(const FaceList& faces) {
  const DartTable t = darts_from_faces(faces);
  const int d = static_cast<int>(t.twin.size());
  std::vector<int> best;
  std::vector<int> relabel(d), stack, order;
  for (int root = 0; root < d; ++root) {
    std::fill(relabel.begin(), relabel.end(), -1);
    order.clear();
    stack.assign(1, root);
    relabel[root] = 0;
    order.push_back(root);
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (int nb : {t.twin[cur], t.next[cur]}) {  // twin first, depth first
        if (relabel[nb] < 0) {
          relabel[nb] = static_cast<int>(order.size());
          order.push_back(nb);
          stack.push_back(nb);
        }
      }
    }
    std::vector<int> code;
    code.reserve(2 * d);
    for (int i = 0; i < d; ++i) {
      code.push_back(relabel[t.twin[order[i]]]);
      code.push_back(relabel[t.next[order[i]]]);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  std::string bytes;
  bytes.reserve(best.size() * 2);
  for (int v : best) {
    bytes.push_back(static_cast<char>((v >> 8) & 0xFF));
    bytes.push_back(static_cast<char>(v & 0xFF));
  }
  return bytes;
}

std::vector<std::string> simple_sphere_codes(int n) {
  if (n < 4) throw std::runtime_error("oracle generates n >= 4 only");
  std::map<std::string, FaceList> level;
  level.emplace(dfs_code(tetrahedron_faces()), tetrahedron_faces());
  for (int size = 4; size < n; ++size) {
    std::map<std::string, FaceList> grown;
    for (const auto& [code, faces] : level) {
      for (FaceList& split : vertex_splits(faces, size)) {
        std::string new_code = dfs_code(split);
        grown.emplace(std::move(new_code), std::move(split));
      }
    }
    level = std::move(grown);
  }
  std::vector<std::string> codes;
  codes.reserve(level.size());
  for (const auto& [code, faces] : level) codes.push_back(code);
  return codes;
}

}  // namespace oracle
