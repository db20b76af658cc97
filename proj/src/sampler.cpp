#include "blab/sampler.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

namespace blab {

namespace {

// Working representation of the flip chain: darts relabelled so that edge e
// owns darts 2e and 2e+1 (twin is xor 1), leaving only next and origin as
// mutable state. All flip primitives below operate on these raw arrays.

struct FlipSite {
  int32_t d, db;       // the edge's darts
  int32_t x, y, u, v;  // remaining darts of the two incident faces
  int32_t apex_left, apex_right;
};

FlipSite flip_site(const std::vector<int32_t>& next, const std::vector<int32_t>& origin,
                   int32_t e) {
  FlipSite s;
  s.d = 2 * e;
  s.db = 2 * e + 1;
  s.x = next[s.d ^ 1];  // face successor of d
  s.y = next[s.x ^ 1];
  s.u = next[s.db ^ 1];  // face successor of db
  s.v = next[s.u ^ 1];
  s.apex_left = origin[s.y];
  s.apex_right = origin[s.v];
  return s;
}

bool vertices_adjacent(const std::vector<int32_t>& next, const std::vector<int32_t>& origin,
                       int32_t target, int32_t some_dart_at_source) {
  int32_t d = some_dart_at_source;
  do {
    if (origin[d ^ 1] == target) return true;
    d = next[d];
  } while (d != some_dart_at_source);
  return false;
}

FlipReject classify_flip_raw(const std::vector<int32_t>& next,
                             const std::vector<int32_t>& origin,
                             const std::vector<int32_t>& degree, int32_t e, MapClass cls) {
  const FlipSite s = flip_site(next, origin, e);
  if (s.db == s.x || s.db == s.y) return FlipReject::SameFace;
  if (cls == MapClass::Simple) {
    if (s.apex_left == s.apex_right) return FlipReject::LoopDiagonal;
    const bool adjacent = degree[s.apex_left] <= degree[s.apex_right]
                              ? vertices_adjacent(next, origin, s.apex_right, s.y)
                              : vertices_adjacent(next, origin, s.apex_left, s.v);
    if (adjacent) return FlipReject::ParallelDiagonal;
  }
  return FlipReject::None;
}

// Rewires the two incident triangles around the opposite diagonal. The new
// faces are (u, db, y) and (v, x, d); next = faceSucc∘twin fixes exactly six
// next pointers plus the two origins of the flipped darts.
void apply_flip_raw(std::vector<int32_t>& next, std::vector<int32_t>& origin,
                    std::vector<int32_t>& degree, int32_t e) {
  const FlipSite s = flip_site(next, origin, e);
  const int32_t old_a = origin[s.d];
  const int32_t old_b = origin[s.db];
  next[s.u ^ 1] = s.db;
  next[s.d] = s.y;
  next[s.y ^ 1] = s.u;
  next[s.v ^ 1] = s.x;
  next[s.x ^ 1] = s.d;
  next[s.db] = s.v;
  origin[s.d] = s.apex_left;
  origin[s.db] = s.apex_right;
  --degree[old_a];
  --degree[old_b];
  ++degree[s.apex_left];
  ++degree[s.apex_right];
}

struct PairedMap {
  std::vector<int32_t> next, origin, degree;
};

PairedMap paired_from(const Triangulation& t) {
  const RotationSystem& m = t.map();
  const int32_t darts = m.dart_count();
  std::vector<int32_t> new_id(darts, -1);
  for (int32_t e = 0; e < t.edge_count(); ++e) {
    const int32_t d = t.edge_dart(e);
    new_id[d] = 2 * e;
    new_id[m.twin(d)] = 2 * e + 1;
  }
  PairedMap p;
  p.next.resize(darts);
  p.origin.resize(darts);
  for (int32_t d = 0; d < darts; ++d) {
    p.next[new_id[d]] = new_id[m.next(d)];
    p.origin[new_id[d]] = m.origin(d);
  }
  p.degree.assign(m.vertex_count(), 0);
  for (int32_t d = 0; d < darts; ++d) ++p.degree[p.origin[d]];
  return p;
}

Triangulation triangulation_from(const std::vector<int32_t>& next,
                                 const std::vector<int32_t>& origin, MapClass cls) {
  std::vector<int32_t> twin(next.size());
  for (int32_t d = 0; d < static_cast<int32_t>(next.size()); ++d) twin[d] = d ^ 1;
  return build_from_rotation(std::move(twin), next, origin, cls);
}

}  // namespace

const char* flip_reject_name(FlipReject r) {
  switch (r) {
    case FlipReject::None: return "none";
    case FlipReject::SameFace: return "same-face";
    case FlipReject::LoopDiagonal: return "loop-diagonal";
    case FlipReject::ParallelDiagonal: return "parallel-diagonal";
  }
  return "unknown";
}

FlipReject classify_flip(const Triangulation& t, int32_t e) {
  if (e < 0 || e >= t.edge_count()) fail(Errc::InvalidArgument, "edge index out of range");
  const PairedMap p = paired_from(t);
  return classify_flip_raw(p.next, p.origin, p.degree, e, t.map_class());
}

Triangulation flip_edge(const Triangulation& t, int32_t e) {
  if (e < 0 || e >= t.edge_count()) fail(Errc::InvalidArgument, "edge index out of range");
  PairedMap p = paired_from(t);
  const FlipReject reason = classify_flip_raw(p.next, p.origin, p.degree, e, t.map_class());
  if (reason != FlipReject::None)
    fail(Errc::NotFlippable,
         std::string("edge ") + std::to_string(e) + " not flippable: " + flip_reject_name(reason));
  apply_flip_raw(p.next, p.origin, p.degree, e);
  return triangulation_from(p.next, p.origin, t.map_class());
}

int32_t count_flippable_edges(const Triangulation& t) {
  const PairedMap p = paired_from(t);
  int32_t count = 0;
  for (int32_t e = 0; e < t.edge_count(); ++e)
    if (classify_flip_raw(p.next, p.origin, p.degree, e, t.map_class()) == FlipReject::None)
      ++count;
  return count;
}

Triangulation initial_triangulation(int32_t n, MapClass cls) {
  if (n >= 4) {
    const Triangulation fan = double_fan(n);
    return cls == MapClass::Simple ? fan : build_from_rotation(fan.map(), cls);
  }
  if (n == 3) {
    const Triangulation dt = doubled_triangle();
    return cls == MapClass::General ? dt : build_from_rotation(dt.map(), cls);
  }
  fail(Errc::InvalidArgument,
       "no starter triangulation with n = " + std::to_string(n) + " in class " +
           map_class_name(cls));
}

std::vector<Triangulation> enumerate_classes(int32_t n, MapClass cls,
                                             const EnumerationBudget& budget) {
  if (n < 3) return {};
  Triangulation start = initial_triangulation(n, cls);

  std::vector<Triangulation> reps;
  std::vector<std::string> codes;
  std::unordered_set<std::string> seen;
  std::deque<size_t> frontier;
  const std::string start_code = canonical_code(start);
  seen.insert(start_code);
  codes.push_back(start_code);
  reps.push_back(std::move(start));
  frontier.push_back(0);

  int64_t operations = 0;
  while (!frontier.empty()) {
    const size_t index = frontier.front();
    frontier.pop_front();
    const Triangulation current = reps[index];  // copy: reps may reallocate
    for (int32_t e = 0; e < current.edge_count(); ++e) {
      if (++operations > budget.max_operations)
        fail(Errc::ResourceLimit, "enumeration budget exhausted");
      if (classify_flip(current, e) != FlipReject::None) continue;
      Triangulation flipped = flip_edge(current, e);
      std::string code = canonical_code(flipped);
      if (seen.insert(code).second) {
        codes.push_back(std::move(code));
        reps.push_back(std::move(flipped));
        frontier.push_back(reps.size() - 1);
      }
    }
  }

  std::vector<size_t> order(reps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&codes](size_t a, size_t b) { return codes[a] < codes[b]; });
  std::vector<Triangulation> sorted;
  sorted.reserve(reps.size());
  for (size_t i : order) sorted.push_back(std::move(reps[i]));
  return sorted;
}

std::vector<std::string> enumerate_triangulations(int32_t n, MapClass cls,
                                                  const EnumerationBudget& budget) {
  std::vector<std::string> codes;
  for (const Triangulation& t : enumerate_classes(n, cls, budget))
    codes.push_back(canonical_code(t));
  return codes;
}

int64_t rooted_count(const Triangulation& t) {
  return t.map().dart_count() / automorphism_count(t.map());
}

ExactSampler::ExactSampler(int32_t n, MapClass cls, uint64_t seed,
                           const EnumerationBudget& budget)
    : classes_(enumerate_classes(n, cls, budget)), rng_(seed) {
  if (classes_.empty())
    fail(Errc::InvalidArgument, "no triangulations with n = " + std::to_string(n));
}

Triangulation ExactSampler::next() {
  return classes_[rng_.next_below(classes_.size())];
}

int64_t EnsembleSpec::effective_burn_in() const {
  return burn_in >= 0 ? burn_in : 50LL * 3 * (n - 2);
}

int64_t EnsembleSpec::effective_thinning() const {
  return thinning >= 0 ? thinning : 3LL * (n - 2);
}

void EnsembleSpec::validate() const {
  if (map_class == MapClass::Simple && n < 4)
    fail(Errc::InvalidArgument, "simple class requires n >= 4");
  if (map_class == MapClass::General && n < 1)
    fail(Errc::InvalidArgument, "general class requires n >= 1");
}

McmcSampler::McmcSampler(const EnsembleSpec& spec) : spec_(spec), rng_(spec.seed) {
  spec_.validate();
  PairedMap p = paired_from(initial_triangulation(spec_.n, spec_.map_class));
  next_ = std::move(p.next);
  origin_ = std::move(p.origin);
  degree_ = std::move(p.degree);
  edge_count_ = static_cast<int32_t>(next_.size()) / 2;
}

void McmcSampler::advance(int64_t step_count) {
  for (int64_t s = 0; s < step_count; ++s) {
    const auto e = static_cast<int32_t>(rng_.next_below(edge_count_));
    if (classify_flip_raw(next_, origin_, degree_, e, spec_.map_class) == FlipReject::None) {
      apply_flip_raw(next_, origin_, degree_, e);
      ++accepted_;
    }
    ++steps_;
  }
}

Triangulation McmcSampler::next() {
  if (!burned_in_) {
    advance(spec_.effective_burn_in());
    burned_in_ = true;
  }
  advance(spec_.effective_thinning());
  return triangulation_from(next_, origin_, spec_.map_class);
}

}  // namespace blab
