#include "blab/metric.hpp"

#include <algorithm>
#include <cmath>

#include "blab/stats.hpp"

namespace blab {

Adjacency build_adjacency(const Triangulation& t) {
  const RotationSystem& m = t.map();
  const int32_t n = m.vertex_count();
  std::vector<std::vector<int32_t>> nbrs(n);
  for (int32_t d = 0; d < m.dart_count(); ++d) {
    const int32_t u = m.origin(d);
    const int32_t v = m.origin(m.twin(d));
    if (u != v) nbrs[u].push_back(v);
  }
  Adjacency adj;
  adj.offsets.assign(n + 1, 0);
  for (int32_t u = 0; u < n; ++u) {
    auto& list = nbrs[u];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    adj.offsets[u + 1] = adj.offsets[u] + static_cast<int32_t>(list.size());
  }
  adj.neighbors.reserve(adj.offsets[n]);
  for (auto& list : nbrs) adj.neighbors.insert(adj.neighbors.end(), list.begin(), list.end());
  return adj;
}

FiniteMetricSpace::FiniteMetricSpace(int32_t size, std::vector<double> distances,
                                     std::vector<std::string> labels)
    : size_(size), d_(std::move(distances)), labels_(std::move(labels)) {
  if (size_ < 1 || d_.size() != static_cast<size_t>(size_) * size_)
    fail(Errc::InvalidArgument, "distance matrix size mismatch");
  if (!labels_.empty() && labels_.size() != static_cast<size_t>(size_))
    fail(Errc::InvalidArgument, "label count mismatch");
}

void FiniteMetricSpace::validate(int32_t exhaustive_limit, int64_t sampled_triples,
                                 uint64_t seed, double triangle_slack) const {
  const auto& self = *this;
  for (int32_t i = 0; i < size_; ++i) {
    if (self(i, i) != 0.0) fail(Errc::InvalidArgument, "nonzero diagonal");
    for (int32_t j = i + 1; j < size_; ++j) {
      if (self(i, j) != self(j, i)) fail(Errc::InvalidArgument, "asymmetric matrix");
      if (!(self(i, j) > 0.0)) fail(Errc::InvalidArgument, "nonpositive off-diagonal distance");
    }
  }
  auto check = [&](int32_t i, int32_t j, int32_t k) {
    if (self(i, k) > self(i, j) + self(j, k) + triangle_slack)
      fail(Errc::InvalidArgument, "triangle inequality violated");
  };
  if (size_ <= exhaustive_limit) {
    for (int32_t i = 0; i < size_; ++i)
      for (int32_t j = 0; j < size_; ++j)
        for (int32_t k = 0; k < size_; ++k) check(i, j, k);
  } else {
    Rng rng(derive_seed(seed, "metric-validate", size_));
    for (int64_t s = 0; s < sampled_triples; ++s) {
      const auto i = static_cast<int32_t>(rng.next_below(size_));
      const auto j = static_cast<int32_t>(rng.next_below(size_));
      const auto k = static_cast<int32_t>(rng.next_below(size_));
      check(i, j, k);
    }
  }
}

FiniteMetricSpace FiniteMetricSpace::scaled(double c) const {
  if (!(c > 0.0)) fail(Errc::InvalidArgument, "scale factor must be positive");
  std::vector<double> d = d_;
  for (double& x : d) x *= c;
  return FiniteMetricSpace(size_, std::move(d), labels_);
}

std::vector<int32_t> hop_distances(const Adjacency& adj, int32_t source) {
  const int32_t n = adj.size();
  std::vector<int32_t> dist(n, -1);
  std::vector<int32_t> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int32_t u = queue[head];
    for (int32_t k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
      const int32_t v = adj.neighbors[k];
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<int32_t> hop_distances(const Triangulation& t, int32_t source) {
  return hop_distances(build_adjacency(t), source);
}

namespace {

struct Sweep {
  std::vector<int32_t> dist;
  std::vector<int32_t> parent;
  int32_t far_vertex;
  int32_t ecc;
};

Sweep bfs_sweep(const Adjacency& adj, int32_t source) {
  const int32_t n = adj.size();
  Sweep s;
  s.dist.assign(n, -1);
  s.parent.assign(n, -1);
  std::vector<int32_t> queue;
  queue.reserve(n);
  s.dist[source] = 0;
  queue.push_back(source);
  s.far_vertex = source;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int32_t u = queue[head];
    for (int32_t k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
      const int32_t v = adj.neighbors[k];
      if (s.dist[v] < 0) {
        s.dist[v] = s.dist[u] + 1;
        s.parent[v] = u;
        if (s.dist[v] > s.dist[s.far_vertex]) s.far_vertex = v;
        queue.push_back(v);
      }
    }
  }
  s.ecc = s.dist[s.far_vertex];
  return s;
}

int32_t eccentricity(const Adjacency& adj, int32_t source) {
  const auto dist = hop_distances(adj, source);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace

int32_t hop_diameter(const Adjacency& adj) {
  const int32_t n = adj.size();
  if (n <= 1) return 0;
  Sweep first = bfs_sweep(adj, 0);
  Sweep from_a = bfs_sweep(adj, first.far_vertex);
  int32_t lower = from_a.ecc;
  // Midpoint of the double-sweep path as the fringe root.
  int32_t mid = from_a.far_vertex;
  for (int32_t step = 0; step < from_a.ecc / 2; ++step) mid = from_a.parent[mid];
  Sweep from_mid = bfs_sweep(adj, mid);
  lower = std::max(lower, from_mid.ecc);

  std::vector<std::vector<int32_t>> layers(from_mid.ecc + 1);
  for (int32_t v = 0; v < n; ++v) layers[from_mid.dist[v]].push_back(v);
  for (int32_t depth = from_mid.ecc; depth >= 0 && 2 * depth > lower; --depth) {
    for (int32_t v : layers[depth]) lower = std::max(lower, eccentricity(adj, v));
  }
  return lower;
}

int32_t hop_diameter(const Triangulation& t) { return hop_diameter(build_adjacency(t)); }

double rescale_factor(int32_t n) { return std::pow(static_cast<double>(n), -0.25); }

FiniteMetricSpace rescaled_space(const Triangulation& t) {
  const Adjacency adj = build_adjacency(t);
  const int32_t n = adj.size();
  const double scale = rescale_factor(n);
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int32_t src = 0; src < n; ++src) {
    const auto hops = hop_distances(adj, src);
    for (int32_t v = 0; v < n; ++v) d[static_cast<size_t>(src) * n + v] = hops[v] * scale;
  }
  return FiniteMetricSpace(n, std::move(d));
}

double diameter(const FiniteMetricSpace& space) {
  double best = 0.0;
  for (double v : space.data()) best = std::max(best, v);
  return best;
}

void check_rescaled_axioms(const Triangulation& t, int32_t exhaustive_limit,
                           int64_t sampled_triples, uint64_t seed) {
  const Adjacency adj = build_adjacency(t);
  const int32_t n = adj.size();
  const double scale = rescale_factor(n);
  auto check_row = [&](const std::vector<int32_t>& row, int32_t src) {
    for (int32_t v = 0; v < n; ++v) {
      if (row[v] < 0) fail(Errc::InvalidArgument, "unreachable vertex");
      if (v != src && row[v] == 0) fail(Errc::InvalidArgument, "zero distance off diagonal");
    }
    if (row[src] != 0) fail(Errc::InvalidArgument, "nonzero diagonal");
  };
  if (n <= exhaustive_limit) {
    std::vector<std::vector<int32_t>> hops(n);
    for (int32_t v = 0; v < n; ++v) {
      hops[v] = hop_distances(adj, v);
      check_row(hops[v], v);
    }
    for (int32_t i = 0; i < n; ++i)
      for (int32_t j = 0; j < n; ++j) {
        if (hops[i][j] != hops[j][i]) fail(Errc::InvalidArgument, "asymmetric hop metric");
        for (int32_t k = 0; k < n; ++k)
          if (hops[i][k] > hops[i][j] + hops[j][k])
            fail(Errc::InvalidArgument, "triangle inequality violated");
      }
    const FiniteMetricSpace space = rescaled_space(t);
    for (int32_t i = 0; i < n; ++i)
      for (int32_t j = 0; j < n; ++j)
        if (space(i, j) != hops[i][j] * scale)
          fail(Errc::InvalidArgument, "stored distance is not the rounded product");
  } else {
    Rng rng(derive_seed(seed, "rescaled-axioms", n));
    for (int64_t s = 0; s < sampled_triples; ++s) {
      const auto i = static_cast<int32_t>(rng.next_below(n));
      const auto j = static_cast<int32_t>(rng.next_below(n));
      const auto k = static_cast<int32_t>(rng.next_below(n));
      const auto from_i = hop_distances(adj, i);
      const auto from_j = hop_distances(adj, j);
      check_row(from_i, i);
      if (from_i[j] != from_j[i]) fail(Errc::InvalidArgument, "asymmetric hop metric");
      if (from_i[k] > from_i[j] + from_j[k])
        fail(Errc::InvalidArgument, "triangle inequality violated");
    }
  }
}

double rescaled_diameter(const Triangulation& t) {
  return hop_diameter(t) * rescale_factor(t.n());
}

double two_point_distance(const Triangulation& t, Rng& rng) {
  const int32_t n = t.n();
  if (n < 2) fail(Errc::InvalidArgument, "two_point_distance requires n >= 2");
  const auto u = static_cast<int32_t>(rng.next_below(n));
  int32_t v = u;
  while (v == u) v = static_cast<int32_t>(rng.next_below(n));
  const auto hops = hop_distances(t, u);
  return hops[v] * rescale_factor(n);
}

BallGrowthProfile ball_growth(const Triangulation& t, int32_t centers, Rng& rng) {
  return ball_growth(build_adjacency(t), centers, rng);
}

BallGrowthProfile ball_growth(const Adjacency& adj, int32_t centers, Rng& rng) {
  if (centers < 1) fail(Errc::InvalidArgument, "ball_growth requires centers >= 1");
  const int32_t n = adj.size();
  const int32_t diam = hop_diameter(adj);

  std::vector<int32_t> chosen;
  if (centers >= n) {
    chosen.resize(n);
    for (int32_t v = 0; v < n; ++v) chosen[v] = v;
  } else {
    // Floyd's sampling without replacement, order-stable under the rng.
    std::vector<char> taken(n, 0);
    for (int32_t k = n - centers; k < n; ++k) {
      const auto r = static_cast<int32_t>(rng.next_below(k + 1));
      const int32_t pick = taken[r] ? k : r;
      taken[pick] = 1;
      chosen.push_back(pick);
    }
  }

  std::vector<double> volume_sum(diam + 1, 0.0);
  for (int32_t c : chosen) {
    const auto dist = hop_distances(adj, c);
    std::vector<int32_t> count(diam + 1, 0);
    for (int32_t v = 0; v < n; ++v) ++count[dist[v]];
    int64_t cumulative = 0;
    for (int32_t r = 0; r <= diam; ++r) {
      cumulative += count[r];
      volume_sum[r] += static_cast<double>(cumulative);
    }
  }
  BallGrowthProfile profile;
  profile.radii.resize(diam + 1);
  profile.mean_volumes.resize(diam + 1);
  for (int32_t r = 0; r <= diam; ++r) {
    profile.radii[r] = r;
    profile.mean_volumes[r] = volume_sum[r] / static_cast<double>(chosen.size());
  }
  return profile;
}

FitWindow bulk_window(const BallGrowthProfile& profile) {
  const double diam = profile.radii.empty() ? 0.0 : profile.radii.back();
  return FitWindow{2.0, diam / 2.0};
}

double dimension_estimate(const BallGrowthProfile& profile, FitWindow window) {
  std::vector<double> log_r, log_v;
  for (size_t i = 0; i < profile.radii.size(); ++i) {
    const double r = profile.radii[i];
    if (r <= 0.0 || r < window.r_min || r > window.r_max) continue;
    log_r.push_back(std::log(r));
    log_v.push_back(std::log(profile.mean_volumes[i]));
  }
  if (log_r.size() < 3)
    fail(Errc::DegenerateWindow, "dimension fit needs at least 3 radii in the window");
  return stats::least_squares_slope(log_r, log_v);
}

}  // namespace blab
