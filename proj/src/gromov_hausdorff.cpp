#include "blab/gromov_hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace blab {

double hausdorff_distance(const std::vector<int32_t>& a, const std::vector<int32_t>& b,
                          const FiniteMetricSpace& ambient) {
  if (a.empty() || b.empty()) fail(Errc::EmptySet, "hausdorff_distance of an empty set");
  for (int32_t p : a)
    if (p < 0 || p >= ambient.size()) fail(Errc::InvalidArgument, "index outside ambient space");
  for (int32_t p : b)
    if (p < 0 || p >= ambient.size()) fail(Errc::InvalidArgument, "index outside ambient space");
  auto one_sided = [&](const std::vector<int32_t>& from, const std::vector<int32_t>& to) {
    double worst = 0.0;
    for (int32_t p : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int32_t q : to) nearest = std::min(nearest, ambient(p, q));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

double distortion(const Correspondence& r, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y) {
  double worst = 0.0;
  for (size_t s = 0; s < r.pairs.size(); ++s) {
    for (size_t t = s; t < r.pairs.size(); ++t) {
      const auto [i1, j1] = r.pairs[s];
      const auto [i2, j2] = r.pairs[t];
      worst = std::max(worst, std::fabs(x(i1, i2) - y(j1, j2)));
    }
  }
  return worst;
}

namespace {

// Row-by-row exhaustive search: point i of X is assigned a non-empty subset
// of Y; a correspondence is any assignment whose union covers Y. Distortion
// is accumulated incrementally and branches at or above the incumbent are
// cut. Subsets are tried in increasing popcount so near-bijections (which
// are usually optimal) establish a strong incumbent early.
struct SearchState {
  const FiniteMetricSpace& x;
  const FiniteMetricSpace& y;
  int64_t budget;
  int64_t nodes = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<uint32_t> best_rows;
  std::vector<uint32_t> rows;          // chosen subset mask per X row
  std::vector<uint32_t> subset_order;  // all non-empty masks over Y, by popcount
};

void search(SearchState& st, int32_t i, uint32_t covered, double current) {
  if (++st.nodes > st.budget)
    fail(Errc::ResourceLimit, "gh_distance_exact budget exhausted");
  const int32_t nx = st.x.size();
  const int32_t ny = st.y.size();
  if (i == nx) {
    if (covered == (uint32_t{1} << ny) - 1 && current < st.best) {
      st.best = current;
      st.best_rows = st.rows;
    }
    return;
  }
  for (uint32_t mask : st.subset_order) {
    double dist = current;
    // pairs inside the new row: |d_X(i,i)| - d_Y(j,j')| = d_Y(j,j')
    for (int32_t j = 0; j < ny && dist < st.best; ++j) {
      if (!(mask & (uint32_t{1} << j))) continue;
      for (int32_t j2 = j + 1; j2 < ny; ++j2)
        if (mask & (uint32_t{1} << j2)) dist = std::max(dist, st.y(j, j2));
    }
    // pairs against earlier rows
    for (int32_t i2 = 0; i2 < i && dist < st.best; ++i2) {
      const uint32_t other = st.rows[i2];
      for (int32_t j = 0; j < ny && dist < st.best; ++j) {
        if (!(mask & (uint32_t{1} << j))) continue;
        for (int32_t j2 = 0; j2 < ny; ++j2) {
          if (!(other & (uint32_t{1} << j2))) continue;
          dist = std::max(dist, std::fabs(st.x(i, i2) - st.y(j, j2)));
        }
      }
    }
    if (dist >= st.best) continue;
    st.rows[i] = mask;
    search(st, i + 1, covered | mask, dist);
  }
}

GhResult gh_oriented(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                     int64_t node_budget, bool swapped) {
  const int32_t ny = y.size();
  if (ny > 30) fail(Errc::ResourceLimit, "gh_distance_exact: space too large");
  SearchState st{x, y, node_budget, 0, std::numeric_limits<double>::infinity(), {}, {}, {}};
  st.rows.assign(x.size(), 0);
  for (uint32_t m = 1; m < (uint32_t{1} << ny); ++m) st.subset_order.push_back(m);
  std::stable_sort(st.subset_order.begin(), st.subset_order.end(),
                   [](uint32_t a, uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  search(st, 0, 0, 0.0);

  GhResult result;
  result.value = 0.5 * st.best;
  result.exact = true;
  for (int32_t i = 0; i < x.size(); ++i) {
    for (int32_t j = 0; j < ny; ++j) {
      if (st.best_rows[i] & (uint32_t{1} << j)) {
        if (swapped)
          result.witness.pairs.emplace_back(j, i);
        else
          result.witness.pairs.emplace_back(i, j);
      }
    }
  }
  if (swapped)
    std::sort(result.witness.pairs.begin(), result.witness.pairs.end());
  return result;
}

}  // namespace

GhResult gh_distance_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                           int64_t node_budget) {
  // Orient so both argument orders run the identical search; the minimum is
  // over the same finite distortion set either way, so the value is
  // symmetric exactly.
  if (x.size() <= y.size()) return gh_oriented(x, y, node_budget, false);
  return gh_oriented(y, x, node_budget, true);
}

double metric_radius(const FiniteMetricSpace& space) {
  double best = std::numeric_limits<double>::infinity();
  for (int32_t i = 0; i < space.size(); ++i) {
    double ecc = 0.0;
    for (int32_t j = 0; j < space.size(); ++j) ecc = std::max(ecc, space(i, j));
    best = std::min(best, ecc);
  }
  return best;
}

double gh_lower_bounds(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const double diam_gap = std::fabs(diameter(x) - diameter(y));
  const double rad_gap = std::fabs(metric_radius(x) - metric_radius(y));
  return 0.5 * std::max(diam_gap, rad_gap);
}

FiniteMetricSpace correspondence_embedding(const FiniteMetricSpace& x,
                                           const FiniteMetricSpace& y,
                                           const Correspondence& r) {
  if (r.pairs.empty()) fail(Errc::EmptySet, "empty correspondence");
  const double bridge = 0.5 * distortion(r, x, y);
  const int32_t nx = x.size();
  const int32_t ny = y.size();
  const int32_t n = nx + ny;
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  auto at = [&](int32_t i, int32_t j) -> double& { return d[static_cast<size_t>(i) * n + j]; };
  for (int32_t i = 0; i < nx; ++i)
    for (int32_t j = 0; j < nx; ++j) at(i, j) = x(i, j);
  for (int32_t i = 0; i < ny; ++i)
    for (int32_t j = 0; j < ny; ++j) at(nx + i, nx + j) = y(i, j);
  for (int32_t i = 0; i < nx; ++i) {
    for (int32_t j = 0; j < ny; ++j) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& [px, py] : r.pairs)
        best = std::min(best, x(i, px) + bridge + y(py, j));
      at(i, nx + j) = best;
      at(nx + j, i) = best;
    }
  }
  return FiniteMetricSpace(n, std::move(d));
}

}  // namespace blab
