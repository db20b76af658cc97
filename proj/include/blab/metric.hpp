#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blab/map.hpp"
#include "blab/rng.hpp"

namespace blab {

/// Plain adjacency view of a triangulation's vertex graph (CSR layout).
/// Parallel edges are collapsed and loops dropped; the hop metric only sees
/// the underlying simple graph.
struct Adjacency {
  std::vector<int32_t> offsets;
  std::vector<int32_t> neighbors;

  int32_t size() const { return static_cast<int32_t>(offsets.size()) - 1; }
};

Adjacency build_adjacency(const Triangulation& t);

/// A finite metric space as a dense symmetric matrix. Construction does not
/// validate; call validate() (loaders and tests do).
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(int32_t size, std::vector<double> distances,
                    std::vector<std::string> labels = {});

  int32_t size() const { return size_; }
  double operator()(int32_t i, int32_t j) const { return d_[static_cast<size_t>(i) * size_ + j]; }
  const std::vector<double>& data() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Checks symmetry, zero diagonal, positivity off the diagonal, and the
  /// triangle inequality. Exhaustive up to `exhaustive_limit` points; above
  /// that, `sampled_triples` random triples are checked instead.
  /// `triangle_slack` loosens only the triangle check (loaders pass a tiny
  /// slack so single-rounded stored products cannot trip a 1-ulp violation).
  void validate(int32_t exhaustive_limit = 256, int64_t sampled_triples = 200000,
                uint64_t seed = 0, double triangle_slack = 0.0) const;

  /// Same space with all distances multiplied by c > 0.
  FiniteMetricSpace scaled(double c) const;

 private:
  int32_t size_ = 0;
  std::vector<double> d_;
  std::vector<std::string> labels_;
};

/// Breadth-first hop counts from `source` to every vertex.
std::vector<int32_t> hop_distances(const Triangulation& t, int32_t source);
std::vector<int32_t> hop_distances(const Adjacency& adj, int32_t source);

/// Exact hop diameter. Double sweep for the lower bound, then the iterative
/// fringe refinement, which terminates after scanning few BFS layers on the
/// graphs this project produces.
int32_t hop_diameter(const Triangulation& t);
int32_t hop_diameter(const Adjacency& adj);

/// The n^(-1/4) edge rescaling applied to a triangulation's hop metric.
double rescale_factor(int32_t n);

/// Vertex set of t as a metric space with every edge given length n^(-1/4).
FiniteMetricSpace rescaled_space(const Triangulation& t);

double diameter(const FiniteMetricSpace& space);

/// Exact metric-axiom check for the rescaled vertex metric, performed on the
/// integer hop distances: symmetry, positivity off the diagonal, and the
/// triangle inequality hold exactly for the underlying metric, and every
/// stored double is the single-rounded product hop * n^(-1/4). Checking the
/// rounded doubles directly can flip a tight triangle by one ulp, so this is
/// the authoritative exactness check. Exhaustive for n <= exhaustive_limit,
/// sampled above. Throws on any violation.
void check_rescaled_axioms(const Triangulation& t, int32_t exhaustive_limit = 200,
                           int64_t sampled_triples = 1000, uint64_t seed = 0);

/// n^(-1/4) times the hop diameter; equals diameter(rescaled_space(t))
/// without materialising the matrix.
double rescaled_diameter(const Triangulation& t);

/// Rescaled distance between two distinct uniform random vertices
/// (redrawn on collision).
double two_point_distance(const Triangulation& t, Rng& rng);

/// Mean closed-ball sizes by integer hop radius, averaged over sampled
/// centers, for every radius up to the hop diameter.
struct BallGrowthProfile {
  std::vector<double> radii;
  std::vector<double> mean_volumes;
};

BallGrowthProfile ball_growth(const Triangulation& t, int32_t centers, Rng& rng);
BallGrowthProfile ball_growth(const Adjacency& adj, int32_t centers, Rng& rng);

struct FitWindow {
  double r_min;
  double r_max;
};

/// Window [2, hop_diameter/2], the bulk regime used for dimension fits.
FitWindow bulk_window(const BallGrowthProfile& profile);

/// Least-squares slope of log(mean volume) against log(radius) over the
/// window. Throws DegenerateWindow with fewer than 3 usable radii.
double dimension_estimate(const BallGrowthProfile& profile, FitWindow window);

}  // namespace blab
