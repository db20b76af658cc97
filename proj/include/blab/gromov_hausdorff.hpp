#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blab/metric.hpp"

namespace blab {

/// A correspondence between two finite metric spaces: a set of index pairs
/// covering every point on both sides. Its distortion is the largest
/// discrepancy between matched pairwise distances.
///
/// This is the computable face of the Gromov-Hausdorff distance. The
/// embedding definition — the infimum of Hausdorff distances over all
/// isometric embeddings i: X -> K, j: Y -> K into a common compact space —
/// cannot be searched directly, but a standard lemma identifies the two:
///   d_GH(X, Y) = (1/2) inf over correspondences R of dis(R).
/// One half is witnessed constructively: from a correspondence R with
/// distortion δ, the disjoint union X ⊔ Y carries the metric
///   d(x, y) = min over (x', y') in R of d_X(x, x') + δ/2 + d_Y(y', y),
/// under which both spaces embed isometrically at Hausdorff distance δ/2.
/// Conversely any common embedding induces the nearest-point correspondence
/// with distortion at most twice its Hausdorff distance. The tests exercise
/// the constructive half against hausdorff_distance.
struct Correspondence {
  std::vector<std::pair<int32_t, int32_t>> pairs;
};

struct GhResult {
  double value = 0.0;
  Correspondence witness;
  bool exact = false;
};

/// Hausdorff distance between two non-empty index subsets of an ambient
/// finite metric space K: the least eps such that A lies in the eps-
/// thickening B_eps = {x in K : d(x, B) <= eps} and vice versa, computed as
/// max(max_a min_b d, max_b min_a d).
double hausdorff_distance(const std::vector<int32_t>& a, const std::vector<int32_t>& b,
                          const FiniteMetricSpace& ambient);

/// Distortion of a correspondence: max over pairs of |d_X(i,i') - d_Y(j,j')|.
double distortion(const Correspondence& r, const FiniteMetricSpace& x,
                  const FiniteMetricSpace& y);

/// Exact Gromov-Hausdorff distance by exhaustive correspondence search with
/// branch-and-bound pruning. Exponential in |X|+|Y|; sized for oracle work
/// (|X|, |Y| <= 5 is comfortable). Throws ResourceLimit when the node budget
/// is exceeded.
GhResult gh_distance_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                           int64_t node_budget = 200'000'000);

/// max(|diam X - diam Y|, |rad X - rad Y|) / 2; never exceeds the exact value.
double gh_lower_bounds(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Smallest eccentricity over points.
double metric_radius(const FiniteMetricSpace& space);

/// The constructive embedding from the lemma above: X ⊔ Y metrized through a
/// correspondence with bridge length distortion/2. Returns the ambient
/// space; X occupies indices [0, |X|), Y the rest. Degenerates to a
/// pseudometric when the distortion is zero.
FiniteMetricSpace correspondence_embedding(const FiniteMetricSpace& x,
                                           const FiniteMetricSpace& y, const Correspondence& r);

}  // namespace blab
