#pragma once

#include <cstdint>
#include <vector>

#include "blab/harmonics.hpp"
#include "blab/rng.hpp"

namespace blab {

/// One draw of the truncated Gaussian free field on the sphere:
/// G = sum over l in [1, l_max], m in [-l, l] of g_{l,m} * f_{l,m},
/// where the g are i.i.d. standard normals and f_{l,m} are the
/// Dirichlet-normalized basis functions of HarmonicBasis.
struct GffSample {
  int32_t l_max = 0;
  uint64_t seed = 0;
  std::vector<double> coefficients;  // indexed by HarmonicBasis::index

  double coefficient(int32_t l, int32_t m) const;
};

/// Coefficients drawn in index order from Rng(seed); bit-reproducible.
GffSample sample_gff(const HarmonicBasis& basis, uint64_t seed);

/// Field value at one point. O(l_max^2).
double field_value(const HarmonicBasis& basis, const GffSample& sample, double theta,
                   double phi);

/// Field values on a theta x phi tensor grid, row-major over (theta, phi).
/// Exploits separability: O(rows * l_max^2 + points * l_max) instead of
/// O(points * l_max^2). Summation order fixed for reproducibility.
std::vector<double> field_on_grid(const HarmonicBasis& basis, const GffSample& sample,
                                  const std::vector<double>& thetas,
                                  const std::vector<double>& phis);

/// Pointwise variance of the truncated field; independent of the point by
/// the addition identity: sum over l <= l_max of (2l+1) / (2 l (l+1)).
double truncated_variance(int32_t l_max);

/// Truncated covariance Cov(G(x), G(y)) in closed form:
/// sum over l of (2l+1)/(2l(l+1)) * P_l(cos angle(x, y)).
double gff_covariance(const SpherePoint& x, const SpherePoint& y, const HarmonicBasis& basis);

/// Variance gained by doubling the truncation: Var_{2L} - Var_L. Tends to
/// log 2 as L grows — the pointwise variance diverges logarithmically, which
/// is why the full field is a distribution rather than a function.
double log_divergence_check(int32_t l);

}  // namespace blab
