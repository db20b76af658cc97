#pragma once

#include <cstdint>
#include <vector>

#include "blab/gff.hpp"

namespace blab {

/// Uniform colatitude x longitude cell grid on the unit sphere. Cell areas
/// are exact: dphi * (cos theta_top - cos theta_bottom); centers sit at the
/// coordinate midpoints.
struct SphereMesh {
  int32_t n_theta = 0;
  int32_t n_phi = 0;

  static SphereMesh build(int32_t n_theta, int32_t n_phi);

  int32_t cell_count() const { return n_theta * n_phi; }
  double cell_area(int32_t i_theta) const;  // same for every longitude
  SpherePoint cell_center(int32_t i_theta, int32_t i_phi) const;
};

/// The exponential-of-field area measure at coupling gamma, with the Wick
/// counterterm: cell mass m_c = exp(gamma G(x_c) - gamma^2 v / 2) * a_c
/// where v is the truncated pointwise variance. The counterterm makes
/// E[m_c] = a_c exact at every truncation, so the expected total mass is the
/// sphere area 4*pi. gamma = sqrt(8/3) is the coupling whose random geometry
/// matches the Brownian map.
struct LqgMeasure {
  double gamma = 0.0;
  SphereMesh mesh;
  std::vector<double> mass;  // row-major over (theta cell, phi cell)

  double total_mass() const;
};

LqgMeasure lqg_measure(const HarmonicBasis& basis, const GffSample& sample, double gamma,
                       int32_t n_theta, int32_t n_phi);

inline double gamma_brownian() { return std::sqrt(8.0 / 3.0); }

}  // namespace blab
