#include "blab/lqg.hpp"

namespace blab {

SphereMesh SphereMesh::build(int32_t n_theta, int32_t n_phi) {
  if (n_theta < 1 || n_phi < 1) fail(Errc::InvalidArgument, "mesh resolution must be positive");
  return SphereMesh{n_theta, n_phi};
}

double SphereMesh::cell_area(int32_t i_theta) const {
  const double t0 = M_PI * i_theta / n_theta;
  const double t1 = M_PI * (i_theta + 1) / n_theta;
  const double dphi = 2.0 * M_PI / n_phi;
  return dphi * (std::cos(t0) - std::cos(t1));
}

SpherePoint SphereMesh::cell_center(int32_t i_theta, int32_t i_phi) const {
  return SpherePoint{M_PI * (i_theta + 0.5) / n_theta, 2.0 * M_PI * (i_phi + 0.5) / n_phi};
}

double LqgMeasure::total_mass() const {
  double total = 0.0;
  for (double m : mass) total += m;
  return total;
}

LqgMeasure lqg_measure(const HarmonicBasis& basis, const GffSample& sample, double gamma,
                       int32_t n_theta, int32_t n_phi) {
  if (gamma < 0.0) fail(Errc::InvalidArgument, "gamma must be >= 0");
  LqgMeasure measure;
  measure.gamma = gamma;
  measure.mesh = SphereMesh::build(n_theta, n_phi);

  std::vector<double> thetas(n_theta), phis(n_phi);
  for (int32_t i = 0; i < n_theta; ++i) thetas[i] = measure.mesh.cell_center(i, 0).theta;
  for (int32_t k = 0; k < n_phi; ++k) phis[k] = measure.mesh.cell_center(0, k).phi;
  const std::vector<double> field = field_on_grid(basis, sample, thetas, phis);

  const double counterterm = 0.5 * gamma * gamma * truncated_variance(basis.l_max());
  measure.mass.resize(measure.mesh.cell_count());
  for (int32_t i = 0; i < n_theta; ++i) {
    const double area = measure.mesh.cell_area(i);
    for (int32_t k = 0; k < n_phi; ++k) {
      const double g = field[static_cast<size_t>(i) * n_phi + k];
      measure.mass[static_cast<size_t>(i) * n_phi + k] =
          std::exp(gamma * g - counterterm) * area;
    }
  }
  return measure;
}

}  // namespace blab
