#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "blab/error.hpp"

namespace blab {

/// Point on the unit sphere in colatitude/longitude coordinates.
struct SpherePoint {
  double theta;  ///< colatitude in [0, pi]
  double phi;    ///< longitude in [0, 2*pi)
};

double sphere_angle(const SpherePoint& a, const SpherePoint& b);

/// Real spherical harmonics up to degree l_max, L2-orthonormal on the unit
/// sphere, via the stable normalized associated Legendre recurrences. The
/// zero mode (l = 0) is excluded from the field basis: eigenfunctions of the
/// Laplacian with nonzero eigenvalue lambda_l = l(l+1).
///
/// Conventions: m = 0 uses Pbar_l0(cos theta); m > 0 pairs sqrt(2) * Pbar_lm
/// with cos(m phi), m < 0 with sin(|m| phi). No Condon-Shortley phase.
///
/// The field normalization multiplies each harmonic by sqrt(2*pi/lambda_l),
/// which makes the Dirichlet pairing (1/2pi) * integral of grad(f_i) .
/// grad(f_j) the identity matrix: for an L2-normalized eigenfunction,
/// integral |grad psi|^2 = lambda by Green's identity, so the scaled
/// function contributes (2*pi/lambda) * lambda / (2*pi) = 1.
class HarmonicBasis {
 public:
  explicit HarmonicBasis(int32_t l_max);

  int32_t l_max() const { return l_max_; }
  /// Number of basis functions with 1 <= l <= l_max.
  int32_t size() const { return (l_max_ + 1) * (l_max_ + 1) - 1; }

  static double eigenvalue(int32_t l) { return static_cast<double>(l) * (l + 1); }
  /// sqrt(2*pi / lambda_l), the Dirichlet normalization factor.
  static double field_scale(int32_t l);

  /// Flat coefficient index of (l, m), row-major by degree: l^2 - 1 + (m + l).
  int32_t index(int32_t l, int32_t m) const;

  /// L2-orthonormal harmonic psi_{l,m}(theta, phi).
  double harmonic(int32_t l, int32_t m, double theta, double phi) const;

  /// Dirichlet-normalized field basis function sqrt(2*pi/lambda_l) * psi.
  double field_basis(int32_t l, int32_t m, double theta, double phi) const;

  /// Surface gradient of field_basis in the orthonormal frame (e_theta,
  /// e_phi): (d/dtheta, (1/sin theta) d/dphi). Valid away from the poles.
  void field_basis_gradient(int32_t l, int32_t m, double theta, double phi,
                            double& d_theta, double& d_phi_over_sin) const;

  /// Normalized associated Legendre values Pbar_l^m(cos theta) for all
  /// 0 <= m <= l <= l_max, at index l(l+1)/2 + m. Includes l = 0.
  void legendre_table(double cos_theta, std::vector<double>& out) const;

  /// Theta-derivatives of the same table (d/dtheta, not d/dx).
  void legendre_table_dtheta(double cos_theta, std::vector<double>& values,
                             std::vector<double>& dtheta) const;

  static int32_t legendre_index(int32_t l, int32_t m) { return l * (l + 1) / 2 + m; }

 private:
  int32_t l_max_;
};

/// Legendre polynomial P_l(x) by the three-term recurrence.
double legendre_p(int32_t l, double x);

/// Gauss-Legendre colatitude nodes crossed with a uniform longitude grid;
/// integrates smooth functions on the sphere. Exact for the polynomial
/// integrands produced by products of harmonics when resolution suffices.
struct QuadratureGrid {
  std::vector<double> cos_theta;  ///< Gauss-Legendre nodes in (-1, 1)
  std::vector<double> weight;     ///< matching weights (sum to 2)
  int32_t n_phi;

  static QuadratureGrid build(int32_t n_theta, int32_t n_phi);

  double phi_at(int32_t k) const;

  /// Integral over the sphere of f(theta, phi).
  template <typename F>
  double integrate(F&& f) const {
    double total = 0.0;
    const double dphi = 2.0 * M_PI / n_phi;
    for (size_t i = 0; i < cos_theta.size(); ++i) {
      const double theta = std::acos(cos_theta[i]);
      double ring = 0.0;
      for (int32_t k = 0; k < n_phi; ++k) ring += f(theta, phi_at(k));
      total += weight[i] * ring * dphi;
    }
    return total;
  }
};

}  // namespace blab
