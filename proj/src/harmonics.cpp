#include "blab/harmonics.hpp"

#include <algorithm>

namespace blab {

double sphere_angle(const SpherePoint& a, const SpherePoint& b) {
  const double dot = std::sin(a.theta) * std::sin(b.theta) * std::cos(a.phi - b.phi) +
                     std::cos(a.theta) * std::cos(b.theta);
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

HarmonicBasis::HarmonicBasis(int32_t l_max) : l_max_(l_max) {
  if (l_max < 1) fail(Errc::InvalidArgument, "HarmonicBasis requires l_max >= 1");
}

double HarmonicBasis::field_scale(int32_t l) { return std::sqrt(2.0 * M_PI / eigenvalue(l)); }

int32_t HarmonicBasis::index(int32_t l, int32_t m) const {
  if (l < 1 || l > l_max_ || m < -l || m > l)
    fail(Errc::InvalidArgument, "harmonic index out of range");
  return l * l - 1 + (m + l);
}

void HarmonicBasis::legendre_table(double cos_theta, std::vector<double>& out) const {
  const int32_t count = legendre_index(l_max_, l_max_) + 1;
  out.assign(count, 0.0);
  const double x = cos_theta;
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));  // sin(theta)
  double pmm = 1.0 / std::sqrt(4.0 * M_PI);
  for (int32_t m = 0; m <= l_max_; ++m) {
    if (m > 0) pmm *= s * std::sqrt((2.0 * m + 1.0) / (2.0 * m));
    out[legendre_index(m, m)] = pmm;
    if (m == l_max_) break;
    double prev = pmm;
    double cur = std::sqrt(2.0 * m + 3.0) * x * pmm;
    out[legendre_index(m + 1, m)] = cur;
    for (int32_t l = m + 2; l <= l_max_; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
      const double b = std::sqrt((2.0 * l + 1.0) * ((l - 1.0) * (l - 1.0) - m * m) /
                                 ((2.0 * l - 3.0) * (static_cast<double>(l) * l - m * m)));
      const double next = a * x * cur - b * prev;
      out[legendre_index(l, m)] = next;
      prev = cur;
      cur = next;
    }
  }
}

void HarmonicBasis::legendre_table_dtheta(double cos_theta, std::vector<double>& values,
                                          std::vector<double>& dtheta) const {
  legendre_table(cos_theta, values);
  const int32_t count = legendre_index(l_max_, l_max_) + 1;
  dtheta.assign(count, 0.0);
  const double x = cos_theta;
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  if (s == 0.0) fail(Errc::InvalidArgument, "Legendre theta-derivative at a pole");
  for (int32_t m = 0; m <= l_max_; ++m) {
    for (int32_t l = std::max(m, 1); l <= l_max_; ++l) {
      const double plm = values[legendre_index(l, m)];
      const double pl1m = l - 1 >= m ? values[legendre_index(l - 1, m)] : 0.0;
      const double c = std::sqrt((static_cast<double>(l) * l - m * m) * (2.0 * l + 1.0) /
                                 (2.0 * l - 1.0));
      dtheta[legendre_index(l, m)] = (l * x * plm - c * pl1m) / s;
    }
  }
}

namespace {

double legendre_single(int32_t l, int32_t m, double cos_theta) {
  const double x = cos_theta;
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  double pmm = 1.0 / std::sqrt(4.0 * M_PI);
  for (int32_t k = 1; k <= m; ++k) pmm *= s * std::sqrt((2.0 * k + 1.0) / (2.0 * k));
  if (l == m) return pmm;
  double prev = pmm;
  double cur = std::sqrt(2.0 * m + 3.0) * x * pmm;
  for (int32_t k = m + 2; k <= l; ++k) {
    const double a = std::sqrt((4.0 * k * k - 1.0) / (static_cast<double>(k) * k - m * m));
    const double b = std::sqrt((2.0 * k + 1.0) * ((k - 1.0) * (k - 1.0) - m * m) /
                               ((2.0 * k - 3.0) * (static_cast<double>(k) * k - m * m)));
    const double next = a * x * cur - b * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double azimuthal(int32_t m, double phi) {
  if (m == 0) return 1.0;
  if (m > 0) return std::sqrt(2.0) * std::cos(m * phi);
  return std::sqrt(2.0) * std::sin(-m * phi);
}

}  // namespace

double HarmonicBasis::harmonic(int32_t l, int32_t m, double theta, double phi) const {
  index(l, m);  // range check
  return legendre_single(l, std::abs(m), std::cos(theta)) * azimuthal(m, phi);
}

double HarmonicBasis::field_basis(int32_t l, int32_t m, double theta, double phi) const {
  return field_scale(l) * harmonic(l, m, theta, phi);
}

void HarmonicBasis::field_basis_gradient(int32_t l, int32_t m, double theta, double phi,
                                         double& d_theta, double& d_phi_over_sin) const {
  index(l, m);
  const int32_t am = std::abs(m);
  const double x = std::cos(theta);
  const double s = std::sin(theta);
  if (s <= 0.0) fail(Errc::InvalidArgument, "gradient at a pole");
  const double plm = legendre_single(l, am, x);
  const double pl1m = l - 1 >= am ? legendre_single(l - 1, am, x) : 0.0;
  const double c =
      std::sqrt((static_cast<double>(l) * l - am * am) * (2.0 * l + 1.0) / (2.0 * l - 1.0));
  const double dplm = (l * x * plm - c * pl1m) / s;
  const double scale = field_scale(l);
  d_theta = scale * dplm * azimuthal(m, phi);
  double dazimuthal;
  if (m == 0)
    dazimuthal = 0.0;
  else if (m > 0)
    dazimuthal = -std::sqrt(2.0) * m * std::sin(m * phi);
  else
    dazimuthal = std::sqrt(2.0) * (-m) * std::cos(-m * phi);
  d_phi_over_sin = scale * plm * dazimuthal / s;
}

double legendre_p(int32_t l, double x) {
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int32_t k = 2; k <= l; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

QuadratureGrid QuadratureGrid::build(int32_t n_theta, int32_t n_phi) {
  if (n_theta < 1 || n_phi < 1) fail(Errc::InvalidArgument, "quadrature grid too small");
  QuadratureGrid grid;
  grid.n_phi = n_phi;
  grid.cos_theta.resize(n_theta);
  grid.weight.resize(n_theta);
  const int32_t n = n_theta;
  for (int32_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // P_n(x) and derivative by recurrence
      double prev = 1.0, cur = x;
      for (int32_t k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
        prev = cur;
        cur = next;
      }
      dp = n * (x * cur - prev) / (x * x - 1.0);
      const double step = cur / dp;
      x -= step;
      if (std::fabs(step) < 1e-15) break;
    }
    grid.cos_theta[i] = -x;  // ascending order
    grid.cos_theta[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    grid.weight[i] = w;
    grid.weight[n - 1 - i] = w;
  }
  return grid;
}

double QuadratureGrid::phi_at(int32_t k) const { return (k + 0.5) * 2.0 * M_PI / n_phi; }

}  // namespace blab
