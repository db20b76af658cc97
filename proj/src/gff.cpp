#include "blab/gff.hpp"

namespace blab {

double GffSample::coefficient(int32_t l, int32_t m) const {
  return coefficients[static_cast<size_t>(l) * l - 1 + (m + l)];
}

GffSample sample_gff(const HarmonicBasis& basis, uint64_t seed) {
  GffSample s;
  s.l_max = basis.l_max();
  s.seed = seed;
  s.coefficients.resize(basis.size());
  Rng rng(seed);
  for (double& g : s.coefficients) g = rng.next_normal();
  return s;
}

double field_value(const HarmonicBasis& basis, const GffSample& sample, double theta,
                   double phi) {
  if (sample.l_max != basis.l_max()) fail(Errc::InvalidArgument, "sample/basis l_max mismatch");
  std::vector<double> plm;
  basis.legendre_table(std::cos(theta), plm);
  double total = 0.0;
  const double sqrt2 = std::sqrt(2.0);
  for (int32_t l = 1; l <= basis.l_max(); ++l) {
    const double scale = HarmonicBasis::field_scale(l);
    double degree_sum = sample.coefficient(l, 0) * plm[HarmonicBasis::legendre_index(l, 0)];
    for (int32_t m = 1; m <= l; ++m) {
      const double p = plm[HarmonicBasis::legendre_index(l, m)];
      degree_sum += sqrt2 * p *
                    (sample.coefficient(l, m) * std::cos(m * phi) +
                     sample.coefficient(l, -m) * std::sin(m * phi));
    }
    total += scale * degree_sum;
  }
  return total;
}

std::vector<double> field_on_grid(const HarmonicBasis& basis, const GffSample& sample,
                                  const std::vector<double>& thetas,
                                  const std::vector<double>& phis) {
  if (sample.l_max != basis.l_max()) fail(Errc::InvalidArgument, "sample/basis l_max mismatch");
  const int32_t l_max = basis.l_max();
  const double sqrt2 = std::sqrt(2.0);
  std::vector<double> out;
  out.reserve(thetas.size() * phis.size());
  std::vector<double> plm;
  std::vector<double> cos_coef(l_max + 1), sin_coef(l_max + 1);
  for (double theta : thetas) {
    basis.legendre_table(std::cos(theta), plm);
    // Collapse the degree sums per azimuthal order m.
    for (int32_t m = 0; m <= l_max; ++m) {
      double c = 0.0, s = 0.0;
      for (int32_t l = std::max(m, 1); l <= l_max; ++l) {
        const double p =
            HarmonicBasis::field_scale(l) * plm[HarmonicBasis::legendre_index(l, m)];
        if (m == 0) {
          c += p * sample.coefficient(l, 0);
        } else {
          c += sqrt2 * p * sample.coefficient(l, m);
          s += sqrt2 * p * sample.coefficient(l, -m);
        }
      }
      cos_coef[m] = c;
      sin_coef[m] = s;
    }
    for (double phi : phis) {
      double v = cos_coef[0];
      for (int32_t m = 1; m <= l_max; ++m)
        v += cos_coef[m] * std::cos(m * phi) + sin_coef[m] * std::sin(m * phi);
      out.push_back(v);
    }
  }
  return out;
}

double truncated_variance(int32_t l_max) {
  if (l_max < 1) fail(Errc::InvalidArgument, "truncated_variance requires l_max >= 1");
  double total = 0.0;
  for (int32_t l = 1; l <= l_max; ++l)
    total += (2.0 * l + 1.0) / (2.0 * l * (l + 1.0));
  return total;
}

double gff_covariance(const SpherePoint& x, const SpherePoint& y, const HarmonicBasis& basis) {
  const double c = std::cos(sphere_angle(x, y));
  double total = 0.0;
  for (int32_t l = 1; l <= basis.l_max(); ++l)
    total += (2.0 * l + 1.0) / (2.0 * l * (l + 1.0)) * legendre_p(l, c);
  return total;
}

double log_divergence_check(int32_t l) {
  return truncated_variance(2 * l) - truncated_variance(l);
}

}  // namespace blab
