#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blab/convergence.hpp"
#include "blab/gff.hpp"
#include "blab/gromov_hausdorff.hpp"
#include "blab/io.hpp"
#include "blab/lqg.hpp"
#include "blab/map.hpp"
#include "blab/metric.hpp"
#include "blab/sampler.hpp"
#include "blab/stats.hpp"

namespace py = pybind11;
using namespace blab;

namespace {

MapClass class_from(const std::string& name) { return map_class_from_name(name); }

FiniteMetricSpace space_from_rows(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<int32_t>(rows.size());
  std::vector<double> d;
  d.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      fail(Errc::InvalidArgument, "distance matrix must be square");
    d.insert(d.end(), row.begin(), row.end());
  }
  FiniteMetricSpace space(n, std::move(d));
  space.validate();
  return space;
}

std::vector<std::vector<double>> space_to_rows(const FiniteMetricSpace& space) {
  std::vector<std::vector<double>> rows(space.size(), std::vector<double>(space.size()));
  for (int32_t i = 0; i < space.size(); ++i)
    for (int32_t j = 0; j < space.size(); ++j) rows[i][j] = space(i, j);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_blab, m) {
  m.doc() = "Random-surface laboratory: uniform sphere triangulations, their "
            "n^(-1/4)-rescaled metric geometry, Gromov-Hausdorff oracles, and "
            "the Gaussian free field / Liouville area measure on the sphere.";

  py::register_exception<Error>(m, "BlabError");

  py::class_<Triangulation>(m, "Triangulation")
      .def_property_readonly("n", &Triangulation::n)
      .def_property_readonly("edge_count", &Triangulation::edge_count)
      .def_property_readonly("face_count", &Triangulation::face_count)
      .def_property_readonly("map_class",
                             [](const Triangulation& t) { return map_class_name(t.map_class()); })
      .def("canonical_code",
           [](const Triangulation& t, bool quotient_reflection) {
             return py::bytes(canonical_code(t, quotient_reflection));
           },
           py::arg("quotient_reflection") = false)
      .def("euler_characteristic",
           [](const Triangulation& t) { return euler_characteristic(t.map()); })
      .def("automorphism_count",
           [](const Triangulation& t) { return automorphism_count(t.map()); })
      .def("rooted_count", &rooted_count)
      .def("mirrored", [](const Triangulation& t) { return mirrored(t); })
      .def("to_text", &io::triangulation_to_text)
      .def("__repr__", [](const Triangulation& t) {
        return "<Triangulation n=" + std::to_string(t.n()) + " class=" +
               map_class_name(t.map_class()) + ">";
      });

  m.def("build_from_rotation",
        [](std::vector<int32_t> twin, std::vector<int32_t> next, std::vector<int32_t> origin,
           const std::string& cls) {
          return build_from_rotation(std::move(twin), std::move(next), std::move(origin),
                                     class_from(cls));
        },
        py::arg("twin"), py::arg("next"), py::arg("origin"), py::arg("map_class") = "simple");
  m.def("from_faces",
        [](const std::vector<std::vector<int32_t>>& faces, const std::string& cls) {
          return build_from_rotation(RotationSystem::from_faces(faces), class_from(cls));
        },
        py::arg("faces"), py::arg("map_class") = "simple");
  m.def("double_fan", &double_fan, py::arg("n"));
  m.def("are_isomorphic", &are_isomorphic);
  m.def("triangulation_from_text", &io::triangulation_from_text);
  m.def("load_triangulation", &io::load_triangulation);
  m.def("save_triangulation", &io::save_triangulation);

  m.def("flip_edge", &flip_edge, py::arg("t"), py::arg("edge"));
  m.def("classify_flip",
        [](const Triangulation& t, int32_t e) { return flip_reject_name(classify_flip(t, e)); });
  m.def("count_flippable_edges", &count_flippable_edges);
  m.def("enumerate_triangulations",
        [](int32_t n, const std::string& cls) {
          std::vector<py::bytes> codes;
          for (auto& code : enumerate_triangulations(n, class_from(cls)))
            codes.emplace_back(code);
          return codes;
        },
        py::arg("n"), py::arg("map_class") = "simple");
  m.def("enumerate_classes",
        [](int32_t n, const std::string& cls) { return enumerate_classes(n, class_from(cls)); },
        py::arg("n"), py::arg("map_class") = "simple");
  m.def("exact_sample",
        [](int32_t n, const std::string& cls, int32_t count, uint64_t seed) {
          ExactSampler sampler(n, class_from(cls), seed);
          std::vector<Triangulation> out;
          out.reserve(count);
          for (int32_t i = 0; i < count; ++i) out.push_back(sampler.next());
          return out;
        },
        py::arg("n"), py::arg("map_class") = "simple", py::arg("count") = 1,
        py::arg("seed") = 0);
  m.def("mcmc_sample",
        [](int32_t n, const std::string& cls, int32_t count, uint64_t seed, int64_t burn_in,
           int64_t thinning) {
          EnsembleSpec spec;
          spec.n = n;
          spec.map_class = class_from(cls);
          spec.seed = seed;
          spec.burn_in = burn_in;
          spec.thinning = thinning;
          McmcSampler sampler(spec);
          std::vector<Triangulation> out;
          out.reserve(count);
          for (int32_t i = 0; i < count; ++i) out.push_back(sampler.next());
          return out;
        },
        py::arg("n"), py::arg("map_class") = "simple", py::arg("count") = 1,
        py::arg("seed") = 0, py::arg("burn_in") = -1, py::arg("thinning") = -1);

  m.def("hop_distances",
        [](const Triangulation& t, int32_t source) { return hop_distances(t, source); });
  m.def("hop_diameter", [](const Triangulation& t) { return hop_diameter(t); });
  m.def("rescale_factor", &rescale_factor);
  m.def("rescaled_diameter", &rescaled_diameter);
  m.def("rescaled_space",
        [](const Triangulation& t) { return space_to_rows(rescaled_space(t)); });
  m.def("two_point_distance", [](const Triangulation& t, uint64_t seed) {
    Rng rng(seed);
    return two_point_distance(t, rng);
  });
  m.def("ball_growth",
        [](const Triangulation& t, int32_t centers, uint64_t seed) {
          Rng rng(seed);
          const BallGrowthProfile p = ball_growth(t, centers, rng);
          return py::make_tuple(p.radii, p.mean_volumes);
        },
        py::arg("t"), py::arg("centers") = 64, py::arg("seed") = 0);
  m.def("dimension_estimate",
        [](const std::vector<double>& radii, const std::vector<double>& volumes, double r_min,
           double r_max) {
          BallGrowthProfile p;
          p.radii = radii;
          p.mean_volumes = volumes;
          return dimension_estimate(p, FitWindow{r_min, r_max});
        },
        py::arg("radii"), py::arg("mean_volumes"), py::arg("r_min"), py::arg("r_max"));

  m.def("hausdorff_distance",
        [](const std::vector<int32_t>& a, const std::vector<int32_t>& b,
           const std::vector<std::vector<double>>& ambient) {
          return hausdorff_distance(a, b, space_from_rows(ambient));
        });
  m.def("gh_distance_exact",
        [](const std::vector<std::vector<double>>& x, const std::vector<std::vector<double>>& y,
           int64_t budget) {
          const GhResult r = gh_distance_exact(space_from_rows(x), space_from_rows(y), budget);
          return py::make_tuple(r.value, r.witness.pairs, r.exact);
        },
        py::arg("x"), py::arg("y"), py::arg("budget") = 200'000'000);
  m.def("gh_lower_bounds",
        [](const std::vector<std::vector<double>>& x, const std::vector<std::vector<double>>& y) {
          return gh_lower_bounds(space_from_rows(x), space_from_rows(y));
        });

  m.def("truncated_variance", &truncated_variance);
  m.def("log_divergence_check", &log_divergence_check);
  m.def("gff_covariance",
        [](double theta_x, double phi_x, double theta_y, double phi_y, int32_t l_max) {
          return gff_covariance(SpherePoint{theta_x, phi_x}, SpherePoint{theta_y, phi_y},
                                HarmonicBasis(l_max));
        });
  m.def("gff_field_value",
        [](int32_t l_max, uint64_t seed, double theta, double phi) {
          const HarmonicBasis basis(l_max);
          return field_value(basis, sample_gff(basis, seed), theta, phi);
        });
  m.def("lqg_total_mass",
        [](int32_t l_max, uint64_t seed, double gamma, int32_t n_theta, int32_t n_phi) {
          const HarmonicBasis basis(l_max);
          return lqg_measure(basis, sample_gff(basis, seed), gamma, n_theta, n_phi).total_mass();
        },
        py::arg("l_max"), py::arg("seed"), py::arg("gamma"), py::arg("n_theta") = 128,
        py::arg("n_phi") = 256);
  m.def("gamma_brownian", &gamma_brownian);

  m.def("ks_statistic", [](const std::vector<double>& a, const std::vector<double>& b) {
    return ks_statistic(a, b);
  });
  m.def("run_experiment",
        [](const std::vector<int32_t>& n_values, int32_t samples_per_n,
           const std::string& observable, const std::string& cls, uint64_t master_seed,
           int32_t chains, int64_t burn_in, int64_t thinning, int32_t jobs) {
          ExperimentConfig config;
          config.n_values = n_values;
          config.samples_per_n = samples_per_n;
          config.observable = observable_from_name(observable);
          config.map_class = class_from(cls);
          config.master_seed = master_seed;
          config.chains = chains;
          config.burn_in = burn_in;
          config.thinning = thinning;
          const ExperimentResult result = run_experiment(config, jobs);
          py::dict out;
          for (const auto& d : result.distributions) out[py::int_(d.n)] = d.samples;
          return out;
        },
        py::arg("n_values"), py::arg("samples_per_n"), py::arg("observable") = "diameter",
        py::arg("map_class") = "simple", py::arg("master_seed") = 0, py::arg("chains") = 1,
        py::arg("burn_in") = -1, py::arg("thinning") = -1, py::arg("jobs") = 1);

  m.def("derive_seed", [](uint64_t master, const std::string& purpose, uint64_t index) {
    return derive_seed(master, purpose, index);
  });
}
