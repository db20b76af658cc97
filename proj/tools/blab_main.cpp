#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blab/convergence.hpp"
#include "blab/gff.hpp"
#include "blab/gromov_hausdorff.hpp"
#include "blab/io.hpp"
#include "blab/lqg.hpp"
#include "blab/map.hpp"
#include "blab/metric.hpp"
#include "blab/sampler.hpp"
#include "blab/stats.hpp"

namespace fs = std::filesystem;
using namespace blab;

namespace {

int64_t env_budget(int64_t fallback) {
  if (const char* raw = std::getenv("BLAB_BUDGET_NODES")) {
    char* end = nullptr;
    const int64_t v = std::strtoll(raw, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    fail(Errc::InvalidArgument, "BLAB_BUDGET_NODES must be a positive integer");
  }
  return fallback;
}

std::string hex_encode(const std::string& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xF]);
  }
  return out;
}

std::string sample_file_name(int32_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "sample_%05d.tri", index);
  return buf;
}

void parse_mesh(const std::string& text, int32_t& rows, int32_t& cols) {
  const auto sep = text.find('x');
  if (sep == std::string::npos)
    fail(Errc::InvalidArgument, "mesh must look like 128x256");
  rows = std::stoi(text.substr(0, sep));
  cols = std::stoi(text.substr(sep + 1));
}

int run_sample(int32_t n, const std::string& cls_name, const std::string& method, int32_t count,
               uint64_t seed, int64_t burn_in, int64_t thin, const std::string& out_dir) {
  EnsembleSpec spec;
  spec.n = n;
  spec.map_class = map_class_from_name(cls_name);
  spec.method = method == "enumerate" ? SamplerMethod::Enumerate : SamplerMethod::FlipMcmc;
  spec.burn_in = burn_in;
  spec.thinning = thin;
  spec.seed = derive_seed(seed, "sample-chain", 0);
  spec.validate();
  fs::create_directories(out_dir);

  McmcSampler mcmc(spec);
  std::unique_ptr<ExactSampler> exact;
  if (spec.method == SamplerMethod::Enumerate) {
    EnumerationBudget budget;
    budget.max_operations = env_budget(budget.max_operations);
    exact = std::make_unique<ExactSampler>(n, spec.map_class, spec.seed, budget);
  }
  io::Manifest manifest;
  manifest.set("command", "sample");
  manifest.set("n", std::to_string(n));
  manifest.set("class", cls_name);
  manifest.set("method", method);
  manifest.set("count", std::to_string(count));
  manifest.set("master_seed", std::to_string(seed));
  manifest.set("chain_seed", std::to_string(spec.seed));
  manifest.set("burn_in", std::to_string(burn_in));
  manifest.set("thinning", std::to_string(thin));
  manifest.set("effective_burn_in", std::to_string(spec.effective_burn_in()));
  manifest.set("effective_thinning", std::to_string(spec.effective_thinning()));
  manifest.record_fields = {"index", "seed", "file"};

  std::vector<std::vector<std::string>> csv_rows;
  for (int32_t i = 0; i < count; ++i) {
    const Triangulation t = exact ? exact->next() : mcmc.next();
    const std::string name = sample_file_name(i);
    io::save_triangulation(t, (fs::path(out_dir) / name).string());
    const uint64_t sample_seed = derive_seed(seed, "sample", i);
    manifest.records.push_back({std::to_string(i), std::to_string(sample_seed), name});
    Rng rng(sample_seed);
    csv_rows.push_back({std::to_string(n), std::to_string(sample_seed),
                        io::format_double(rescaled_diameter(t)),
                        io::format_double(two_point_distance(t, rng))});
  }
  io::save_manifest(manifest, (fs::path(out_dir) / "manifest.txt").string());
  io::save_csv((fs::path(out_dir) / "samples.csv").string(),
               {"n", "seed", "diameter", "two_point"}, csv_rows);
  std::cout << "wrote " << count << " samples to " << out_dir << "\n";
  return 0;
}

int run_enumerate(int32_t n, const std::string& cls_name, const std::string& out_path,
                  bool rooted) {
  EnumerationBudget budget;
  budget.max_operations = env_budget(budget.max_operations);
  const auto classes = enumerate_classes(n, map_class_from_name(cls_name), budget);
  if (rooted) {
    int64_t total = 0;
    for (const auto& t : classes) total += rooted_count(t);
    std::cout << total << "\n";
  } else {
    std::cout << classes.size() << "\n";
  }
  if (!out_path.empty()) {
    std::string text;
    for (const auto& t : classes) text += hex_encode(canonical_code(t)) + "\n";
    io::write_file(out_path, text);
  }
  return 0;
}

int run_metric(const std::string& in_path, const std::string& profile_path, int32_t centers,
               uint64_t seed, bool dimension, const std::string& window_text) {
  const Triangulation t = io::load_triangulation(in_path);
  std::cout << "n " << t.n() << "\n";
  std::cout << "hop_diameter " << hop_diameter(t) << "\n";
  std::cout << "diameter " << io::format_double(rescaled_diameter(t)) << "\n";
  Rng two_point_rng(derive_seed(seed, "two-point", 0));
  std::cout << "two_point " << io::format_double(two_point_distance(t, two_point_rng)) << "\n";
  if (!profile_path.empty() || dimension) {
    Rng rng(derive_seed(seed, "ball-growth", 0));
    const BallGrowthProfile profile = ball_growth(t, centers, rng);
    if (!profile_path.empty()) io::write_file(profile_path, io::profile_to_csv(profile));
    if (dimension) {
      FitWindow window = bulk_window(profile);
      if (!window_text.empty()) {
        const auto sep = window_text.find(':');
        if (sep == std::string::npos)
          fail(Errc::InvalidArgument, "window must look like 2:12");
        window.r_min = std::stod(window_text.substr(0, sep));
        window.r_max = std::stod(window_text.substr(sep + 1));
      }
      std::cout << "dimension " << io::format_double(dimension_estimate(profile, window))
                << " (window " << io::format_double(window.r_min) << ":"
                << io::format_double(window.r_max) << ")\n";
    }
  }
  return 0;
}

int run_gh(const std::string& x_path, const std::string& y_path, bool lower_only) {
  const FiniteMetricSpace x = io::load_metric_space(x_path);
  const FiniteMetricSpace y = io::load_metric_space(y_path);
  if (lower_only) {
    std::cout << io::format_double(gh_lower_bounds(x, y)) << "\n";
    return 0;
  }
  const GhResult r = gh_distance_exact(x, y, env_budget(200'000'000));
  std::cout << io::format_double(r.value) << "\n";
  return 0;
}

int run_gff(int32_t l_max, uint64_t seed, const std::string& out_path,
            const std::string& grid_text) {
  const HarmonicBasis basis(l_max);
  const GffSample sample = sample_gff(basis, seed);
  std::cout << "l_max " << l_max << "\n";
  std::cout << "variance " << io::format_double(truncated_variance(l_max)) << "\n";
  if (!out_path.empty()) {
    int32_t rows = 64, cols = 128;
    if (!grid_text.empty()) parse_mesh(grid_text, rows, cols);
    const SphereMesh mesh = SphereMesh::build(rows, cols);
    std::vector<double> thetas(rows), phis(cols);
    for (int32_t i = 0; i < rows; ++i) thetas[i] = mesh.cell_center(i, 0).theta;
    for (int32_t k = 0; k < cols; ++k) phis[k] = mesh.cell_center(0, k).phi;
    const auto field = field_on_grid(basis, sample, thetas, phis);
    std::string text;
    for (int32_t i = 0; i < rows; ++i)
      for (int32_t k = 0; k < cols; ++k)
        text += io::format_double(thetas[i]) + " " + io::format_double(phis[k]) + " " +
                io::format_double(field[static_cast<size_t>(i) * cols + k]) + "\n";
    io::write_file(out_path, text);
    io::Manifest manifest;
    manifest.set("command", "gff");
    manifest.set("l_max", std::to_string(l_max));
    manifest.set("seed", std::to_string(seed));
    manifest.set("grid", std::to_string(rows) + "x" + std::to_string(cols));
    io::save_manifest(manifest, out_path + ".manifest");
  }
  return 0;
}

int run_lqg(double gamma, bool brownian, int32_t l_max, uint64_t seed,
            const std::string& mesh_text, const std::string& out_path) {
  if (brownian) gamma = gamma_brownian();
  int32_t rows = 128, cols = 256;
  if (!mesh_text.empty()) parse_mesh(mesh_text, rows, cols);
  const HarmonicBasis basis(l_max);
  const GffSample sample = sample_gff(basis, derive_seed(seed, "gff", 0));
  const LqgMeasure measure = lqg_measure(basis, sample, gamma, rows, cols);
  std::cout << "gamma " << io::format_double(gamma) << "\n";
  std::cout << "total_mass " << io::format_double(measure.total_mass()) << "\n";
  if (!out_path.empty()) {
    std::vector<std::vector<std::string>> csv_rows;
    for (int32_t i = 0; i < rows; ++i) {
      const double area = measure.mesh.cell_area(i);
      for (int32_t k = 0; k < cols; ++k) {
        const SpherePoint c = measure.mesh.cell_center(i, k);
        const int32_t cell = i * cols + k;
        csv_rows.push_back({std::to_string(cell), io::format_double(c.theta),
                            io::format_double(c.phi), io::format_double(area),
                            io::format_double(measure.mass[cell])});
      }
    }
    io::save_csv(out_path, {"cell_id", "theta", "phi", "area", "mass"}, csv_rows);
    io::Manifest manifest;
    manifest.set("command", "lqg");
    manifest.set("gamma", io::format_double(gamma));
    manifest.set("l_max", std::to_string(l_max));
    manifest.set("seed", std::to_string(seed));
    manifest.set("mesh", std::to_string(rows) + "x" + std::to_string(cols));
    io::save_manifest(manifest, out_path + ".manifest");
  }
  return 0;
}

int run_converge(const std::string& ladder, int32_t samples, const std::string& obs_name,
                 const std::string& cls_name, uint64_t seed, int32_t chains, int64_t burn_in,
                 int64_t thin, int32_t burn_factor, int32_t thin_factor,
                 const std::string& out_dir, int32_t jobs) {
  ExperimentConfig config;
  config.burn_in_factor = burn_factor;
  config.thin_factor = thin_factor;
  size_t start = 0;
  while (start <= ladder.size()) {
    const size_t end = ladder.find(',', start);
    const std::string tok =
        end == std::string::npos ? ladder.substr(start) : ladder.substr(start, end - start);
    if (tok.empty()) fail(Errc::InvalidArgument, "bad n ladder");
    config.n_values.push_back(std::stoi(tok));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  config.samples_per_n = samples;
  config.observable = observable_from_name(obs_name);
  config.map_class = map_class_from_name(cls_name);
  config.master_seed = seed;
  config.chains = chains;
  config.burn_in = burn_in;
  config.thinning = thin;

  const ExperimentResult result = run_experiment(config, jobs);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    io::save_manifest(experiment_manifest(config, result),
                      (fs::path(out_dir) / "manifest.txt").string());
    io::write_file((fs::path(out_dir) / "summary.csv").string(), summary_csv(config, result));
  }
  if (result.distributions.size() >= 3) {
    std::cout << stability_report(result.distributions).render();
  } else {
    for (const auto& d : result.distributions)
      std::cout << "n=" << d.n << " median=" << io::format_double(stats::median(d.samples))
                << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blab: a random-surface laboratory (uniform sphere triangulations, "
               "Brownian-map scaling checks, Gromov-Hausdorff oracles, GFF and "
               "Liouville measures)"};
  app.require_subcommand(1);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw uniform triangulations by edge-flip MCMC");
  int32_t n = 6;
  std::string cls = "simple";
  int32_t count = 1;
  uint64_t seed = 0;
  int64_t burn_in = -1, thin = -1;
  std::string out_dir;
  std::string sample_method = "mcmc";
  sample_cmd->add_option("--n", n, "vertex count")->required();
  sample_cmd->add_option("--class", cls, "simple|general")->check(CLI::IsMember({"simple", "general"}));
  sample_cmd->add_option("--method", sample_method, "mcmc|enumerate (exact, small n)")
      ->check(CLI::IsMember({"mcmc", "enumerate"}));
  sample_cmd->add_option("--count", count, "number of samples")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "master seed");
  sample_cmd->add_option("--burn-in", burn_in, "burn-in steps (-1: 50E)");
  sample_cmd->add_option("--thin", thin, "thinning steps (-1: E)");
  sample_cmd->add_option("--out", out_dir, "output directory")->required();

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "count isomorphism classes exactly");
  int32_t enum_n = 6;
  std::string enum_cls = "simple";
  std::string enum_out;
  bool enum_rooted = false;
  enum_cmd->add_option("--n", enum_n, "vertex count")->required();
  enum_cmd->add_option("--class", enum_cls, "simple|general")->check(CLI::IsMember({"simple", "general"}));
  enum_cmd->add_option("--out", enum_out, "write canonical codes (hex, one per line)");
  enum_cmd->add_flag("--rooted", enum_rooted, "print the rooted map count instead");

  // metric
  auto* metric_cmd = app.add_subcommand("metric", "rescaled metric observables of a triangulation");
  std::string metric_in, metric_profile, metric_window;
  int32_t metric_centers = 64;
  uint64_t metric_seed = 0;
  bool metric_dimension = false;
  metric_cmd->add_option("--in", metric_in, "triangulation file")->required();
  metric_cmd->add_option("--profile", metric_profile, "write ball-growth CSV here");
  metric_cmd->add_option("--centers", metric_centers, "BFS centers for ball growth");
  metric_cmd->add_option("--seed", metric_seed, "seed for sampled centers / two-point draw");
  metric_cmd->add_flag("--dimension", metric_dimension, "print log-log dimension estimate");
  metric_cmd->add_option("--window", metric_window, "fit window rmin:rmax");

  // gh
  auto* gh_cmd = app.add_subcommand("gh", "Gromov-Hausdorff distance between matrix files");
  std::string gh_x, gh_y;
  bool gh_lower = false;
  gh_cmd->add_option("--x", gh_x, "first distance matrix")->required();
  gh_cmd->add_option("--y", gh_y, "second distance matrix")->required();
  gh_cmd->add_flag("--lower-bound", gh_lower, "print the cheap lower bound instead");

  // gff
  auto* gff_cmd = app.add_subcommand("gff", "sample the Gaussian free field on the sphere");
  int32_t gff_lmax = 16;
  uint64_t gff_seed = 0;
  std::string gff_out, gff_grid;
  gff_cmd->add_option("--lmax", gff_lmax, "truncation degree")->required()->check(CLI::PositiveNumber);
  gff_cmd->add_option("--seed", gff_seed, "seed");
  gff_cmd->add_option("--out", gff_out, "write `theta phi value` field dump here");
  gff_cmd->add_option("--grid", gff_grid, "dump grid, e.g. 64x128");

  // lqg
  auto* lqg_cmd = app.add_subcommand("lqg", "build the renormalized exp(gamma G) area measure");
  double lqg_gamma = 0.0;
  bool lqg_brownian = false;
  int32_t lqg_lmax = 16;
  uint64_t lqg_seed = 0;
  std::string lqg_mesh, lqg_out;
  auto* gamma_opt = lqg_cmd->add_option("--gamma", lqg_gamma, "coupling constant");
  auto* brownian_opt =
      lqg_cmd->add_flag("--gamma-brownian", lqg_brownian, "use gamma = sqrt(8/3)");
  gamma_opt->excludes(brownian_opt);
  lqg_cmd->add_option("--lmax", lqg_lmax, "field truncation degree");
  lqg_cmd->add_option("--seed", lqg_seed, "seed");
  lqg_cmd->add_option("--mesh", lqg_mesh, "mesh resolution, e.g. 128x256");
  lqg_cmd->add_option("--out", lqg_out, "write `cell_id,theta,phi,area,mass` CSV here");

  // converge
  auto* conv_cmd = app.add_subcommand("converge", "empirical-distribution stability across n");
  std::string conv_n = "64,128,256";
  int32_t conv_samples = 100;
  std::string conv_obs = "diameter";
  std::string conv_cls = "simple";
  uint64_t conv_seed = 0;
  int32_t conv_chains = 1;
  int64_t conv_burn = -1, conv_thin = -1;
  std::string conv_out;
  int32_t conv_jobs = 1;
  conv_cmd->add_option("--n", conv_n, "comma-separated increasing sizes")->required();
  conv_cmd->add_option("--samples", conv_samples, "samples per size (>= 100)")->required();
  conv_cmd->add_option("--observable", conv_obs, "diameter|two-point");
  conv_cmd->add_option("--class", conv_cls, "simple|general");
  conv_cmd->add_option("--seed", conv_seed, "master seed");
  conv_cmd->add_option("--chains", conv_chains, "independent chains per size");
  conv_cmd->add_option("--burn-in", conv_burn, "burn-in steps (-1: burn-in-factor * E)");
  conv_cmd->add_option("--thin", conv_thin, "thinning steps (-1: thin-factor * E)");
  int32_t conv_burn_factor = 50, conv_thin_factor = 1;
  conv_cmd->add_option("--burn-in-factor", conv_burn_factor, "burn-in in units of E(n)");
  conv_cmd->add_option("--thin-factor", conv_thin_factor, "thinning in units of E(n)");
  conv_cmd->add_option("--out", conv_out, "output directory for manifest and summary");
  conv_cmd->add_option("--jobs", conv_jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (sample_cmd->parsed())
      return run_sample(n, cls, sample_method, count, seed, burn_in, thin, out_dir);
    if (enum_cmd->parsed()) return run_enumerate(enum_n, enum_cls, enum_out, enum_rooted);
    if (metric_cmd->parsed())
      return run_metric(metric_in, metric_profile, metric_centers, metric_seed,
                        metric_dimension, metric_window);
    if (gh_cmd->parsed()) return run_gh(gh_x, gh_y, gh_lower);
    if (gff_cmd->parsed()) return run_gff(gff_lmax, gff_seed, gff_out, gff_grid);
    if (lqg_cmd->parsed())
      return run_lqg(lqg_gamma, lqg_brownian, lqg_lmax, lqg_seed, lqg_mesh, lqg_out);
    if (conv_cmd->parsed())
      return run_converge(conv_n, conv_samples, conv_obs, conv_cls, conv_seed, conv_chains,
                          conv_burn, conv_thin, conv_burn_factor, conv_thin_factor, conv_out,
                          conv_jobs);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]";
    if (e.line() > 0) std::cerr << " line " << e.line();
    std::cerr << ": " << e.what() << "\n";
    return e.code() == Errc::ResourceLimit ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
