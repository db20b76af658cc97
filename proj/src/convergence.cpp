#include "blab/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "blab/metric.hpp"
#include "blab/stats.hpp"

namespace blab {

const char* observable_name(Observable o) {
  return o == Observable::RescaledDiameter ? "rescaled_diameter" : "two_point";
}

Observable observable_from_name(const std::string& name) {
  if (name == "rescaled_diameter" || name == "diameter") return Observable::RescaledDiameter;
  if (name == "two_point" || name == "two-point") return Observable::TwoPoint;
  fail(Errc::InvalidArgument, "unknown observable: " + name);
}

void ExperimentConfig::validate() const {
  if (n_values.empty()) fail(Errc::InvalidArgument, "empty n ladder");
  for (size_t i = 1; i < n_values.size(); ++i)
    if (n_values[i] <= n_values[i - 1])
      fail(Errc::InvalidArgument, "n ladder must be strictly increasing");
  if (samples_per_n < 100) fail(Errc::InvalidArgument, "samples_per_n must be >= 100");
  if (chains < 1) fail(Errc::InvalidArgument, "chains must be >= 1");
  if (burn_in_factor < 0 || thin_factor < 0)
    fail(Errc::InvalidArgument, "burn_in_factor and thin_factor must be >= 0");
  for (int32_t n : n_values) {
    EnsembleSpec spec;
    spec.n = n;
    spec.map_class = map_class;
    spec.validate();
  }
}

namespace {

struct ChainTask {
  size_t n_slot;
  int32_t n;
  int32_t chain;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, int32_t jobs) {
  config.validate();
  ExperimentResult result;
  result.distributions.resize(config.n_values.size());
  std::vector<std::vector<SampleRecord>> per_n(config.n_values.size());
  for (size_t s = 0; s < config.n_values.size(); ++s) {
    result.distributions[s].observable = observable_name(config.observable);
    result.distributions[s].n = config.n_values[s];
    result.distributions[s].samples.assign(config.samples_per_n, 0.0);
    per_n[s].resize(config.samples_per_n);
  }

  std::vector<ChainTask> tasks;
  for (size_t s = 0; s < config.n_values.size(); ++s)
    for (int32_t c = 0; c < config.chains; ++c)
      tasks.push_back({s, config.n_values[s], c});

  auto run_task = [&](const ChainTask& task) {
    const uint64_t n_seed = derive_seed(config.master_seed, "n", task.n);
    const uint64_t chain_seed = derive_seed(n_seed, "chain", task.chain);
    const int64_t edges = 3LL * (task.n - 2);
    EnsembleSpec spec;
    spec.n = task.n;
    spec.map_class = config.map_class;
    spec.burn_in = config.burn_in >= 0 ? config.burn_in : config.burn_in_factor * edges;
    spec.thinning = config.thinning >= 0 ? config.thinning : config.thin_factor * edges;
    spec.seed = chain_seed;
    McmcSampler sampler(spec);
    for (int32_t index = task.chain; index < config.samples_per_n; index += config.chains) {
      const Triangulation t = sampler.next();
      double value = 0.0;
      switch (config.observable) {
        case Observable::RescaledDiameter:
          value = rescaled_diameter(t);
          break;
        case Observable::TwoPoint: {
          Rng rng(derive_seed(n_seed, "two-point", index));
          value = two_point_distance(t, rng);
          break;
        }
      }
      result.distributions[task.n_slot].samples[index] = value;
      per_n[task.n_slot][index] = SampleRecord{task.n, task.chain, chain_seed, index, value};
    }
  };

  if (jobs <= 1 || tasks.size() <= 1) {
    for (const auto& task : tasks) run_task(task);
  } else {
    std::atomic<size_t> cursor{0};
    const size_t workers = std::min<size_t>(jobs, tasks.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          while (true) {
            const size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            run_task(tasks[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  for (auto& records : per_n)
    result.records.insert(result.records.end(), records.begin(), records.end());
  return result;
}

double ks_statistic(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) fail(Errc::InsufficientData, "ks_statistic of empty sample");
  std::vector<double> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  size_t i = 0, j = 0;
  double sup = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double x = std::min(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    const double fa = static_cast<double>(i) / static_cast<double>(sa.size());
    const double fb = static_cast<double>(j) / static_cast<double>(sb.size());
    sup = std::max(sup, std::fabs(fa - fb));
  }
  return sup;
}

double ks_statistic(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  return ks_statistic(a.samples, b.samples);
}

StabilityReport stability_report(const std::vector<EmpiricalDistribution>& distributions,
                                 double drift_tolerance, double ks_slack) {
  if (distributions.size() < 3)
    fail(Errc::InsufficientData, "stability_report needs >= 3 sizes");
  StabilityReport report;
  report.drift_tolerance = drift_tolerance;
  report.ks_slack = ks_slack;
  for (const auto& d : distributions) {
    if (d.samples.empty()) fail(Errc::InsufficientData, "empty distribution");
    report.n_values.push_back(d.n);
    report.medians.push_back(stats::median(d.samples));
    report.iqrs.push_back(stats::quantile(d.samples, 0.75) - stats::quantile(d.samples, 0.25));
  }
  for (size_t i = 0; i + 1 < distributions.size(); ++i) {
    report.rows.push_back(StabilityRow{distributions[i].n, distributions[i + 1].n,
                                       ks_statistic(distributions[i], distributions[i + 1])});
  }
  const size_t k = report.medians.size();
  report.median_drift =
      std::fabs(report.medians[k - 1] - report.medians[k - 2]) / std::fabs(report.medians[k - 2]);
  bool ks_monotone = true;
  for (size_t i = 0; i + 1 < report.rows.size(); ++i)
    if (report.rows[i + 1].ks > report.rows[i].ks + ks_slack) ks_monotone = false;
  report.pass = ks_monotone && report.median_drift < drift_tolerance;
  return report;
}

std::string StabilityReport::render() const {
  std::string out;
  for (size_t i = 0; i < n_values.size(); ++i) {
    out += "n=" + std::to_string(n_values[i]) + " median=" + io::format_double(medians[i]) +
           " iqr=" + io::format_double(iqrs[i]) + "\n";
  }
  for (const auto& row : rows) {
    out += "ks(" + std::to_string(row.n_low) + "," + std::to_string(row.n_high) +
           ")=" + io::format_double(row.ks) + "\n";
  }
  out += "median_drift=" + io::format_double(median_drift) + " (tolerance " +
         io::format_double(drift_tolerance) + ")\n";
  out += pass ? "PASS\n" : "FAIL\n";
  return out;
}

io::Manifest experiment_manifest(const ExperimentConfig& config, const ExperimentResult& result) {
  io::Manifest m;
  m.set("command", "converge");
  std::string ladder;
  for (size_t i = 0; i < config.n_values.size(); ++i) {
    if (i) ladder += ',';
    ladder += std::to_string(config.n_values[i]);
  }
  m.set("n_values", ladder);
  m.set("samples_per_n", std::to_string(config.samples_per_n));
  m.set("observable", observable_name(config.observable));
  m.set("class", map_class_name(config.map_class));
  m.set("master_seed", std::to_string(config.master_seed));
  m.set("chains", std::to_string(config.chains));
  m.set("burn_in", std::to_string(config.burn_in));
  m.set("thinning", std::to_string(config.thinning));
  m.set("burn_in_factor", std::to_string(config.burn_in_factor));
  m.set("thin_factor", std::to_string(config.thin_factor));
  m.record_fields = {"n", "chain_seed", "value"};
  for (const auto& rec : result.records)
    m.records.push_back(
        {std::to_string(rec.n), std::to_string(rec.chain_seed), io::format_double(rec.value)});
  return m;
}

std::string summary_csv(const ExperimentConfig& config, const ExperimentResult& result) {
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < result.distributions.size(); ++i) {
    const auto& dist = result.distributions[i];
    const double med = stats::median(dist.samples);
    const double iqr =
        stats::quantile(dist.samples, 0.75) - stats::quantile(dist.samples, 0.25);
    std::string ks;
    if (i + 1 < result.distributions.size())
      ks = io::format_double(ks_statistic(dist, result.distributions[i + 1]));
    rows.push_back({std::to_string(dist.n), observable_name(config.observable),
                    io::format_double(med), io::format_double(iqr), ks});
  }
  return io::csv_to_text({"n", "observable", "median", "iqr", "ks_to_next"}, rows);
}

}  // namespace blab
