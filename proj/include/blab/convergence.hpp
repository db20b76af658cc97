#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blab/io.hpp"
#include "blab/sampler.hpp"

namespace blab {

enum class Observable { RescaledDiameter, TwoPoint };

const char* observable_name(Observable o);
Observable observable_from_name(const std::string& name);

/// Samples of one real observable of the random triangulation at a fixed n.
struct EmpiricalDistribution {
  std::string observable;
  int32_t n = 0;
  std::vector<double> samples;
};

struct SampleRecord {
  int32_t n = 0;
  int32_t chain = 0;
  uint64_t chain_seed = 0;
  int32_t index = 0;  // position within the distribution for this n
  double value = 0.0;
};

/// Ensemble experiment across a ladder of sizes. Every random stream is
/// derived from master_seed, so (config, master_seed) pins each sample bit
/// for bit, independent of worker count.
struct ExperimentConfig {
  std::vector<int32_t> n_values;
  int32_t samples_per_n = 100;
  Observable observable = Observable::RescaledDiameter;
  MapClass map_class = MapClass::Simple;
  uint64_t master_seed = 0;
  int32_t chains = 1;     // independent chains per n; part of the config
  int64_t burn_in = -1;   // -1: burn_in_factor * E(n)
  int64_t thinning = -1;  // -1: thin_factor * E(n)
  // Size-aware defaults used when burn_in / thinning are negative, so one
  // config can scale across an n ladder.
  int32_t burn_in_factor = 50;
  int32_t thin_factor = 1;

  void validate() const;
};

struct ExperimentResult {
  std::vector<EmpiricalDistribution> distributions;  // one per n, in order
  std::vector<SampleRecord> records;                 // (n, index) order
};

ExperimentResult run_experiment(const ExperimentConfig& config, int32_t jobs = 1);

/// Two-sample Kolmogorov-Smirnov statistic: sup |F_a - F_b| in [0, 1].
double ks_statistic(const std::vector<double>& a, const std::vector<double>& b);
double ks_statistic(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

struct StabilityRow {
  int32_t n_low = 0;
  int32_t n_high = 0;
  double ks = 0.0;
};

/// Drift/KS summary across an increasing ladder of n. PASS when consecutive
/// KS statistics are non-increasing within `ks_slack` and the median drifts
/// less than `drift_tolerance` (relative) over the top octave.
struct StabilityReport {
  std::vector<int32_t> n_values;
  std::vector<double> medians;
  std::vector<double> iqrs;
  std::vector<StabilityRow> rows;
  double median_drift = 0.0;
  double drift_tolerance = 0.15;
  double ks_slack = 0.02;
  bool pass = false;

  std::string render() const;
};

StabilityReport stability_report(const std::vector<EmpiricalDistribution>& distributions,
                                 double drift_tolerance = 0.15, double ks_slack = 0.02);

/// Reproducibility manifest: config header plus one record per sample
/// (n, chain seed, observable value).
io::Manifest experiment_manifest(const ExperimentConfig& config, const ExperimentResult& result);

/// Summary CSV rows `n,observable,median,iqr,ks_to_next` (empty ks for the
/// last n).
std::string summary_csv(const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace blab
