#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drsolve/constraint_pair.hpp"
#include "drsolve/metric.hpp"
#include "drsolve/scheme.hpp"

namespace drsolve {

struct TraceOptions {
  int stride = 10;               // sampling stride for all recorded series
  bool record_errors = true;     // epsilon time series
  bool record_per_type = false;  // per-type epsilon_i (by_type partition)
  bool record_metric = false;    // tuned parameter values
  bool record_iterates = false;  // iterate snapshots (rows of the PCA matrix)
};

struct RunConfig {
  std::int64_t max_iterations = 10000;
  std::uint64_t seed = 0;  // stream seed; already trial-derived by the caller
  double init_lo = 0.0;
  double init_hi = 1.0;
  double error_tolerance = 1e-8;
  TraceOptions trace;

  void validate() const;
};

/// Optional adaptive tuning attached to a run. Parameters start from the
/// problem's current values (1 by default) unless initial_eta is given.
struct TunerConfig {
  double alpha = 0.0;
  Granularity granularity = Granularity::by_type;
  TuneMode mode = TuneMode::mean_relative;
  int cadence = 1;
  std::vector<double> initial_eta;  // empty = keep problem defaults
};

enum class RunOutcome { solved, capped, diverged };

std::string outcome_name(RunOutcome o);

/// Everything recorded about one trial.
struct RunTrace {
  RunOutcome outcome = RunOutcome::capped;
  std::int64_t iterations = 0;  // iteration index of the solve, or the cap
  std::optional<std::string> solution;
  std::string diagnostic;  // set when outcome == diverged

  // Sampled series; row r corresponds to iterate sample_iters[r].
  std::vector<std::int64_t> sample_iters;
  std::vector<double> epsilon;
  std::vector<std::string> type_labels;
  std::vector<std::vector<double>> per_type;  // one row per sample
  std::vector<std::string> metric_labels;
  std::vector<std::vector<double>> metric;    // one row per sample
  Eigen::MatrixXd iterates;                   // one row per sample when recorded

  std::uint64_t init_hash = 0;  // FNV-1a of the initial iterate bytes
  MetricState final_metric;     // meaningful when a tuner was attached
};

/// Seeds the iterate uniformly in [init_lo, init_hi], iterates the scheme,
/// records the requested series, applies the tuner between iterations, and
/// stops at the first verified solution or at max_iterations. Non-finite
/// iterates abort the trial with outcome == diverged.
RunTrace run(const IterationScheme& scheme, ConstraintPair& cp, const RunConfig& config,
             const std::optional<TunerConfig>& tuner = std::nullopt);

std::uint64_t fnv1a_hash(const Eigen::VectorXd& v);

}  // namespace drsolve
