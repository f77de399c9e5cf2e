#include "drsolve/run.hpp"

#include <cstring>

#include "drsolve/rng.hpp"

namespace drsolve {

void RunConfig::validate() const {
  if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (!(init_lo <= init_hi)) throw ConfigError("empty initialization interval");
  if (trace.stride < 1) throw ConfigError("trace stride must be >= 1");
}

std::string outcome_name(RunOutcome o) {
  switch (o) {
    case RunOutcome::solved: return "solved";
    case RunOutcome::capped: return "capped";
    case RunOutcome::diverged: return "diverged";
  }
  return "?";
}

std::uint64_t fnv1a_hash(const Eigen::VectorXd& v) {
  std::uint64_t h = 1469598103934665603ull;
  const auto* bytes = reinterpret_cast<const unsigned char*>(v.data());
  const std::size_t n = static_cast<std::size_t>(v.size()) * sizeof(double);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Metric series rows are capped so that location/item granularities with
// thousands of parameters do not blow up the trace.
constexpr std::size_t kMaxRecordedMetricGroups = 64;

}  // namespace

RunTrace run(const IterationScheme& scheme, ConstraintPair& cp, const RunConfig& config,
             const std::optional<TunerConfig>& tuner) {
  validate(scheme);
  config.validate();

  const Eigen::Index dim = cp.layout()->total_dim();
  RunTrace trace;

  const bool has_tuner = tuner.has_value() && tuner->granularity != Granularity::none;
  const bool tuner_by_type = has_tuner && tuner->granularity == Granularity::by_type;

  // Per-type diagnostics always use the by_type grouping. When the tuner runs
  // at by_type the same grouping and the live eta values serve both; at finer
  // granularities the per-type series is the plain normalized rms (eta = 1).
  Partition type_partition;
  const bool want_types = config.trace.record_per_type || tuner_by_type;
  if (want_types) {
    type_partition = cp.metric_partition(Granularity::by_type);
    type_partition.validate(dim);
    trace.type_labels = type_partition.labels;
  }

  MetricState metric;
  Partition tuner_partition;
  if (has_tuner) {
    if (!cp.tunable() && tuner->alpha != 0.0)
      throw ConfigError("metric tuning requested for a problem without metric parameters");
    metric.granularity = tuner->granularity;
    metric.alpha = tuner->alpha;
    metric.mode = tuner->mode;
    metric.cadence = tuner->cadence;
    if (metric.cadence < 1) throw ConfigError("tuner cadence must be >= 1");
    metric.eta = cp.metric_values(tuner->granularity);
    if (!tuner->initial_eta.empty()) {
      if (tuner->initial_eta.size() != metric.eta.size())
        throw ConfigError("initial_eta size does not match the tuning granularity");
      metric.eta = tuner->initial_eta;
      cp.set_metric_values(metric.granularity, metric.eta);
    }
    if (tuner_by_type) {
      tuner_partition = type_partition;
    } else {
      tuner_partition = cp.metric_partition(tuner->granularity);
      tuner_partition.validate(dim);
    }
    if (metric.eta.size() <= kMaxRecordedMetricGroups)
      trace.metric_labels = cp.metric_labels(tuner->granularity);
  }

  std::vector<double> type_ones;
  if (want_types && !tuner_by_type)
    type_ones.assign(type_partition.group_size.size(), 1.0);

  // Uniform initialization; one stream per trial, coordinates in layout order.
  RngStream rng(config.seed, 0);
  Eigen::VectorXd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x[i] = rng.uniform(config.init_lo, config.init_hi);
  trace.init_hash = fnv1a_hash(x);

  const std::int64_t max_rows = config.max_iterations / config.trace.stride + 1;
  if (config.trace.record_iterates) trace.iterates.resize(max_rows, dim);
  Eigen::Index rows = 0;

  StepWorkspace ws;
  ws.resize(dim);
  Eigen::VectorXd residual(dim);
  Eigen::VectorXd row_buffer;

  trace.outcome = RunOutcome::capped;
  trace.iterations = config.max_iterations;

  const bool record_metric_series =
      config.trace.record_metric && has_tuner && !trace.metric_labels.empty();

  for (std::int64_t t = 1; t <= config.max_iterations; ++t) {
    // Samples are indexed by the pre-step iterate: row for iteration k holds
    // x_k together with eps(x_k), which the step computes as a byproduct.
    const bool sample_prev = ((t - 1) % config.trace.stride) == 0;
    if (sample_prev && config.trace.record_iterates) row_buffer = x;

    step_with_residual(scheme, cp, x, ws, residual);

    if (!x.allFinite()) {
      trace.outcome = RunOutcome::diverged;
      trace.iterations = t;
      trace.diagnostic = "non-finite iterate at iteration " + std::to_string(t) +
                         "; divergence or misconfiguration";
      break;
    }

    TypedErrors type_errors;
    if (want_types)
      type_errors = typed_errors_from_residual(residual, type_partition,
                                               tuner_by_type ? metric.eta : type_ones);

    if (sample_prev) {
      trace.sample_iters.push_back(t - 1);
      if (config.trace.record_errors) trace.epsilon.push_back(residual.norm());
      if (config.trace.record_per_type) trace.per_type.push_back(type_errors.per_group);
      if (record_metric_series) trace.metric.push_back(metric.eta);
      if (config.trace.record_iterates) trace.iterates.row(rows++) = row_buffer;
    }

    if (has_tuner && metric.alpha != 0.0 && (t % metric.cadence) == 0) {
      const TypedErrors errs =
          tuner_by_type ? type_errors
                        : typed_errors_from_residual(residual, tuner_partition, metric.eta);
      metric = update_metrics(metric, errs);
      cp.set_metric_values(metric.granularity, metric.eta);
    }

    if (auto sol = cp.verify(x)) {
      trace.outcome = RunOutcome::solved;
      trace.iterations = t;
      trace.solution = std::move(sol);
      break;
    }
  }

  if (config.trace.record_iterates) trace.iterates.conservativeResize(rows, dim);
  trace.final_metric = metric;
  return trace;
}

}  // namespace drsolve
