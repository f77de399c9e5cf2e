#include "drsolve/metric.hpp"

#include <cassert>
#include <cmath>

#include "drsolve/constraint_pair.hpp"

namespace drsolve {

std::string granularity_name(Granularity g) {
  switch (g) {
    case Granularity::none: return "none";
    case Granularity::by_type: return "type";
    case Granularity::by_type_location: return "type_location";
    case Granularity::by_type_location_item: return "type_location_item";
  }
  return "?";
}

Granularity granularity_from_name(const std::string& name) {
  if (name == "none") return Granularity::none;
  if (name == "type" || name == "by_type") return Granularity::by_type;
  if (name == "type_location" || name == "by_type_location") return Granularity::by_type_location;
  if (name == "type_location_item" || name == "by_type_location_item")
    return Granularity::by_type_location_item;
  throw ConfigError("unknown granularity '" + name + "'");
}

std::string tune_mode_name(TuneMode m) {
  return m == TuneMode::mean_relative ? "mean_relative" : "first_anchored";
}

TuneMode tune_mode_from_name(const std::string& name) {
  if (name == "mean_relative") return TuneMode::mean_relative;
  if (name == "first_anchored") return TuneMode::first_anchored;
  throw ConfigError("unknown tuning mode '" + name + "'");
}

TypedErrors typed_errors_from_residual(const Eigen::VectorXd& residual,
                                       const Partition& partition,
                                       const std::vector<double>& eta) {
  const int k = partition.group_count();
  if (static_cast<int>(eta.size()) != k)
    throw ConfigError("metric parameter count does not match the partition");
  for (auto g : partition.group_size)
    if (g == 0) throw ConfigError("empty metric group");

  TypedErrors e;
  e.per_group.assign(static_cast<std::size_t>(k), 0.0);
  for (Eigen::Index i = 0; i < residual.size(); ++i) {
    const double r = residual[i];
    e.per_group[static_cast<std::size_t>(partition.group_of[static_cast<std::size_t>(i)])] +=
        r * r;
  }
  double sum_sq = 0.0;
  for (int i = 0; i < k; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    e.per_group[ui] = std::sqrt(e.per_group[ui] / static_cast<double>(partition.group_size[ui])) /
                      eta[ui];
    sum_sq += e.per_group[ui] * e.per_group[ui];
  }
  e.aggregate = std::sqrt(sum_sq / static_cast<double>(k));
  return e;
}

TypedErrors typed_errors(const PointVector& x, const ConstraintPair& cp,
                         const MetricState& state, const Partition& partition) {
  partition.validate(x.size());
  Eigen::VectorXd pa(x.size()), pb(x.size());
  cp.project_a(x.values(), pa);
  Eigen::VectorXd ra = 2.0 * pa - x.values();
  cp.project_b(ra, pb);
  Eigen::VectorXd residual = pa - pb;
  return typed_errors_from_residual(residual, partition, state.eta);
}

MetricState update_metrics(const MetricState& state, const TypedErrors& errors) {
  const std::size_t k = state.eta.size();
  if (errors.per_group.size() != k)
    throw ConfigError("typed errors computed with a different grouping");
  MetricState next = state;
  if (k == 0) return next;

  if (state.mode == TuneMode::mean_relative) {
    if (errors.aggregate == 0.0) return next;  // feasible point, nothing to tune
    for (std::size_t i = 0; i < k; ++i) {
      const double m = 1.0 + state.alpha * (errors.per_group[i] / errors.aggregate - 1.0);
      next.eta[i] = state.eta[i] * m;
      assert(next.eta[i] > 0.0);
    }
  } else {
    if (errors.per_group[0] == 0.0) return next;
    next.eta[0] = 1.0;
    for (std::size_t i = 1; i < k; ++i) {
      const double m = 1.0 + state.alpha * (errors.per_group[i] / errors.per_group[0] - 1.0);
      next.eta[i] = state.eta[i] * m;
      assert(next.eta[i] > 0.0);
    }
  }
  return next;
}

}  // namespace drsolve
