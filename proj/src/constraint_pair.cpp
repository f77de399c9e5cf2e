#include "drsolve/constraint_pair.hpp"

namespace drsolve {

Partition ConstraintPair::metric_partition(Granularity granularity) const {
  if (granularity == Granularity::none)
    throw ConfigError("no partition at granularity 'none'");
  if (granularity != Granularity::by_type)
    throw ConfigError("granularity '" + granularity_name(granularity) +
                      "' is not supported by this problem");
  Partition p;
  const Eigen::Index dim = layout()->total_dim();
  p.group_of.assign(static_cast<std::size_t>(dim), 0);
  p.group_size = {dim};
  p.labels = {"all"};
  return p;
}

std::vector<double> ConstraintPair::metric_values(Granularity granularity) const {
  if (granularity == Granularity::none) return {};
  return std::vector<double>(metric_partition(granularity).group_size.size(), 1.0);
}

void ConstraintPair::set_metric_values(Granularity, const std::vector<double>&) {
  throw ConfigError("this problem has no tunable metric parameters");
}

std::vector<std::string> ConstraintPair::metric_labels(Granularity granularity) const {
  if (granularity == Granularity::none) return {};
  return metric_partition(granularity).labels;
}

void ConstraintPair::require_layout(const PointVector& x) const {
  if (!same_layout(x.layout(), layout()))
    throw LayoutError("point vector layout does not match the constraint pair");
}

PointVector ConstraintPair::project_A(const PointVector& x) const {
  require_layout(x);
  Eigen::VectorXd out(x.size());
  project_a(x.values(), out);
  return {x.layout(), std::move(out)};
}

PointVector ConstraintPair::project_B(const PointVector& x) const {
  require_layout(x);
  Eigen::VectorXd out(x.size());
  project_b(x.values(), out);
  return {x.layout(), std::move(out)};
}

std::optional<std::string> ConstraintPair::verify(const PointVector& x) const {
  require_layout(x);
  return verify(x.values());
}

}  // namespace drsolve
