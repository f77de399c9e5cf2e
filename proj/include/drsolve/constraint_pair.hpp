#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "drsolve/metric.hpp"
#include "drsolve/point_vector.hpp"

namespace drsolve {

/// A feasibility problem given as two projections over a shared layout.
///
/// project_a targets the discrete/combinatorial set, project_b the
/// linear/averaging set. Both preserve the layout and are idempotent.
/// verify extracts the problem's discrete candidate from the iterate and
/// returns a serialized solution iff it passes the exact combinatorial check.
class ConstraintPair {
public:
  virtual ~ConstraintPair() = default;

  virtual const LayoutPtr& layout() const = 0;

  /// Raw kernels used by the iteration loop; out must not alias in.
  virtual void project_a(const Eigen::VectorXd& in, Eigen::VectorXd& out) const = 0;
  virtual void project_b(const Eigen::VectorXd& in, Eigen::VectorXd& out) const = 0;

  virtual std::optional<std::string> verify(const Eigen::VectorXd& x) const = 0;

  // Metric interface. Problems that distinguish variable types override
  // these; the defaults describe a single fixed-scale group.
  virtual bool tunable() const { return false; }
  virtual Partition metric_partition(Granularity granularity) const;
  virtual std::vector<double> metric_values(Granularity granularity) const;
  virtual void set_metric_values(Granularity granularity, const std::vector<double>& eta);
  /// Labels for the tunable parameters at a granularity (parallel to
  /// metric_values); defaults to the partition labels.
  virtual std::vector<std::string> metric_labels(Granularity granularity) const;

  // Layout-checked conveniences.
  PointVector project_A(const PointVector& x) const;
  PointVector project_B(const PointVector& x) const;
  std::optional<std::string> verify(const PointVector& x) const;

protected:
  void require_layout(const PointVector& x) const;
};

}  // namespace drsolve
