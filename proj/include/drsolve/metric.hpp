#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "drsolve/point_vector.hpp"

namespace drsolve {

class ConstraintPair;

/// Resolution at which metric parameters are attached to variable groups.
enum class Granularity {
  none,                    // no tunable parameters
  by_type,                 // one parameter per variable type
  by_type_location,        // one per (type, node or directed edge)
  by_type_location_item,   // one per (type, location, data item)
};

enum class TuneMode { mean_relative, first_anchored };

std::string granularity_name(Granularity g);
Granularity granularity_from_name(const std::string& name);
std::string tune_mode_name(TuneMode m);
TuneMode tune_mode_from_name(const std::string& name);

/// Current metric parameters for one run, at a fixed granularity.
/// All eta are strictly positive; in first_anchored mode eta[0] == 1 exactly
/// after every update.
struct MetricState {
  Granularity granularity = Granularity::by_type;
  std::vector<double> eta;
  double alpha = 0.0;
  TuneMode mode = TuneMode::mean_relative;
  int cadence = 1;  // apply the update every cadence-th iteration
};

/// Normalized rms constraint errors per group plus their rms aggregate.
struct TypedErrors {
  std::vector<double> per_group;  // eps_i
  double aggregate = 0.0;         // sqrt(mean of eps_i^2)
};

/// eps_i = (1/eta_i) * sqrt(||residual_i||^2 / l_i) for each group of the
/// partition, where residual = P_A(x) - P_B(R_A(x)) was computed elsewhere.
TypedErrors typed_errors_from_residual(const Eigen::VectorXd& residual,
                                       const Partition& partition,
                                       const std::vector<double>& eta);

/// Spec-shaped convenience: computes the residual from the constraint pair.
TypedErrors typed_errors(const PointVector& x, const ConstraintPair& cp,
                         const MetricState& state, const Partition& partition);

/// One multiplicative update of the metric parameters.
///
/// mean_relative:   eta_i <- eta_i * (1 + alpha * (eps_i/eps - 1))
/// first_anchored:  eta_0 == 1;  eta_i <- eta_i * (1 + alpha * (eps_i/eps_0 - 1))
///
/// When the reference error is zero (a feasible point) the update is skipped
/// and the input state is returned unchanged.
MetricState update_metrics(const MetricState& state, const TypedErrors& errors);

}  // namespace drsolve
