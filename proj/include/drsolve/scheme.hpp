#pragma once

#include <Eigen/Core>
#include <variant>

#include "drsolve/constraint_pair.hpp"
#include "drsolve/point_vector.hpp"

namespace drsolve {

/// x <- (1 - beta/2) x + (beta/2) R_B(R_A(x)), beta in ]0,2[.
struct RelaxedDR {
  double beta = 0.5;
};

/// x <- (1/(1+n)) sum_{r=0..n} (R_B[delta] o R_A[delta])^r (x),
/// n >= 1 double reflections, delta in [0,1].
struct AveragedDoubleReflect {
  int n = 1;
  double delta = 0.0;
};

using IterationScheme = std::variant<RelaxedDR, AveragedDoubleReflect>;

void validate(const IterationScheme& scheme);
std::string scheme_label(const IterationScheme& scheme);

/// Relaxed reflection (2 - delta) P(x) - (1 - delta) x. delta = 0 is the pure
/// reflection, delta = 1 the projection itself.
template <class Proj>
PointVector reflector(Proj&& project, const PointVector& x, double delta) {
  if (delta < 0.0 || delta > 1.0) throw ConfigError("reflector requires 0 <= delta <= 1");
  PointVector px = project(x);
  require_same_layout(px, x);
  return {x.layout(), (2.0 - delta) * px.values() - (1.0 - delta) * x.values()};
}

PointVector relaxed_dr_step(const PointVector& x, const ConstraintPair& cp, double beta);
PointVector avg_double_reflect_step(const PointVector& x, const ConstraintPair& cp,
                                    int n, double delta);

/// Euclidean norm of P_A(x) - P_B(R_A(x)) with the unparameterized (delta=0)
/// reflector, regardless of the scheme's delta.
double constraint_error(const PointVector& x, const ConstraintPair& cp);

PointVector scheme_step(const IterationScheme& scheme, const PointVector& x,
                        const ConstraintPair& cp);

/// Reusable buffers for the iteration loop.
struct StepWorkspace {
  Eigen::VectorXd pa, ra, pb, cur, acc, next;

  void resize(Eigen::Index dim) {
    pa.resize(dim);
    ra.resize(dim);
    pb.resize(dim);
    cur.resize(dim);
    acc.resize(dim);
    next.resize(dim);
  }
};

/// Advances x by one scheme step and writes residual = P_A(x) - P_B(R_A(x))
/// (delta=0 reflector) for the pre-step iterate. The residual shares the
/// projections the step itself computes, so it costs at most one extra
/// project_b evaluation per iteration.
void step_with_residual(const IterationScheme& scheme, const ConstraintPair& cp,
                        Eigen::VectorXd& x, StepWorkspace& ws,
                        Eigen::VectorXd& residual);

}  // namespace drsolve
