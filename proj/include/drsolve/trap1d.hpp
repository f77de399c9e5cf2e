#pragma once

#include <vector>

namespace drsolve {

/// One-dimensional model of a trap: the nearest point of the finite set and
/// the proximal point of the hyperplane, a distance apart on their common
/// line. The averaged double-reflection map restricted to this line is
/// affine, which gives a closed form for the trap's fixed point and escape
/// behavior.
///
/// Coordinates: the finite-set point sits at 0, the hyperplane point at
/// -distance, and each double reflection reflects about the hyperplane point
/// first. Under that orientation drift away from the hyperplane point has
/// positive c.
struct TrapModel {
  double distance = 1.0;  // gap between the two proximal points, > 0
  int n = 1;              // number of double reflections per step
  double delta = 0.0;     // reflector relaxation, in [0,1]
};

struct AffineMap {
  double gamma;  // contraction factor
  double c;      // drift term
};

/// Closed-form coefficients of the 1D step map x -> gamma*x + c:
///   gamma = 1 - [n(1-q) - q(1-q^n)] / [(1+n)(1-q)],  q = (1-delta)^2
///   c     = (1-gamma) * ((1-delta)/delta) * distance
/// Requires 0 < delta <= 1; at delta = 0 both expressions degenerate and
/// only oracle_step answers.
AffineMap gamma_c(const TrapModel& model);

/// Independent oracle: applies the n averaged double reflections by explicit
/// composition of the two point reflectors. Valid for any delta in [0,1].
double oracle_step(const TrapModel& model, double x);

/// x* = ((1-delta)/delta) * distance = c / (1-gamma). Requires delta > 0.
double fixed_point(const TrapModel& model);

/// Row of the sweep table emitted by the CLI.
struct TrapSweepRow {
  int n;
  double distance;
  double delta;
  double gamma;
  double c;
  double x_star;
};

std::vector<TrapSweepRow> trap_sweep(const std::vector<int>& ns,
                                     const std::vector<double>& distances,
                                     const std::vector<double>& deltas);

}  // namespace drsolve
