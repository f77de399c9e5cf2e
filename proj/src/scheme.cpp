#include "drsolve/scheme.hpp"

#include <cmath>
#include <cstdio>

namespace drsolve {

void validate(const IterationScheme& scheme) {
  if (const auto* r = std::get_if<RelaxedDR>(&scheme)) {
    if (!(r->beta > 0.0 && r->beta < 2.0))
      throw ConfigError("relaxed DR requires 0 < beta < 2");
  } else {
    const auto& a = std::get<AveragedDoubleReflect>(scheme);
    if (a.n < 1) throw ConfigError("averaged double reflection requires n >= 1");
    if (!(a.delta >= 0.0 && a.delta <= 1.0))
      throw ConfigError("averaged double reflection requires 0 <= delta <= 1");
  }
}

std::string scheme_label(const IterationScheme& scheme) {
  char buf[64];
  if (const auto* r = std::get_if<RelaxedDR>(&scheme)) {
    std::snprintf(buf, sizeof buf, "relaxed(beta=%g)", r->beta);
  } else {
    const auto& a = std::get<AveragedDoubleReflect>(scheme);
    std::snprintf(buf, sizeof buf, "DR_%d(delta=%g)", a.n, a.delta);
  }
  return buf;
}

PointVector relaxed_dr_step(const PointVector& x, const ConstraintPair& cp, double beta) {
  validate(IterationScheme{RelaxedDR{beta}});
  StepWorkspace ws;
  ws.resize(x.size());
  Eigen::VectorXd residual(x.size());
  Eigen::VectorXd v = x.values();
  step_with_residual(RelaxedDR{beta}, cp, v, ws, residual);
  return {x.layout(), std::move(v)};
}

PointVector avg_double_reflect_step(const PointVector& x, const ConstraintPair& cp,
                                    int n, double delta) {
  validate(IterationScheme{AveragedDoubleReflect{n, delta}});
  StepWorkspace ws;
  ws.resize(x.size());
  Eigen::VectorXd residual(x.size());
  Eigen::VectorXd v = x.values();
  step_with_residual(AveragedDoubleReflect{n, delta}, cp, v, ws, residual);
  return {x.layout(), std::move(v)};
}

double constraint_error(const PointVector& x, const ConstraintPair& cp) {
  Eigen::VectorXd pa(x.size()), pb(x.size());
  cp.project_a(x.values(), pa);
  Eigen::VectorXd ra = 2.0 * pa - x.values();
  cp.project_b(ra, pb);
  return (pa - pb).norm();
}

PointVector scheme_step(const IterationScheme& scheme, const PointVector& x,
                        const ConstraintPair& cp) {
  if (const auto* r = std::get_if<RelaxedDR>(&scheme))
    return relaxed_dr_step(x, cp, r->beta);
  const auto& a = std::get<AveragedDoubleReflect>(scheme);
  return avg_double_reflect_step(x, cp, a.n, a.delta);
}

void step_with_residual(const IterationScheme& scheme, const ConstraintPair& cp,
                        Eigen::VectorXd& x, StepWorkspace& ws,
                        Eigen::VectorXd& residual) {
  if (const auto* r = std::get_if<RelaxedDR>(&scheme)) {
    // R_A and R_B with delta = 0; the residual reuses pa and pb directly.
    const double beta = r->beta;
    cp.project_a(x, ws.pa);
    ws.ra = 2.0 * ws.pa - x;
    cp.project_b(ws.ra, ws.pb);
    residual = ws.pa - ws.pb;
    // (1 - beta/2) x + (beta/2)(2 pb - ra)
    x = (1.0 - 0.5 * beta) * x + (0.5 * beta) * (2.0 * ws.pb - ws.ra);
    return;
  }

  const auto& a = std::get<AveragedDoubleReflect>(scheme);
  const double d = a.delta;
  ws.acc = x;
  ws.cur = x;
  for (int r = 1; r <= a.n; ++r) {
    cp.project_a(ws.cur, ws.pa);
    if (r == 1) {
      if (d == 0.0) {
        ws.ra = 2.0 * ws.pa - ws.cur;
        cp.project_b(ws.ra, ws.pb);
        residual = ws.pa - ws.pb;
        ws.cur = 2.0 * ws.pb - ws.ra;
        ws.acc += ws.cur;
        continue;
      }
      // The scheme reflects with delta > 0 but the reported constraint error
      // keeps the plain reflector, so one extra project_b is needed here.
      ws.ra = 2.0 * ws.pa - ws.cur;
      cp.project_b(ws.ra, ws.pb);
      residual = ws.pa - ws.pb;
    }
    ws.ra = (2.0 - d) * ws.pa - (1.0 - d) * ws.cur;
    cp.project_b(ws.ra, ws.pb);
    ws.cur = (2.0 - d) * ws.pb - (1.0 - d) * ws.ra;
    ws.acc += ws.cur;
  }
  x = ws.acc / (1.0 + a.n);
}

}  // namespace drsolve
