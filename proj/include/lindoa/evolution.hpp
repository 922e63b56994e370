#pragma once

#include "lindoa/liouvillian.hpp"

namespace lindoa {

// Sampled trajectory e^{Lt} rho0. Time is in units of 1/energy (hbar = 1).
// trace_errors and min_eigenvalues record per-state CPTP diagnostics; the
// exact generator is CPTP, so drift must stay at solver-noise level.
struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> trace_errors;
  std::vector<double> min_eigenvalues;
};

// Dense scaling-and-squaring matrix exponential; one exponential per unique
// time step, so uniform grids reuse a single propagator.
Trajectory propagate(const Superoperator& generator, const DensityMatrix& rho0,
                     const std::vector<double>& times);

std::vector<double> distance_curve(const Trajectory& traj, const DensityMatrix& ref);

struct LimitProbe {
  bool has_limit = false;
  DensityMatrix state;       // meaningful only when has_limit
  double time_reached = 0.0;
};

// Propagates to t_long = 40/gap, then keeps doubling t until successive
// probes differ by less than tol, or declares no-limit when the probe
// distance fails to decrease over 3 doublings (oscillating modes).
LimitProbe converged_limit(const Superoperator& generator, const DensityMatrix& rho0,
                           double decay_gap, double tol = 1e-9);

}  // namespace lindoa
