#include "lindoa/evolution.hpp"

#include <cmath>
#include <map>

#include <unsupported/Eigen/MatrixFunctions>

namespace lindoa {

namespace {

void diagnose(const Operator& state, double& trace_error, double& min_eig) {
  trace_error = std::abs(state.trace() - Complex(1.0));
  CMat herm = (state.entries + state.entries.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(herm, Eigen::EigenvaluesOnly);
  min_eig = es.eigenvalues().minCoeff();
}

}  // namespace

Trajectory propagate(const Superoperator& generator, const DensityMatrix& rho0,
                     const std::vector<double>& times) {
  if (generator.kind != SuperopKind::Generator)
    throw std::invalid_argument("propagate: expected a generator superoperator");
  if (generator.dim != rho0.op.dim) throw std::invalid_argument("propagate: dimension mismatch");
  double prev = 0.0;
  for (double t : times) {
    if (t < prev) throw std::invalid_argument("propagate: times must be sorted and nonnegative");
    prev = t;
  }

  Trajectory traj;
  traj.times = times;
  std::map<double, CMat> step_cache;
  CVec x = vectorize(rho0.op);
  double t_now = 0.0;
  for (double t : times) {
    double dt = t - t_now;
    if (dt > 0.0) {
      auto it = step_cache.find(dt);
      if (it == step_cache.end())
        it = step_cache.emplace(dt, CMat((generator.matrix * dt).exp())).first;
      x = it->second * x;
      t_now = t;
    }
    if (!x.allFinite())
      throw std::runtime_error("propagate: non-finite state (invalid generator input)");
    Operator state = devectorize(x, generator.dim);
    double terr, meig;
    diagnose(state, terr, meig);
    traj.states.push_back(DensityMatrix{std::move(state)});
    traj.trace_errors.push_back(terr);
    traj.min_eigenvalues.push_back(meig);
  }
  return traj;
}

std::vector<double> distance_curve(const Trajectory& traj, const DensityMatrix& ref) {
  std::vector<double> out;
  out.reserve(traj.states.size());
  for (const DensityMatrix& s : traj.states) out.push_back(hs_distance(s.op, ref.op));
  return out;
}

LimitProbe converged_limit(const Superoperator& generator, const DensityMatrix& rho0,
                           double decay_gap, double tol) {
  if (generator.kind != SuperopKind::Generator)
    throw std::invalid_argument("converged_limit: expected a generator superoperator");
  if (!(decay_gap > 0.0)) throw std::invalid_argument("converged_limit: decay gap must be positive");

  const double t_long = 40.0 / decay_gap;
  CMat prop = (generator.matrix * t_long).exp();  // squaring k times = probe at t_long * 2^k
  const CVec x0 = vectorize(rho0.op);
  CVec probe = prop * x0;
  double t_probe = t_long;
  double prev_dist = std::numeric_limits<double>::infinity();
  int non_decreasing = 0;
  constexpr int kMaxDoublings = 16;
  for (int k = 0; k < kMaxDoublings; ++k) {
    prop = prop * prop;
    t_probe *= 2.0;
    CVec next = prop * x0;
    if (!next.allFinite())
      throw std::runtime_error("converged_limit: non-finite state (invalid generator input)");
    double dist = (next - probe).norm();
    if (dist < tol)
      return LimitProbe{true, DensityMatrix{devectorize(next, generator.dim)}, t_probe};
    non_decreasing = (dist >= prev_dist) ? non_decreasing + 1 : 0;
    if (non_decreasing >= 3) return LimitProbe{false, {}, t_probe};
    prev_dist = dist;
    probe = std::move(next);
  }
  return LimitProbe{false, {}, t_probe};
}

}  // namespace lindoa
