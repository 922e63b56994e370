#include "lindoa/attraction.hpp"

#include <algorithm>
#include <sstream>

namespace lindoa {

namespace {

void require_steady(const LindbladSystem& sys, const DensityMatrix& rho, double tol,
                    double* residual_out) {
  SteadyCheck check = is_steady_state(sys, rho, tol);
  if (residual_out) *residual_out = check.residual;
  if (!check.steady) {
    std::ostringstream msg;
    msg << "steady-state argument is not steady: residual " << check.residual << " > " << tol;
    throw std::invalid_argument(msg.str());
  }
}

void require_intact(const SpectralData& sd) {
  if (sd.defective)
    throw DefectiveSpectrumError("defective peripheral block (" + sd.defect_reason + ")");
}

AttractionCertificate compare_vectors(const RVec& v_ss, const RVec& v0, double tol) {
  AttractionCertificate cert;
  cert.deltas = (v0 - v_ss).cwiseAbs();
  cert.max_delta = cert.deltas.size() > 0 ? cert.deltas.maxCoeff() : 0.0;
  cert.tol = tol;
  cert.member = cert.max_delta <= tol;
  cert.marginal = cert.max_delta >= tol / 10.0 && cert.max_delta <= 10.0 * tol;
  return cert;
}

}  // namespace

AttractionCertificate membership(const LindbladSystem& sys, const SpectralData& sd,
                                 const ConservedSet& cs, const DensityMatrix& steady,
                                 const DensityMatrix& initial, double tol) {
  require_intact(sd);
  double residual = 0.0;
  require_steady(sys, steady, 1e-8 * std::max(1.0, sd.spectral_radius), &residual);
  AttractionCertificate cert =
      compare_vectors(identification_vector(cs, steady), identification_vector(cs, initial), tol);
  cert.steady_residual = residual;
  return cert;
}

AffineDoA affine_doa(const SpectralData& sd, const ConservedSet& cs, const DensityMatrix& steady) {
  require_intact(sd);
  double residual = steady_residual(sd.generator, steady.op);
  if (residual > 1e-8 * std::max(1.0, sd.spectral_radius)) {
    std::ostringstream msg;
    msg << "affine_doa: base state is not steady (residual " << residual << ")";
    throw std::invalid_argument(msg.str());
  }
  AffineDoA doa;
  doa.base = steady;
  doa.constraints = cs.observables;
  doa.targets = identification_vector(cs, steady);
  doa.decaying_dim = sd.generator.dim.n * sd.generator.dim.n - sd.J;
  return doa;
}

bool affine_contains(const AffineDoA& doa, const DensityMatrix& rho, double tol) {
  for (std::size_t l = 0; l < doa.constraints.size(); ++l) {
    double value = hs_inner(doa.constraints[l], rho.op).real();
    if (std::abs(value - doa.targets(static_cast<Eigen::Index>(l))) > tol) return false;
  }
  return true;
}

AsymptoticState asymptotic_state(const SpectralData& sd, const DensityMatrix& rho0, double tol) {
  require_intact(sd);
  if (sd.generator.dim != rho0.op.dim)
    throw std::invalid_argument("asymptotic_state: dimension mismatch");

  AsymptoticState out;
  // Oscillating coefficients tr(omega_i^dag rho0) must all vanish for a limit.
  for (int idx : sd.peripheral) {
    if (std::binary_search(sd.zero_modes.begin(), sd.zero_modes.end(), idx)) continue;
    Complex coeff = hs_inner(sd.left_ops[idx], rho0.op);
    if (std::abs(coeff) > tol) {
      out.frequencies.push_back(sd.eigenvalues(idx).imag());
      out.magnitudes.push_back(std::abs(coeff));
    }
  }
  if (!out.frequencies.empty()) {
    out.has_limit = false;
    return out;
  }

  CVec lim = CVec::Zero(sd.generator.matrix.rows());
  for (int idx : sd.zero_modes)
    lim += hs_inner(sd.left_ops[idx], rho0.op) * vectorize(sd.right_ops[idx]);
  Operator limit_op = devectorize(lim, sd.generator.dim);

  DensityCheck check = check_density(limit_op);
  if (!check.ok)
    throw std::runtime_error("asymptotic_state: computed limit fails density validation (" +
                             check.violation + "); spectral data is corrupt");
  double residual = steady_residual(sd.generator, limit_op);
  if (residual > 1e-8 * std::max(1.0, sd.spectral_radius)) {
    std::ostringstream msg;
    msg << "asymptotic_state: computed limit is not steady (residual " << residual
        << "); spectral data is corrupt";
    throw std::runtime_error(msg.str());
  }
  out.has_limit = true;
  out.limit = DensityMatrix{std::move(limit_op)};
  return out;
}

SteadyStateReport steady_report(const LindbladSystem& sys, const Superoperator& generator,
                                const SpectralData& sd) {
  require_intact(sd);
  SteadyStateReport report;
  report.kernel_dim = static_cast<int>(kernel_basis(generator).size());
  report.unique = (sd.J0 == 1);
  report.doa_measure_zero = !report.unique;

  const int n = sys.dim.n;
  auto add_limit_of = [&](const Operator& seed, bool must_converge) {
    AsymptoticState as = asymptotic_state(sd, DensityMatrix{seed});
    if (!as.has_limit) {
      if (must_converge)
        throw std::runtime_error("steady_report: the maximally mixed state failed to converge; "
                                 "spectral data is corrupt");
      return;
    }
    for (const DensityMatrix& rep : report.representatives)
      if (hs_distance(rep.op, as.limit.op) <= 1e-8) return;
    report.representatives.push_back(std::move(as.limit));
  };

  add_limit_of((1.0 / n) * identity_op(sys.dim), true);  // always converges
  for (int k = 0; k < n; ++k) {
    CMat basis = CMat::Zero(n, n);
    basis(k, k) = 1.0;
    add_limit_of(Operator(sys.dim, std::move(basis)), false);
  }
  return report;
}

}  // namespace lindoa
