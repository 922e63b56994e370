#pragma once

#include "lindoa/spectral.hpp"

namespace lindoa {

// Result of the membership test: an initial state belongs to the attraction
// domain of a steady state iff both carry the same identification vector,
// i.e. all deltas |tr(omega_l (rho0 - rho_ss))| vanish. Numerically the exact
// equality becomes a band test; verdicts near the band edge are flagged
// marginal so proximity to the boundary is always visible.
struct AttractionCertificate {
  RVec deltas;
  double max_delta = 0.0;
  double tol = 0.0;
  bool member = false;
  bool marginal = false;  // max_delta within [tol/10, 10*tol]
  double steady_residual = 0.0;
};

AttractionCertificate membership(const LindbladSystem& sys, const SpectralData& sd,
                                 const ConservedSet& cs, const DensityMatrix& steady,
                                 const DensityMatrix& initial, double tol = 1e-7);

// Affine description of the attraction domain: DoA[rho_ss] is the set of
// density matrices satisfying tr(omega_l rho) = tr(omega_l rho_ss) for the J
// Hermitian constraints; the free directions span the decaying eigenspaces.
struct AffineDoA {
  DensityMatrix base;
  std::vector<Operator> constraints;
  RVec targets;
  int decaying_dim = 0;  // N^2 - J
};

AffineDoA affine_doa(const SpectralData& sd, const ConservedSet& cs, const DensityMatrix& steady);
bool affine_contains(const AffineDoA& doa, const DensityMatrix& rho, double tol = 1e-7);

// Outcome of the t -> infinity limit read off the peripheral expansion:
// either the limit state sum_i tr(omega_i^dag rho0) sigma_i over zero modes,
// or the list of active oscillation frequencies when purely imaginary modes
// carry weight and no limit exists.
struct AsymptoticState {
  bool has_limit = false;
  DensityMatrix limit;
  std::vector<double> frequencies;  // Im(lambda) of the active modes
  std::vector<double> magnitudes;   // |tr(omega_i^dag rho0)|
};

AsymptoticState asymptotic_state(const SpectralData& sd, const DensityMatrix& rho0,
                                 double tol = 1e-7);

struct SteadyStateReport {
  int kernel_dim = 0;
  std::vector<DensityMatrix> representatives;
  bool unique = false;
  bool doa_measure_zero = false;  // non-unique steady states have measure-zero domains
};

// Representatives are actual dynamical limits: of the maximally mixed state
// and of every computational basis state, deduplicated. Uniqueness is decided
// by J0 = 1 (with trace preservation this forces a one-point intersection
// with the density matrices).
SteadyStateReport steady_report(const LindbladSystem& sys, const Superoperator& generator,
                                const SpectralData& sd);

}  // namespace lindoa
