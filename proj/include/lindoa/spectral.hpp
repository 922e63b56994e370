#pragma once

#include "lindoa/liouvillian.hpp"

namespace lindoa {

// Raised when an analysis needs the peripheral block and it is defective
// (Jordan structure on the imaginary axis, which a valid Lindblad generator
// cannot have: it signals numerical trouble or invalid input).
struct DefectiveSpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full eigen-structure of a generator. Eigenvalues are sorted by (Re, Im),
// ties by solver index, so repeated runs are stable. right_ops hold the
// sigma_k (eigen-operators of L), left_ops the omega_k (eigen-operators of
// L^dag, matched through conjugate eigenvalues). Over the peripheral indices
// the pair is bi-orthogonal: tr(omega_i^dag sigma_j) = delta_ij.
struct SpectralData {
  Superoperator generator;
  CVec eigenvalues;
  std::vector<Operator> right_ops;
  std::vector<Operator> left_ops;
  std::vector<int> peripheral;   // |Re lambda| <= tau_perif * max(1, radius)
  std::vector<int> zero_modes;   // subset with |lambda| below the same cut
  int J = 0;
  int J0 = 0;
  bool defective = false;
  std::string defect_reason;
  double spectral_radius = 0.0;
  double decay_gap = 0.0;        // min |Re lambda| over decaying modes (0 when none)
};

SpectralData full_spectrum(const Superoperator& generator, const Tolerances& tol = {});

// Hermitian non-decaying observables spanning the peripheral left eigenspaces.
// The first n_conserved have frequency 0 (conserved quantities, L^dag(w) = 0);
// the rest come in rotation blocks: within a block at frequency beta the
// Heisenberg evolution rotates, so expectations oscillate as pure sinusoids.
struct ConservedSet {
  std::vector<Operator> observables;  // HS-normalized, linearly independent, J total
  std::vector<double> frequencies;    // 0 for conserved entries, |beta| otherwise
  int n_conserved = 0;                // equals J0
};

/// Throws DefectiveSpectrumError if sd.defective.
ConservedSet peripheral_observables(const SpectralData& sd);

/// Entries tr(omega_l rho) in the fixed order of cs (real since both Hermitian).
RVec identification_vector(const ConservedSet& cs, const DensityMatrix& rho);

}  // namespace lindoa
