#pragma once

#include <utility>

#include "lindoa/spectral.hpp"

namespace lindoa {

// Boundary-driven Heisenberg XXZ chain:
//   H = sum_j 2(s_j^- s_{j+1}^+ + s_j^+ s_{j+1}^-) + s_j^z s_{j+1}^z,
//   L_1 = g_minus s_1^- s_Nc^+,  L_2 = g_plus s_1^+ s_Nc^-,
// a nonlocal source-and-sink pair on the chain ends. Default gains 2 and 1.
struct XxzSpec {
  int n_sites = 4;
  double g_minus = 2.0;
  double g_plus = 1.0;
};

LindbladSystem build_xxz(const XxzSpec& spec);

/// Spin current J_i = s_i^x s_{i+1}^y - s_i^y s_{i+1}^x on interior site i
/// (1-based, 2 <= i <= n_sites-1); Hermitian and traceless.
Operator spin_current_op(int n_sites, int site);

/// Orthogonal projectors onto the fixed-magnetization eigenspaces of total
/// sigma^z, ordered by descending magnetization; they sum to the identity.
std::vector<Operator> sector_projectors(int n_sites);

/// rho_ss,1 = |Psi><Psi| with |Psi> = (|0110> - |1001>)/sqrt(2)  (n_sites = 4).
DensityMatrix xxz_singlet_state();

/// rho_ss,2: the dynamical limit of the uniform mixture over the
/// one-spin-down sector, cross-checked against its five-digit reference
/// expression (populations to 5e-4, coherence to 5e-4, spin current 0.2684 to
/// 1e-3). Throws if the cross-check fails. sd must come from build_xxz with
/// the default 4-site spec.
DensityMatrix xxz_current_state(const SpectralData& sd);

/// Convenience: builds the 4-site chain and both reference steady states.
std::pair<DensityMatrix, DensityMatrix> reference_states();

}  // namespace lindoa
