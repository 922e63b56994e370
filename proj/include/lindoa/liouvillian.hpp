#pragma once

#include <vector>

#include "lindoa/operators.hpp"

namespace lindoa {

// A Lindblad system (H; L_1..L_M) with hbar = 1: the Hamiltonian carries
// angular-frequency units, couplings carry sqrt-of-rate units.
struct LindbladSystem {
  HilbertDim dim;
  Operator hamiltonian;
  std::vector<Operator> couplings;
};

/// Validates Hermiticity of H and dimension agreement of all operators.
LindbladSystem make_system(Operator hamiltonian, std::vector<Operator> couplings,
                           const Tolerances& tol = {});

enum class SuperopKind { Generator, AdjointGenerator };

// N^2 x N^2 matrix acting on column-stacked operators.
struct Superoperator {
  HilbertDim dim;  // dimension N of the underlying Hilbert space
  CMat matrix;
  SuperopKind kind = SuperopKind::Generator;
};

// G vec(rho) = vec(-i[H,rho] + sum_k L_k rho L_k^dag - {L_k^dag L_k, rho}/2).
// Under column stacking:
//   G = -i(I (x) H - H^T (x) I)
//       + sum_k conj(L_k) (x) L_k - I (x) (L_k^dag L_k)/2 - (L_k^dag L_k)^T (x) I/2.
Superoperator build_generator(const LindbladSystem& sys);

// Adjoint with respect to the Hilbert-Schmidt inner product, built from its
// own formula and cross-checked against the conjugate transpose of the
// generator; disagreement above 1e-10 is a hard internal error.
Superoperator build_adjoint(const LindbladSystem& sys);

Operator apply(const Superoperator& superop, const Operator& x);

struct SteadyCheck {
  bool steady = false;
  double residual = 0.0;  // ||L(rho)|| in HS norm
};

SteadyCheck is_steady_state(const LindbladSystem& sys, const DensityMatrix& rho, double tol = 1e-8);
double steady_residual(const Superoperator& generator, const Operator& x);

/// HS-orthonormal basis of the numerical null space via SVD; singular values
/// below tol_rank * sigma_max count as zero.
std::vector<Operator> kernel_basis(const Superoperator& superop, double tol_rank = 1e-10);

}  // namespace lindoa
