#pragma once

// Test-only fixtures and independent oracles. The oracles evaluate the master
// equation and its adjoint by direct matrix products, never through the
// superoperator matrices they are used to check.

#include <random>

#include "lindoa/liouvillian.hpp"

namespace lindoa::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eed);
  return gen;
}

inline CMat random_complex(int rows, int cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(dist(rng()), dist(rng()));
  return m;
}

inline CMat random_hermitian(int n) {
  CMat m = random_complex(n, n);
  return (m + m.adjoint()) / 2.0;
}

inline DensityMatrix random_density(int n) {
  CMat x = random_complex(n, n);
  CMat rho = x * x.adjoint();
  rho /= rho.trace().real();
  return make_density(Operator(std::move(rho)));
}

inline LindbladSystem random_system(int n, int n_couplings) {
  std::vector<Operator> couplings;
  for (int k = 0; k < n_couplings; ++k)
    couplings.emplace_back(random_complex(n, n) / std::sqrt(2.0));
  return make_system(Operator(random_hermitian(n)), std::move(couplings));
}

// Right side of the master equation, evaluated directly.
inline Operator lindblad_rhs_direct(const LindbladSystem& sys, const Operator& rho) {
  const CMat& h = sys.hamiltonian.entries;
  const CMat& r = rho.entries;
  CMat out = Complex(0, -1) * (h * r - r * h);
  for (const Operator& c : sys.couplings) {
    const CMat& l = c.entries;
    CMat ldl = l.adjoint() * l;
    out += l * r * l.adjoint() - 0.5 * (ldl * r + r * ldl);
  }
  return Operator(rho.dim, std::move(out));
}

// Adjoint (Heisenberg) equation, evaluated directly.
inline Operator adjoint_rhs_direct(const LindbladSystem& sys, const Operator& x) {
  const CMat& h = sys.hamiltonian.entries;
  const CMat& m = x.entries;
  CMat out = Complex(0, 1) * (h * m - m * h);
  for (const Operator& c : sys.couplings) {
    const CMat& l = c.entries;
    CMat ldl = l.adjoint() * l;
    out += l.adjoint() * m * l - 0.5 * (ldl * m + m * ldl);
  }
  return Operator(x.dim, std::move(out));
}

// Two-qubit model with a decoherence-free qubit rotating under sigma^z while
// the other dephases; peripheral spectrum {0 x4, +-2i x2}, decay gap 1.
inline LindbladSystem dfs_model() {
  HilbertDim dim(4, {2, 2});
  Operator h = embed_site(pauli('Z'), 0, dim);
  Operator l = std::sqrt(0.5) * embed_site(pauli('Z'), 1, dim);
  return make_system(std::move(h), {std::move(l)});
}

inline LindbladSystem dephasing_model() {
  return make_system(zero_op(HilbertDim(2)), {pauli('Z')});
}

// Single decay channel sigma^-; under the |1> = (1,0)^T convention the fixed
// point is |1><1|.
inline LindbladSystem damping_model(double rate = 1.0) {
  return make_system(zero_op(HilbertDim(2)), {std::sqrt(rate) * pauli('-')});
}

}  // namespace lindoa::test
