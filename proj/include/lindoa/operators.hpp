#pragma once

#include <string>

#include "lindoa/types.hpp"

namespace lindoa {

// Dense linear operator on a finite-dimensional Hilbert space.
// Entries must be finite; matrices are always square.
struct Operator {
  HilbertDim dim;
  CMat entries;

  Operator() : dim(1), entries(CMat::Zero(1, 1)) {}
  explicit Operator(CMat m);
  Operator(HilbertDim d, CMat m);

  int n() const { return dim.n; }
  Operator adjoint() const { return Operator(dim, entries.adjoint()); }
  Complex trace() const { return entries.trace(); }
  bool is_hermitian(double tol) const;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex s, const Operator& a);
Operator operator*(double s, const Operator& a);
Operator operator-(const Operator& a);

Operator identity_op(const HilbertDim& dim);
Operator zero_op(const HilbertDim& dim);

/// Hilbert-Schmidt inner product tr(a^dag b).
Complex hs_inner(const Operator& a, const Operator& b);
double hs_norm(const Operator& a);
double hs_distance(const Operator& a, const Operator& b);

/// Kronecker product; tensor factors concatenate.
Operator kron(const Operator& a, const Operator& b);

/// Place a single-site operator at position `site` (0-based, leftmost factor
/// first) of a chain with known tensor factors, identity elsewhere.
Operator embed_site(const Operator& op, int site, const HilbertDim& chain);

// Column-stacking convention, fixed project-wide: vec(A)[i + N*j] = A(i, j).
CVec vectorize(const Operator& a);
Operator devectorize(const CVec& v);
Operator devectorize(const CVec& v, const HilbertDim& dim);

// Qubit conventions: |1> = (1,0)^T, |0> = (0,1)^T, and site 1 is the leftmost
// tensor factor, so basis labels read like |0110>. sigma^- = |1><0|,
// sigma^+ = |0><1|, sigma^z = |1><1| - |0><0|, sigma^x = sigma^+ + sigma^-,
// sigma^y = i(sigma^+ - sigma^-).
Operator pauli(char symbol);                       // one of I X Y Z + -
Operator pauli_string(const std::string& symbols); // kron over per-site symbols
CVec qubit_ket(const std::string& bits);           // e.g. "0110"

struct DensityCheck {
  bool ok = false;
  double herm_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  std::string violation;  // empty when ok, else names the failed invariant(s)
};

// A density matrix is Hermitian, unit trace and positive semidefinite within
// tolerances. Construction goes through make_density; no silent repair ever.
struct DensityMatrix {
  Operator op;
};

DensityCheck check_density(const Operator& op, const Tolerances& tol = {});
DensityMatrix make_density(Operator op, const Tolerances& tol = {});

}  // namespace lindoa
