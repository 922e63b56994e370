#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lindoa {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Dimension of the underlying Hilbert space, optionally carrying the
// tensor-factor structure (product of factors equals n).
struct HilbertDim {
  int n = 1;
  std::vector<int> factors;

  HilbertDim() = default;
  HilbertDim(int n_) : n(n_) { validate(); }
  HilbertDim(int n_, std::vector<int> factors_) : n(n_), factors(std::move(factors_)) { validate(); }

  void validate() const {
    if (n < 1) throw std::invalid_argument("HilbertDim: dimension must be >= 1");
    if (!factors.empty()) {
      long long prod = 1;
      for (int f : factors) {
        if (f < 1) throw std::invalid_argument("HilbertDim: factors must be >= 1");
        prod *= f;
      }
      if (prod != n) throw std::invalid_argument("HilbertDim: product of factors must equal n");
    }
  }

  // Factor lists are bookkeeping; equality of spaces is equality of dimension.
  bool operator==(const HilbertDim& other) const { return n == other.n; }
  bool operator!=(const HilbertDim& other) const { return n != other.n; }
};

// Numerical tolerances used across the library. Defaults sit well above
// double-precision eigensolver noise at N <= 16 and far below physical signal.
struct Tolerances {
  double herm = 1e-10;        // Hermiticity, max-abs of A - A^dag
  double trace = 1e-10;       // |tr(rho) - 1|
  double psd = 1e-9;          // allowed negativity of the smallest eigenvalue
  double peripheral = 1e-9;   // |Re lambda| cut, scaled by max(1, spectral radius)
  double membership = 1e-7;   // identification-vector deltas
  double rank = 1e-10;        // kernel rank cut, relative to sigma_max
};

}  // namespace lindoa
