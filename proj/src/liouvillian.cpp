#include "lindoa/liouvillian.hpp"

#include <sstream>

namespace lindoa {

namespace {

CMat kron_m(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_system(const LindbladSystem& sys) {
  if (sys.hamiltonian.dim != sys.dim)
    throw std::invalid_argument("LindbladSystem: Hamiltonian dimension mismatch");
  for (const Operator& c : sys.couplings)
    if (c.dim != sys.dim) throw std::invalid_argument("LindbladSystem: coupling dimension mismatch");
}

}  // namespace

LindbladSystem make_system(Operator hamiltonian, std::vector<Operator> couplings,
                           const Tolerances& tol) {
  LindbladSystem sys{hamiltonian.dim, std::move(hamiltonian), std::move(couplings)};
  require_system(sys);
  if (!sys.hamiltonian.is_hermitian(tol.herm))
    throw std::invalid_argument("LindbladSystem: Hamiltonian is not Hermitian within tolerance");
  return sys;
}

Superoperator build_generator(const LindbladSystem& sys) {
  require_system(sys);
  const int n = sys.dim.n;
  const CMat id = CMat::Identity(n, n);
  const CMat& h = sys.hamiltonian.entries;
  CMat g = Complex(0, -1) * (kron_m(id, h) - kron_m(h.transpose(), id));
  for (const Operator& c : sys.couplings) {  // fixed summation order: k ascending
    const CMat& l = c.entries;
    CMat ldl = l.adjoint() * l;
    g += kron_m(l.conjugate(), l) - 0.5 * kron_m(id, ldl) - 0.5 * kron_m(ldl.transpose(), id);
  }
  // Trace preservation is equivalent to L^dag(I) = 0, i.e. vec(I)^dag G = 0.
  CVec vec_id = vectorize(identity_op(sys.dim));
  double residual = (g.adjoint() * vec_id).norm();
  double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if (residual > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "build_generator: trace-preservation check failed (residual " << residual << ")";
    throw std::runtime_error(msg.str());
  }
  return Superoperator{sys.dim, std::move(g), SuperopKind::Generator};
}

Superoperator build_adjoint(const LindbladSystem& sys) {
  require_system(sys);
  const int n = sys.dim.n;
  const CMat id = CMat::Identity(n, n);
  const CMat& h = sys.hamiltonian.entries;
  CMat a = Complex(0, 1) * (kron_m(id, h) - kron_m(h.transpose(), id));
  for (const Operator& c : sys.couplings) {
    const CMat& l = c.entries;
    CMat ldl = l.adjoint() * l;
    a += kron_m(l.transpose(), l.adjoint()) - 0.5 * kron_m(id, ldl) - 0.5 * kron_m(ldl.transpose(), id);
  }
  // Double-entry bookkeeping against sign/convention mistakes.
  CMat gdag = build_generator(sys).matrix.adjoint();
  double mismatch = (a - gdag).cwiseAbs().maxCoeff();
  if (mismatch > 1e-10) {
    std::ostringstream msg;
    msg << "build_adjoint: formula disagrees with generator conjugate transpose by " << mismatch;
    throw std::runtime_error(msg.str());
  }
  return Superoperator{sys.dim, std::move(a), SuperopKind::AdjointGenerator};
}

Operator apply(const Superoperator& superop, const Operator& x) {
  if (superop.dim != x.dim) throw std::invalid_argument("apply: dimension mismatch");
  return devectorize(superop.matrix * vectorize(x), x.dim);
}

double steady_residual(const Superoperator& generator, const Operator& x) {
  return hs_norm(apply(generator, x));
}

SteadyCheck is_steady_state(const LindbladSystem& sys, const DensityMatrix& rho, double tol) {
  double residual = steady_residual(build_generator(sys), rho.op);
  return SteadyCheck{residual <= tol, residual};
}

std::vector<Operator> kernel_basis(const Superoperator& superop, double tol_rank) {
  Eigen::BDCSVD<CMat> svd(superop.matrix, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cut = tol_rank * (sv.size() > 0 ? sv(0) : 0.0);
  std::vector<Operator> basis;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) <= cut) basis.push_back(devectorize(svd.matrixV().col(k), superop.dim));
  return basis;
}

}  // namespace lindoa
