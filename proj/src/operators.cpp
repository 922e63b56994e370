#include "lindoa/operators.hpp"

#include <cmath>
#include <sstream>

namespace lindoa {

namespace {

void require_finite_square(const CMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("Operator: matrix must be square");
  if (!m.allFinite()) throw std::invalid_argument("Operator: entries must be finite");
}

}  // namespace

Operator::Operator(CMat m) : dim(static_cast<int>(m.rows())), entries(std::move(m)) {
  require_finite_square(entries);
}

Operator::Operator(HilbertDim d, CMat m) : dim(std::move(d)), entries(std::move(m)) {
  require_finite_square(entries);
  if (entries.rows() != dim.n) throw std::invalid_argument("Operator: matrix size does not match dimension");
}

bool Operator::is_hermitian(double tol) const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator operator+(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("operator+: dimension mismatch");
  return Operator(a.dim, a.entries + b.entries);
}

Operator operator-(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("operator-: dimension mismatch");
  return Operator(a.dim, a.entries - b.entries);
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("operator*: dimension mismatch");
  return Operator(a.dim, a.entries * b.entries);
}

Operator operator*(Complex s, const Operator& a) { return Operator(a.dim, s * a.entries); }
Operator operator*(double s, const Operator& a) { return Operator(a.dim, s * a.entries); }
Operator operator-(const Operator& a) { return Operator(a.dim, -a.entries); }

Operator identity_op(const HilbertDim& dim) { return Operator(dim, CMat::Identity(dim.n, dim.n)); }
Operator zero_op(const HilbertDim& dim) { return Operator(dim, CMat::Zero(dim.n, dim.n)); }

Complex hs_inner(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("hs_inner: dimension mismatch");
  return (a.entries.adjoint() * b.entries).trace();
}

double hs_norm(const Operator& a) { return a.entries.norm(); }

double hs_distance(const Operator& a, const Operator& b) {
  if (a.dim != b.dim) throw std::invalid_argument("hs_distance: dimension mismatch");
  return (a.entries - b.entries).norm();
}

Operator kron(const Operator& a, const Operator& b) {
  const int na = a.n(), nb = b.n();
  const Eigen::Index n_out = static_cast<Eigen::Index>(na) * nb;
  CMat out(n_out, n_out);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a.entries(i, j) * b.entries;
  std::vector<int> factors = a.dim.factors.empty() ? std::vector<int>{na} : a.dim.factors;
  const std::vector<int>& fb = b.dim.factors.empty() ? std::vector<int>{nb} : b.dim.factors;
  factors.insert(factors.end(), fb.begin(), fb.end());
  return Operator(HilbertDim(na * nb, std::move(factors)), std::move(out));
}

Operator embed_site(const Operator& op, int site, const HilbertDim& chain) {
  if (chain.factors.empty()) throw std::invalid_argument("embed_site: chain has no tensor factors");
  if (site < 0 || site >= static_cast<int>(chain.factors.size()))
    throw std::invalid_argument("embed_site: site index out of range");
  if (op.n() != chain.factors[site])
    throw std::invalid_argument("embed_site: operator dimension does not match factor at site");
  CMat out = CMat::Identity(1, 1);
  for (int k = 0; k < static_cast<int>(chain.factors.size()); ++k) {
    const CMat& blk = (k == site) ? op.entries : CMat(CMat::Identity(chain.factors[k], chain.factors[k]));
    CMat next(out.rows() * blk.rows(), out.cols() * blk.cols());
    for (int i = 0; i < out.rows(); ++i)
      for (int j = 0; j < out.cols(); ++j)
        next.block(i * blk.rows(), j * blk.cols(), blk.rows(), blk.cols()) = out(i, j) * blk;
    out = std::move(next);
  }
  return Operator(chain, std::move(out));
}

CVec vectorize(const Operator& a) {
  return Eigen::Map<const CVec>(a.entries.data(), a.entries.size());
}

Operator devectorize(const CVec& v) {
  const auto len = v.size();
  const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(len))));
  if (static_cast<Eigen::Index>(n) * n != len)
    throw std::invalid_argument("devectorize: vector length is not a perfect square");
  return Operator(Eigen::Map<const CMat>(v.data(), n, n));
}

Operator devectorize(const CVec& v, const HilbertDim& dim) {
  if (static_cast<Eigen::Index>(dim.n) * dim.n != v.size())
    throw std::invalid_argument("devectorize: vector length does not match dimension");
  return Operator(dim, Eigen::Map<const CMat>(v.data(), dim.n, dim.n));
}

Operator pauli(char symbol) {
  CMat m = CMat::Zero(2, 2);
  switch (symbol) {
    case 'I': m.setIdentity(); break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Y': m(0, 1) = Complex(0, -1); m(1, 0) = Complex(0, 1); break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    case '+': m(1, 0) = 1; break;   // |0><1|
    case '-': m(0, 1) = 1; break;   // |1><0|
    default: throw std::invalid_argument(std::string("pauli: unknown symbol '") + symbol + "'");
  }
  return Operator(HilbertDim(2, {2}), std::move(m));
}

Operator pauli_string(const std::string& symbols) {
  if (symbols.empty()) throw std::invalid_argument("pauli_string: empty string");
  Operator out = pauli(symbols[0]);
  for (std::size_t k = 1; k < symbols.size(); ++k) out = kron(out, pauli(symbols[k]));
  return out;
}

CVec qubit_ket(const std::string& bits) {
  if (bits.empty()) throw std::invalid_argument("qubit_ket: empty label");
  CVec v = CVec::Ones(1);
  for (char b : bits) {
    if (b != '0' && b != '1') throw std::invalid_argument("qubit_ket: label must be 0/1 only");
    CVec site(2);
    site << (b == '1' ? 1.0 : 0.0), (b == '0' ? 1.0 : 0.0);
    CVec next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * 2, 2) = v(i) * site;
    v = std::move(next);
  }
  return v;
}

DensityCheck check_density(const Operator& op, const Tolerances& tol) {
  DensityCheck out;
  out.herm_error = (op.entries - op.entries.adjoint()).cwiseAbs().maxCoeff();
  out.trace_error = std::abs(op.trace() - Complex(1.0));
  CMat herm = (op.entries + op.entries.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(herm, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = es.eigenvalues().minCoeff();

  std::ostringstream bad;
  auto fail = [&bad](const std::string& what, double magnitude) {
    if (bad.tellp() > 0) bad << "; ";
    bad << what << " (" << magnitude << ")";
  };
  if (out.herm_error > tol.herm) fail("hermiticity violation", out.herm_error);
  if (out.trace_error > tol.trace) fail("trace violation", out.trace_error);
  if (out.min_eigenvalue < -tol.psd) fail("PSD violation", -out.min_eigenvalue);
  out.violation = bad.str();
  out.ok = out.violation.empty();
  return out;
}

DensityMatrix make_density(Operator op, const Tolerances& tol) {
  DensityCheck check = check_density(op, tol);
  if (!check.ok) throw std::invalid_argument("not a density matrix: " + check.violation);
  return DensityMatrix{std::move(op)};
}

}  // namespace lindoa
