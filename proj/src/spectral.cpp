#include "lindoa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace lindoa {

namespace {

constexpr double kClusterRadius = 1e-8;   // eigenvalue clustering before bi-orthogonalization
constexpr double kGramCut = 1e-8;         // smallest singular value of the peripheral Gram
constexpr double kBiorthTol = 1e-8;

std::vector<int> sorted_indices(const CVec& vals, bool conjugate_order) {
  std::vector<int> idx(vals.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    double ia = conjugate_order ? -vals(a).imag() : vals(a).imag();
    double ib = conjugate_order ? -vals(b).imag() : vals(b).imag();
    if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
    return ia < ib;
  });
  return idx;
}

// Isometric embedding of Hermitian matrices into R^{n^2}: the real dot product
// of images equals the HS inner product of the operators.
RVec hermitian_to_real(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  RVec out(static_cast<Eigen::Index>(n) * n);
  Eigen::Index p = 0;
  const double s = std::sqrt(2.0);
  for (int i = 0; i < n; ++i) out(p++) = m(i, i).real();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out(p++) = s * m(i, j).real();
      out(p++) = s * m(i, j).imag();
    }
  return out;
}

// Rank-revealing subset selection on HS-normalized Hermitian candidates:
// returns indices of a maximal linearly independent subset (drop tolerance on
// the pivoted-QR diagonal).
std::vector<int> prune_independent(const std::vector<Operator>& candidates, double drop_tol) {
  if (candidates.empty()) return {};
  const int n = candidates.front().n();
  Eigen::MatrixXd cols(static_cast<Eigen::Index>(n) * n, candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k)
    cols.col(static_cast<Eigen::Index>(k)) = hermitian_to_real(candidates[k].entries);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(cols);
  const auto& r = qr.matrixR();
  const auto& perm = qr.colsPermutation().indices();
  const double head = std::abs(r(0, 0));
  std::vector<int> kept;
  for (Eigen::Index k = 0; k < std::min<Eigen::Index>(r.rows(), r.cols()); ++k) {
    if (std::abs(r(k, k)) <= drop_tol * head) break;
    kept.push_back(perm(k));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct Cluster {
  Complex value;
  std::vector<int> members;  // positions into sd.peripheral
};

std::vector<Cluster> cluster_eigenvalues(const CVec& eigenvalues, const std::vector<int>& subset) {
  std::vector<Cluster> clusters;
  for (std::size_t pos = 0; pos < subset.size(); ++pos) {
    Complex lam = eigenvalues(subset[pos]);
    bool placed = false;
    for (Cluster& c : clusters)
      if (std::abs(c.value - lam) <= kClusterRadius) {
        c.members.push_back(static_cast<int>(pos));
        placed = true;
        break;
      }
    if (!placed) clusters.push_back({lam, {static_cast<int>(pos)}});
  }
  return clusters;
}

}  // namespace

SpectralData full_spectrum(const Superoperator& generator, const Tolerances& tol) {
  if (generator.kind != SuperopKind::Generator)
    throw std::invalid_argument("full_spectrum: expected a generator superoperator");

  SpectralData sd;
  sd.generator = generator;
  const HilbertDim& dim = generator.dim;
  const Eigen::Index nn = generator.matrix.rows();

  Eigen::ComplexEigenSolver<CMat> right(generator.matrix, true);
  if (right.info() != Eigen::Success) throw std::runtime_error("full_spectrum: eigensolver failed");
  Eigen::ComplexEigenSolver<CMat> left(CMat(generator.matrix.adjoint()), true);
  if (left.info() != Eigen::Success) throw std::runtime_error("full_spectrum: adjoint eigensolver failed");

  std::vector<int> rperm = sorted_indices(right.eigenvalues(), false);
  std::vector<int> lperm = sorted_indices(left.eigenvalues(), true);

  sd.eigenvalues.resize(nn);
  sd.right_ops.reserve(nn);
  sd.left_ops.reserve(nn);
  CVec left_vals(nn);
  for (Eigen::Index k = 0; k < nn; ++k) {
    sd.eigenvalues(k) = right.eigenvalues()(rperm[k]);
    CVec rv = right.eigenvectors().col(rperm[k]);
    CVec lv = left.eigenvectors().col(lperm[k]);
    sd.right_ops.push_back(devectorize(rv / rv.norm(), dim));
    sd.left_ops.push_back(devectorize(lv / lv.norm(), dim));
    left_vals(k) = left.eigenvalues()(lperm[k]);
  }

  sd.spectral_radius = sd.eigenvalues.cwiseAbs().maxCoeff();
  const double tau = tol.peripheral * std::max(1.0, sd.spectral_radius);

  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < nn; ++k) {
    double re = sd.eigenvalues(k).real();
    if (std::abs(re) <= tau) {
      sd.peripheral.push_back(static_cast<int>(k));
      if (std::abs(sd.eigenvalues(k)) <= tau) sd.zero_modes.push_back(static_cast<int>(k));
    } else {
      gap = std::min(gap, std::abs(re));
      if (re > tau) {
        sd.defective = true;
        sd.defect_reason = "eigenvalue with positive real part (not a valid Lindblad generator)";
      }
    }
  }
  sd.J = static_cast<int>(sd.peripheral.size());
  sd.J0 = static_cast<int>(sd.zero_modes.size());
  sd.decay_gap = std::isfinite(gap) ? gap : 0.0;
  if (sd.defective) return sd;
  if (sd.J == 0) {
    // trace preservation guarantees a zero mode; an empty peripheral set
    // means the input was not a Lindblad generator
    sd.defective = true;
    sd.defect_reason = "no peripheral eigenvalues (trace preservation guarantees one)";
    return sd;
  }

  // Collect the adjoint's peripheral eigenvectors and pair them with the
  // generator's, cluster by cluster through conjugate eigenvalues. Individual
  // matches inside a degenerate cluster are arbitrary; the Gram solve below
  // fixes the dual basis on the whole peripheral block at once.
  std::vector<int> left_pool;
  for (Eigen::Index k = 0; k < nn; ++k)
    if (std::abs(left_vals(k).real()) <= tau) left_pool.push_back(static_cast<int>(k));
  if (static_cast<int>(left_pool.size()) != sd.J) {
    sd.defective = true;
    sd.defect_reason = "left/right peripheral counts differ";
    return sd;
  }

  const double pair_tol = std::max(1e-7, 1e-10 * sd.spectral_radius);
  std::vector<int> paired(sd.J, -1);
  std::vector<bool> used(left_pool.size(), false);
  for (const Cluster& c : cluster_eigenvalues(sd.eigenvalues, sd.peripheral)) {
    for (int pos : c.members) {
      int best = -1;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t q = 0; q < left_pool.size(); ++q) {
        if (used[q]) continue;
        double d = std::abs(left_vals(left_pool[q]) - std::conj(c.value));
        if (d < best_d) { best_d = d; best = static_cast<int>(q); }
      }
      if (best < 0 || best_d > pair_tol) {
        sd.defective = true;
        sd.defect_reason = "peripheral eigenvalues of the adjoint do not mirror the generator's";
        return sd;
      }
      used[best] = true;
      paired[pos] = left_pool[best];
    }
  }

  CMat v(nn, sd.J), w(nn, sd.J);
  for (int t = 0; t < sd.J; ++t) {
    v.col(t) = vectorize(sd.right_ops[sd.peripheral[t]]);
    w.col(t) = vectorize(sd.left_ops[paired[t]]);
  }
  CMat gram = w.adjoint() * v;
  Eigen::JacobiSVD<CMat> gsvd(gram);
  if (gsvd.singularValues().minCoeff() < kGramCut) {
    sd.defective = true;
    sd.defect_reason = "peripheral Gram system is numerically singular (Jordan block on the imaginary axis?)";
    return sd;
  }
  CMat w_dual = w * gram.inverse().adjoint();  // now w_dual^dag v = I
  double biorth = (w_dual.adjoint() * v - CMat::Identity(sd.J, sd.J)).cwiseAbs().maxCoeff();
  if (biorth > kBiorthTol) {
    sd.defective = true;
    std::ostringstream msg;
    msg << "bi-orthogonalization residual " << biorth << " exceeds " << kBiorthTol;
    sd.defect_reason = msg.str();
    return sd;
  }
  for (int t = 0; t < sd.J; ++t)
    sd.left_ops[sd.peripheral[t]] = devectorize(w_dual.col(t), dim);
  return sd;
}

ConservedSet peripheral_observables(const SpectralData& sd) {
  if (sd.defective)
    throw DefectiveSpectrumError("peripheral_observables: defective peripheral block (" +
                                 sd.defect_reason + ")");
  ConservedSet cs;

  auto hermitian_candidates = [](const Operator& omega, std::vector<Operator>& out) {
    Operator h1 = 0.5 * (omega + omega.adjoint());
    Operator h2 = Complex(0.0, -0.5) * (omega - omega.adjoint());  // (w - w^dag)/(2i)
    for (Operator* h : {&h1, &h2}) {
      double norm = hs_norm(*h);
      if (norm > 1e-12) out.push_back((1.0 / norm) * (*h));
    }
  };

  // Zero modes of L^dag: Hermitianize and prune back to J0.
  std::vector<Operator> zero_cands;
  for (int idx : sd.zero_modes) hermitian_candidates(sd.left_ops[idx], zero_cands);
  std::vector<int> kept = prune_independent(zero_cands, 1e-8);
  if (static_cast<int>(kept.size()) != sd.J0)
    throw std::runtime_error("peripheral_observables: hermitianization of the kernel is rank-deficient");
  for (int k : kept) {
    cs.observables.push_back(zero_cands[k]);
    cs.frequencies.push_back(0.0);
  }
  cs.n_conserved = sd.J0;

  // Oscillating modes come in conjugate pairs (+i beta, -i beta); each pair of
  // left eigen-operators (omega, omega^dag) spans a 2-dimensional real block of
  // Hermitian observables rotating at frequency beta.
  std::vector<int> oscillating;
  for (int idx : sd.peripheral)
    if (std::find(sd.zero_modes.begin(), sd.zero_modes.end(), idx) == sd.zero_modes.end())
      oscillating.push_back(idx);

  std::vector<Cluster> clusters = cluster_eigenvalues(sd.eigenvalues, oscillating);
  struct Block { double beta; std::vector<Operator> obs; };
  std::vector<Block> blocks;
  for (const Cluster& c : clusters) {
    if (c.value.imag() <= 0) continue;  // handle each conjugate pair once
    auto partner = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& d) {
      return std::abs(d.value - std::conj(c.value)) <= kClusterRadius;
    });
    if (partner == clusters.end() || partner->members.size() != c.members.size())
      throw std::runtime_error("peripheral_observables: unpaired oscillating eigenvalue cluster");
    std::vector<Operator> cands;
    for (int pos : c.members) hermitian_candidates(sd.left_ops[oscillating[pos]], cands);
    std::vector<int> keep = prune_independent(cands, 1e-8);
    if (keep.size() != 2 * c.members.size())
      throw std::runtime_error("peripheral_observables: oscillating block has deficient real span");
    Block blk{std::abs(c.value.imag()), {}};
    for (int k : keep) blk.obs.push_back(cands[k]);
    blocks.push_back(std::move(blk));
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.beta < b.beta; });
  for (Block& blk : blocks)
    for (Operator& o : blk.obs) {
      cs.observables.push_back(std::move(o));
      cs.frequencies.push_back(blk.beta);
    }

  if (static_cast<int>(cs.observables.size()) != sd.J)
    throw std::runtime_error("peripheral_observables: observable count does not match J");
  return cs;
}

RVec identification_vector(const ConservedSet& cs, const DensityMatrix& rho) {
  RVec out(static_cast<Eigen::Index>(cs.observables.size()));
  for (std::size_t l = 0; l < cs.observables.size(); ++l)
    out(static_cast<Eigen::Index>(l)) = hs_inner(cs.observables[l], rho.op).real();
  return out;
}

}  // namespace lindoa
