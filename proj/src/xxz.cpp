#include "lindoa/xxz.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "lindoa/attraction.hpp"

namespace lindoa {

namespace {

HilbertDim chain_dim(int n_sites) {
  if (n_sites < 1) throw std::invalid_argument("chain requires at least one site");
  return HilbertDim(1 << n_sites, std::vector<int>(n_sites, 2));
}

// sites are 1-based here, matching the chain labels |b_1 b_2 ... b_Nc>
Operator at_site(char symbol, int site, const HilbertDim& chain) {
  return embed_site(pauli(symbol), site - 1, chain);
}

}  // namespace

LindbladSystem build_xxz(const XxzSpec& spec) {
  if (spec.n_sites < 2) throw std::invalid_argument("build_xxz: need at least 2 sites");
  const HilbertDim dim = chain_dim(spec.n_sites);
  Operator h = zero_op(dim);
  for (int j = 1; j < spec.n_sites; ++j) {
    h = h + 2.0 * (at_site('-', j, dim) * at_site('+', j + 1, dim) +
                   at_site('+', j, dim) * at_site('-', j + 1, dim)) +
        at_site('Z', j, dim) * at_site('Z', j + 1, dim);
  }
  std::vector<Operator> couplings{
      spec.g_minus * (at_site('-', 1, dim) * at_site('+', spec.n_sites, dim)),
      spec.g_plus * (at_site('+', 1, dim) * at_site('-', spec.n_sites, dim))};
  return make_system(std::move(h), std::move(couplings));
}

Operator spin_current_op(int n_sites, int site) {
  if (site < 2 || site > n_sites - 1)
    throw std::invalid_argument("spin_current_op: site must satisfy 2 <= i <= n_sites-1");
  const HilbertDim dim = chain_dim(n_sites);
  return at_site('X', site, dim) * at_site('Y', site + 1, dim) -
         at_site('Y', site, dim) * at_site('X', site + 1, dim);
}

std::vector<Operator> sector_projectors(int n_sites) {
  const HilbertDim dim = chain_dim(n_sites);
  // Basis index 0 is |11...1>; a set bit at position j (from the left) means
  // site j+1 carries |0>, contributing -1 to the magnetization.
  std::map<int, CMat, std::greater<int>> sectors;
  for (int idx = 0; idx < dim.n; ++idx) {
    int m = 0;
    for (int j = 0; j < n_sites; ++j) m += ((idx >> (n_sites - 1 - j)) & 1) ? -1 : 1;
    auto [it, fresh] = sectors.try_emplace(m, CMat::Zero(dim.n, dim.n));
    it->second(idx, idx) = 1.0;
    (void)fresh;
  }
  std::vector<Operator> out;
  for (auto& [m, mat] : sectors) out.emplace_back(dim, std::move(mat));
  return out;
}

DensityMatrix xxz_singlet_state() {
  CVec psi = (qubit_ket("0110") - qubit_ket("1001")) / std::sqrt(2.0);
  return make_density(Operator(chain_dim(4), psi * psi.adjoint()));
}

DensityMatrix xxz_current_state(const SpectralData& sd) {
  if (sd.generator.dim.n != 16)
    throw std::invalid_argument("xxz_current_state: spectral data is not for the 4-site chain");
  // Uniform mixture over the one-spin-down sector S2.
  Operator pi2 = sector_projectors(4)[1];
  AsymptoticState as = asymptotic_state(sd, make_density(0.25 * pi2));
  if (!as.has_limit)
    throw std::runtime_error("xxz_current_state: mixture over S2 did not converge");
  const DensityMatrix& rho = as.limit;

  // Cross-check against the five-digit reference coefficients rather than
  // transcribing them: transcription would bake rounding error into ground
  // truth. |e1> = |0111>, |e2> = |1011>, |e3> = |1101>, |e4> = |1110>.
  const CVec e1 = qubit_ket("0111"), e2 = qubit_ket("1011"), e3 = qubit_ket("1101"),
             e4 = qubit_ket("1110");
  auto elem = [&rho](const CVec& a, const CVec& b) -> Complex {
    return (a.adjoint() * rho.op.entries * b)(0, 0);
  };
  std::ostringstream bad;
  auto expect = [&bad](const std::string& what, double got, double want, double tol) {
    if (std::abs(got - want) > tol) {
      if (bad.tellp() > 0) bad << "; ";
      bad << what << " = " << got << ", reference " << want;
    }
  };
  expect("population e4", elem(e4, e4).real(), 0.3401, 5e-4);
  expect("population e3", elem(e3, e3).real(), 0.2770, 5e-4);
  expect("population e2", elem(e2, e2).real(), 0.2308, 5e-4);
  expect("population e1", elem(e1, e1).real(), 0.1521, 5e-4);
  Complex coh = elem(e4, e3);
  expect("Re <e4|rho|e3>", coh.real(), 0.0833, 5e-4);
  expect("Im <e4|rho|e3>", coh.imag(), 0.0671, 5e-4);
  for (int site : {2, 3}) {
    double current = hs_inner(spin_current_op(4, site), rho.op).real();
    expect("spin current at site " + std::to_string(site), current, 0.2684, 1e-3);
  }
  if (bad.tellp() > 0)
    throw std::runtime_error("xxz_current_state: cross-check against the reference steady-state "
                             "failed: " + bad.str());
  return rho;
}

std::pair<DensityMatrix, DensityMatrix> reference_states() {
  LindbladSystem sys = build_xxz(XxzSpec{});
  SpectralData sd = full_spectrum(build_generator(sys));
  return {xxz_singlet_state(), xxz_current_state(sd)};
}

}  // namespace lindoa
