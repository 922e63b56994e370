#include "lindoa/model_io.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "lindoa/xxz.hpp"

namespace lindoa {

namespace {

using nlohmann::json;

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex numbers must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Operator operator_from_json(const json& j, const HilbertDim& dim, const std::string& what) {
  if (!j.is_array() || j.empty())
    throw ParseError(what + ": operator must be a dense matrix or a non-empty list of Pauli terms");
  if (j.front().is_object()) {
    std::vector<PauliTerm> terms;
    for (const json& t : j) {
      if (!t.is_object() || !t.contains("coeff") || !t.contains("string"))
        throw ParseError(what + ": Pauli terms need \"coeff\" and \"string\"");
      terms.push_back({complex_from_json(t.at("coeff")), t.at("string").get<std::string>()});
    }
    return operator_from_terms(terms, dim);
  }
  CMat m = matrix_from_json(j);
  if (m.rows() != dim.n)
    throw ParseError(what + ": matrix size " + std::to_string(m.rows()) +
                     " does not match model dimension " + std::to_string(dim.n));
  return Operator(dim, std::move(m));
}

}  // namespace

Operator operator_from_terms(const std::vector<PauliTerm>& terms, const HilbertDim& chain) {
  if (chain.factors.empty())
    throw ParseError("Pauli strings require a qubit chain (use \"sites\", not \"dim\")");
  for (int f : chain.factors)
    if (f != 2) throw ParseError("Pauli strings require all tensor factors of dimension 2");
  Operator out = zero_op(chain);
  for (const PauliTerm& term : terms) {
    if (static_cast<int>(term.sites.size()) != static_cast<int>(chain.factors.size()))
      throw ParseError("Pauli string \"" + term.sites + "\" does not cover " +
                       std::to_string(chain.factors.size()) + " sites");
    try {
      out = out + term.coeff * pauli_string(term.sites);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

CMat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const auto rows = j.size();
  const auto cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw ParseError("matrix rows must be non-empty arrays");
  CMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json matrix_to_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

LindbladSystem model_from_json(const json& doc, const Tolerances& tol) {
  if (!doc.is_object()) throw ParseError("model file must contain a JSON object");

  std::string preset;
  if (doc.contains("preset")) preset = doc.at("preset").get<std::string>();
  else if (doc.contains("model")) preset = doc.at("model").get<std::string>();
  if (!preset.empty()) {
    if (preset != "xxz") throw ParseError("unknown preset \"" + preset + "\"");
    XxzSpec spec;
    if (doc.contains("n_sites")) spec.n_sites = doc.at("n_sites").get<int>();
    if (doc.contains("g_minus")) spec.g_minus = doc.at("g_minus").get<double>();
    if (doc.contains("g_plus")) spec.g_plus = doc.at("g_plus").get<double>();
    if (spec.n_sites < 2) throw ParseError("xxz preset needs n_sites >= 2");
    return build_xxz(spec);
  }

  if (doc.contains("dim") == doc.contains("sites"))
    throw ParseError("model needs exactly one of \"dim\" or \"sites\"");
  HilbertDim dim;
  if (doc.contains("sites")) {
    int sites = doc.at("sites").get<int>();
    if (sites < 1 || sites > 20) throw ParseError("\"sites\" out of range");
    dim = HilbertDim(1 << sites, std::vector<int>(sites, 2));
  } else {
    int n = doc.at("dim").get<int>();
    if (n < 1) throw ParseError("\"dim\" must be positive");
    dim = HilbertDim(n);
  }

  if (!doc.contains("hamiltonian")) throw ParseError("model needs a \"hamiltonian\"");
  Operator h = operator_from_json(doc.at("hamiltonian"), dim, "hamiltonian");
  std::vector<Operator> couplings;
  if (doc.contains("lindblad_ops")) {
    const json& ops = doc.at("lindblad_ops");
    if (!ops.is_array()) throw ParseError("\"lindblad_ops\" must be an array");
    for (std::size_t k = 0; k < ops.size(); ++k)
      couplings.push_back(operator_from_json(ops[k], dim, "lindblad_ops[" + std::to_string(k) + "]"));
  }
  return make_system(std::move(h), std::move(couplings), tol);
}

LindbladSystem load_model(const std::filesystem::path& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file " + path.string());
  json doc = json::parse(in);  // parse_error carries line/column diagnostics
  return model_from_json(doc, tol);
}

json model_to_json(const LindbladSystem& sys) {
  json doc;
  bool qubits = !sys.dim.factors.empty();
  for (int f : sys.dim.factors) qubits = qubits && f == 2;
  if (qubits) doc["sites"] = static_cast<int>(sys.dim.factors.size());
  else doc["dim"] = sys.dim.n;
  doc["hamiltonian"] = matrix_to_json(sys.hamiltonian.entries);
  json ops = json::array();
  for (const Operator& c : sys.couplings) ops.push_back(matrix_to_json(c.entries));
  doc["lindblad_ops"] = std::move(ops);
  return doc;
}

Operator load_operator(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file " + path.string());
  return Operator(matrix_from_json(json::parse(in)));
}

Tolerances tolerances_from_env() {
  Tolerances tol;
  const char* raw = std::getenv("LINDOA_TOLERANCES");
  if (!raw || !*raw) return tol;
  json doc;
  try {
    doc = json::parse(raw);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("LINDOA_TOLERANCES is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("LINDOA_TOLERANCES must be a JSON object");
  auto pick = [&doc](const char* key, double& slot) {
    if (!doc.contains(key)) return;
    slot = doc.at(key).get<double>();
    if (!(slot > 0)) throw ParseError(std::string("LINDOA_TOLERANCES.") + key + " must be positive");
  };
  pick("tau_herm", tol.herm);
  pick("tau_tr", tol.trace);
  pick("tau_psd", tol.psd);
  pick("tau_perif", tol.peripheral);
  pick("tau_member", tol.membership);
  pick("tau_rank", tol.rank);
  return tol;
}

json spectrum_report_json(const SpectralData& sd, const ConservedSet* cs, int kernel_dim) {
  json doc;
  doc["dim"] = sd.generator.dim.n;
  json evs = json::array();
  for (Eigen::Index k = 0; k < sd.eigenvalues.size(); ++k)
    evs.push_back(complex_to_json(sd.eigenvalues(k)));
  doc["eigenvalues"] = std::move(evs);
  doc["J"] = sd.J;
  doc["J0"] = sd.J0;
  doc["kernel_dim"] = kernel_dim;
  doc["defect_flag"] = sd.defective;
  if (sd.defective) doc["defect_reason"] = sd.defect_reason;
  doc["spectral_radius"] = sd.spectral_radius;
  doc["decay_gap"] = sd.decay_gap;
  json obs = json::array();
  if (cs) {
    for (std::size_t l = 0; l < cs->observables.size(); ++l)
      obs.push_back({{"frequency", cs->frequencies[l]},
                     {"matrix", matrix_to_json(cs->observables[l].entries)}});
  }
  doc["conserved_observables"] = std::move(obs);
  return doc;
}

json certificate_json(const AttractionCertificate& cert) {
  json doc;
  doc["member"] = cert.member;
  doc["marginal"] = cert.marginal;
  doc["tol"] = cert.tol;
  doc["max_delta"] = cert.max_delta;
  doc["steady_residual"] = cert.steady_residual;
  json deltas = json::array();
  for (Eigen::Index l = 0; l < cert.deltas.size(); ++l) deltas.push_back(cert.deltas(l));
  doc["deltas"] = std::move(deltas);
  return doc;
}

json steady_report_json(const SteadyStateReport& report) {
  json doc;
  doc["kernel_dim"] = report.kernel_dim;
  doc["unique"] = report.unique;
  doc["doa_measure_zero"] = report.doa_measure_zero;
  json reps = json::array();
  for (const DensityMatrix& rep : report.representatives)
    reps.push_back(matrix_to_json(rep.op.entries));
  doc["representatives"] = std::move(reps);
  return doc;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          const std::vector<double>& distances) {
  if (distances.size() != traj.times.size())
    throw std::invalid_argument("write_trajectory_csv: distance column length mismatch");
  out.precision(17);
  out << "t,distance,trace_error,min_eig\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i)
    out << traj.times[i] << ',' << distances[i] << ',' << traj.trace_errors[i] << ','
        << traj.min_eigenvalues[i] << '\n';
}

}  // namespace lindoa
