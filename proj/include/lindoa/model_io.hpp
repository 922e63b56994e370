#pragma once

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "lindoa/attraction.hpp"
#include "lindoa/evolution.hpp"

namespace lindoa {

// Structural problems with input documents (CLI exit 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One weighted Pauli string, e.g. coeff * Z+-I acting on 4 sites.
struct PauliTerm {
  Complex coeff;
  std::string sites;  // per-site symbols from {I, X, Y, Z, +, -}
};

Operator operator_from_terms(const std::vector<PauliTerm>& terms, const HilbertDim& chain);

// Model files are JSON documents with either a preset
//   {"preset": "xxz", "n_sites": 4}
// or explicit operators over "dim" (plain dimension) or "sites" (qubit chain):
//   {"sites": 2,
//    "hamiltonian": <operator>,
//    "lindblad_ops": [<operator>, ...]}
// where <operator> is a dense matrix [[[re,im], ...], ...] or a list of Pauli
// terms [{"coeff": [re,im], "string": "Z+-I"}, ...] (exactly one form each).
LindbladSystem model_from_json(const nlohmann::json& doc, const Tolerances& tol = {});
LindbladSystem load_model(const std::filesystem::path& path, const Tolerances& tol = {});
nlohmann::json model_to_json(const LindbladSystem& sys);

// Complex numbers serialize as [re, im] with lossless double round-trip.
nlohmann::json matrix_to_json(const CMat& m);
CMat matrix_from_json(const nlohmann::json& j);
Operator load_operator(const std::filesystem::path& path);

/// Reads tolerance overrides from the LINDOA_TOLERANCES environment variable,
/// a JSON object with any of tau_herm, tau_tr, tau_psd, tau_perif, tau_member,
/// tau_rank.
Tolerances tolerances_from_env();

nlohmann::json spectrum_report_json(const SpectralData& sd, const ConservedSet* cs, int kernel_dim);
nlohmann::json certificate_json(const AttractionCertificate& cert);
nlohmann::json steady_report_json(const SteadyStateReport& report);

/// CSV columns t, distance, trace_error, min_eig.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj,
                          const std::vector<double>& distances);

}  // namespace lindoa
