// lindoa: attraction-domain analysis for steady states of Lindblad systems.
//
// Exit codes: 0 success (membership: member), 1 non-member, 2 parse error,
// 3 validation error, 4 defective peripheral block.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lindoa/model_io.hpp"
#include "lindoa/xxz.hpp"

namespace {

using namespace lindoa;

constexpr int kOk = 0;
constexpr int kNonMember = 1;
constexpr int kParseError = 2;
constexpr int kValidationError = 3;
constexpr int kDefective = 4;
constexpr int kInternalError = 70;

void emit(const nlohmann::json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << std::endl;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file " + path);
  out << doc.dump(2) << '\n';
}

int cmd_spectrum(const std::string& model_path, const std::string& json_path,
                 const Tolerances& tol) {
  LindbladSystem sys = load_model(model_path, tol);
  Superoperator gen = build_generator(sys);
  SpectralData sd = full_spectrum(gen, tol);
  int kernel_dim = static_cast<int>(kernel_basis(gen, tol.rank).size());
  if (sd.defective) {
    emit(spectrum_report_json(sd, nullptr, kernel_dim), json_path);
    std::cerr << "lindoa: defective peripheral block: " << sd.defect_reason << '\n';
    return kDefective;
  }
  ConservedSet cs = peripheral_observables(sd);
  emit(spectrum_report_json(sd, &cs, kernel_dim), json_path);
  return kOk;
}

int cmd_membership(const std::string& model_path, const std::string& steady_path,
                   const std::string& initial_path, double tol_member, const Tolerances& tol) {
  LindbladSystem sys = load_model(model_path, tol);
  DensityMatrix steady = make_density(load_operator(steady_path), tol);
  DensityMatrix initial = make_density(load_operator(initial_path), tol);
  SpectralData sd = full_spectrum(build_generator(sys), tol);
  ConservedSet cs = peripheral_observables(sd);
  AttractionCertificate cert = membership(sys, sd, cs, steady, initial, tol_member);
  emit(certificate_json(cert), "");
  return cert.member ? kOk : kNonMember;
}

int cmd_evolve(const std::string& model_path, const std::string& initial_path,
               const std::string& ref_path, double tmax, int steps, const std::string& csv_path,
               const Tolerances& tol) {
  LindbladSystem sys = load_model(model_path, tol);
  DensityMatrix initial = make_density(load_operator(initial_path), tol);
  DensityMatrix ref = make_density(load_operator(ref_path), tol);
  std::vector<double> times(steps);
  for (int i = 0; i < steps; ++i) times[i] = tmax * i / (steps - 1);
  Trajectory traj = propagate(build_generator(sys), initial, times);
  std::vector<double> distances = distance_curve(traj, ref);
  std::ofstream out(csv_path);
  if (!out) throw ParseError("cannot open output file " + csv_path);
  write_trajectory_csv(out, traj, distances);
  return kOk;
}

int cmd_report(const std::string& model_path, const Tolerances& tol) {
  LindbladSystem sys = load_model(model_path, tol);
  Superoperator gen = build_generator(sys);
  SpectralData sd = full_spectrum(gen, tol);
  emit(steady_report_json(steady_report(sys, gen, sd)), "");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attraction-domain analysis for steady states of Lindblad open quantum systems"};
  app.require_subcommand(1);

  std::string model_path, json_path, steady_path, initial_path, ref_path, csv_path;
  double tol_member = -1.0;
  double tmax = 0.0;
  int steps = 0;

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues, peripheral counts, kernel dimension and conserved observables");
  spectrum->add_option("model", model_path, "model JSON file")->required();
  spectrum->add_option("--json", json_path, "write the report to this file instead of stdout");

  CLI::App* member = app.add_subcommand(
      "membership", "Decide whether an initial state lies in the attraction domain of a steady state");
  member->add_option("model", model_path, "model JSON file")->required();
  member->add_option("--steady", steady_path, "steady-state matrix JSON file")->required();
  member->add_option("--initial", initial_path, "initial-state matrix JSON file")->required();
  member->add_option("--tol", tol_member, "membership tolerance on identification-vector deltas");

  CLI::App* evolve = app.add_subcommand("evolve", "Propagate a state and emit a distance curve CSV");
  evolve->add_option("model", model_path, "model JSON file")->required();
  evolve->add_option("--initial", initial_path, "initial-state matrix JSON file")->required();
  evolve->add_option("--ref", ref_path, "reference-state matrix JSON file")->required();
  evolve->add_option("--tmax", tmax, "final time")->required();
  evolve->add_option("--steps", steps, "number of grid points (uniform, includes t = 0)")->required();
  evolve->add_option("--csv", csv_path, "output CSV file")->required();

  CLI::App* report = app.add_subcommand("report", "Steady-state census: kernel dimension, "
                                                  "uniqueness, representatives");
  report->add_option("model", model_path, "model JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "lindoa: " << e.what() << '\n';
    return kParseError;
  }

  try {
    lindoa::Tolerances tol = lindoa::tolerances_from_env();
    if (tol_member <= 0.0) tol_member = tol.membership;
    if (spectrum->parsed()) return cmd_spectrum(model_path, json_path, tol);
    if (member->parsed()) return cmd_membership(model_path, steady_path, initial_path, tol_member, tol);
    if (evolve->parsed()) {
      if (!(tmax > 0.0) || steps < 2) {
        std::cerr << "lindoa: evolve needs --tmax > 0 and --steps >= 2\n";
        return kParseError;
      }
      return cmd_evolve(model_path, initial_path, ref_path, tmax, steps, csv_path, tol);
    }
    if (report->parsed()) return cmd_report(model_path, tol);
    return kParseError;
  } catch (const lindoa::ParseError& e) {
    std::cerr << "lindoa: " << e.what() << '\n';
    return kParseError;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "lindoa: " << e.what() << '\n';
    return kParseError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "lindoa: " << e.what() << '\n';
    return kParseError;
  } catch (const lindoa::DefectiveSpectrumError& e) {
    std::cerr << "lindoa: " << e.what() << '\n';
    return kDefective;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lindoa: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "lindoa: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}
