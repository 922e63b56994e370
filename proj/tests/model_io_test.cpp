#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "lindoa/model_io.hpp"
#include "lindoa/xxz.hpp"

using namespace lindoa;
using namespace lindoa::test;
using nlohmann::json;

TEST_CASE("dense model files round-trip bit-identically") {
  LindbladSystem sys = random_system(3, 2);
  json doc = model_to_json(sys);
  std::string text = doc.dump();
  LindbladSystem back = model_from_json(json::parse(text));
  CHECK(back.dim.n == sys.dim.n);
  CHECK((back.hamiltonian.entries.array() == sys.hamiltonian.entries.array()).all());
  REQUIRE(back.couplings.size() == sys.couplings.size());
  for (std::size_t k = 0; k < sys.couplings.size(); ++k)
    CHECK((back.couplings[k].entries.array() == sys.couplings[k].entries.array()).all());
}

TEST_CASE("pauli-term operators transcribe the XXZ couplings") {
  // Nc = 2 chain written as Pauli strings
  json doc = {
      {"sites", 2},
      {"hamiltonian", json::array({
          json{{"coeff", {2.0, 0.0}}, {"string", "-+"}},
          json{{"coeff", {2.0, 0.0}}, {"string", "+-"}},
          json{{"coeff", {1.0, 0.0}}, {"string", "ZZ"}},
      })},
      {"lindblad_ops", json::array({
          json::array({json{{"coeff", {2.0, 0.0}}, {"string", "-+"}}}),
          json::array({json{{"coeff", {1.0, 0.0}}, {"string", "+-"}}}),
      })},
  };
  LindbladSystem from_terms = model_from_json(doc);
  LindbladSystem reference = build_xxz(XxzSpec{2});
  CHECK(hs_distance(from_terms.hamiltonian, reference.hamiltonian) < 1e-15);
  REQUIRE(from_terms.couplings.size() == 2);
  CHECK(hs_distance(from_terms.couplings[0], reference.couplings[0]) < 1e-15);
  CHECK(hs_distance(from_terms.couplings[1], reference.couplings[1]) < 1e-15);
}

TEST_CASE("xxz preset expands to the builder output") {
  LindbladSystem preset = model_from_json(json{{"preset", "xxz"}, {"n_sites", 3}});
  LindbladSystem direct = build_xxz(XxzSpec{3});
  CHECK(hs_distance(preset.hamiltonian, direct.hamiltonian) == 0.0);
  LindbladSystem aliased = model_from_json(json{{"model", "xxz"}, {"n_sites", 3}});
  CHECK(hs_distance(aliased.hamiltonian, direct.hamiltonian) == 0.0);
}

TEST_CASE("schema violations raise ParseError") {
  CHECK_THROWS_AS(model_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(model_from_json(json{{"dim", 2}, {"sites", 1}, {"hamiltonian", json::array()}}),
                  ParseError);
  CHECK_THROWS_AS(model_from_json(json{{"dim", 2}}), ParseError);
  CHECK_THROWS_AS(model_from_json(json{{"preset", "transmon"}}), ParseError);
  // pauli strings over a plain "dim" space
  CHECK_THROWS_AS(model_from_json(json{
                      {"dim", 4},
                      {"hamiltonian", json::array({json{{"coeff", {1.0, 0.0}}, {"string", "ZZ"}}})}}),
                  ParseError);
  // wrong string length
  CHECK_THROWS_AS(model_from_json(json{
                      {"sites", 2},
                      {"hamiltonian", json::array({json{{"coeff", {1.0, 0.0}}, {"string", "Z"}}})}}),
                  ParseError);
  // malformed complex pair
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1.0]]]")), ParseError);
  // ragged rows
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[[1,0],[0,0]],[[0,0]]]")), ParseError);
}

TEST_CASE("non-Hermitian Hamiltonians fail validation, not parsing") {
  json doc = {{"dim", 2},
              {"hamiltonian", json::array({json::array({json{0.0, 0.0}, json{1.0, 0.0}}),
                                           json::array({json{0.0, 0.0}, json{0.0, 0.0}})})}};
  CHECK_THROWS_AS(model_from_json(doc), std::invalid_argument);
}

TEST_CASE("tolerance overrides come from the environment") {
  ::setenv("LINDOA_TOLERANCES", R"({"tau_member": 1e-5, "tau_psd": 1e-8})", 1);
  Tolerances tol = tolerances_from_env();
  CHECK(tol.membership == 1e-5);
  CHECK(tol.psd == 1e-8);
  CHECK(tol.herm == 1e-10);  // untouched default

  ::setenv("LINDOA_TOLERANCES", "{nope", 1);
  CHECK_THROWS_AS(tolerances_from_env(), ParseError);
  ::setenv("LINDOA_TOLERANCES", R"({"tau_member": -1})", 1);
  CHECK_THROWS_AS(tolerances_from_env(), ParseError);
  ::unsetenv("LINDOA_TOLERANCES");
  CHECK(tolerances_from_env().membership == 1e-7);
}

TEST_CASE("trajectory CSV has the agreed columns") {
  Superoperator g = build_generator(dephasing_model());
  Trajectory traj = propagate(g, random_density(2), {0.0, 1.0});
  std::vector<double> dist = distance_curve(traj, random_density(2));
  std::ostringstream out;
  write_trajectory_csv(out, traj, dist);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,distance,trace_error,min_eig");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("complex serialization survives a JSON round-trip losslessly") {
  CMat m = random_complex(3, 3);
  CMat back = matrix_from_json(json::parse(matrix_to_json(m).dump()));
  CHECK((back.array() == m.array()).all());
}
