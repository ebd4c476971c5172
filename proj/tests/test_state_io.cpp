#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "mqmi/state_io.hpp"
#include "mqmi/states.hpp"
#include "mqmi/verify.hpp"

using namespace mqmi;

TEST_CASE("state files round-trip bit for bit") {
  DensityMatrix rho = random_mixed(SubsystemLayout({{"A", 2}, {"B", 3}}), 3, 5);
  nlohmann::json j = state_to_json(rho);
  DensityMatrix back = state_from_json(j);
  CHECK(back.layout == rho.layout);
  CHECK((back.mat - rho.mat).cwiseAbs().maxCoeff() == 0.0);

  auto path = std::filesystem::temp_directory_path() / "mqmi_state_test.json";
  write_state_file(path.string(), rho);
  DensityMatrix from_disk = read_state_file(path.string());
  CHECK((from_disk.mat - rho.mat).cwiseAbs().maxCoeff() == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("reader names the violated invariants") {
  DensityMatrix rho = random_mixed(SubsystemLayout::qubits(1), 2, 6);
  nlohmann::json j = state_to_json(rho);

  nlohmann::json bad_trace = j;
  bad_trace["matrix"][0][0] = bad_trace["matrix"][0][0].get<double>() + 0.5;
  CHECK_THROWS_WITH_AS((void)state_from_json(bad_trace),
                       doctest::Contains("trace"), std::invalid_argument);

  nlohmann::json bad_herm = j;
  bad_herm["matrix"][1][1] = 0.7;  // imaginary part of an off-diagonal entry
  CHECK_THROWS_WITH_AS((void)state_from_json(bad_herm),
                       doctest::Contains("Hermitian"), std::invalid_argument);

  nlohmann::json bad_count = j;
  bad_count["matrix"].erase(0);
  CHECK_THROWS_WITH_AS((void)state_from_json(bad_count),
                       doctest::Contains("entries"), std::invalid_argument);

  nlohmann::json bad_psd = j;
  // diag(1.4, -0.4): Hermitian, unit trace, not PSD
  bad_psd["matrix"] = nlohmann::json::array();
  for (double v : {1.4, 0.0, 0.0, -0.4}) {
    bad_psd["matrix"].push_back({v, 0.0});
  }
  CHECK_THROWS_WITH_AS((void)state_from_json(bad_psd),
                       doctest::Contains("PSD"), std::invalid_argument);

  CHECK_THROWS_AS((void)read_state_file("/no/such/file.json"),
                  std::runtime_error);
}

TEST_CASE("report serialization carries provenance and the witness state") {
  CheckReport r = check_discorrelated(classical_two_term(0.5, 3), MqmiSpec::I());
  r.seed = 42;
  nlohmann::json j = report_to_json(r);
  CHECK(j.at("id") == "discorrelated");
  CHECK(j.at("seed") == 42);
  CHECK(j.at("version") == kVersionString);
  CHECK(j.contains("witness"));
  DensityMatrix witness = state_from_json(j.at("witness").at("state"));
  CHECK(witness.dim() == 8);
  CHECK(j.at("verdict") == "counterexample-found");
}
