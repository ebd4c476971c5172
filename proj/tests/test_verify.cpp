#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mqmi/rng.hpp"
#include "mqmi/state_io.hpp"
#include "mqmi/states.hpp"
#include "mqmi/tensor.hpp"
#include "mqmi/verify.hpp"

using namespace mqmi;

namespace {

DensityMatrix product_ab_c(std::uint64_t seed) {
  DensityMatrix ab = random_mixed(SubsystemLayout({{"A", 2}, {"B", 2}}), 2,
                                  derive_seed(seed, 0));
  DensityMatrix c = random_mixed(SubsystemLayout({{"C", 2}}), 2,
                                 derive_seed(seed, 1));
  return kron(ab, c);
}

}  // namespace

TEST_CASE("coarsening monotonicity passes for the von Neumann quantities") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, seed);
    CHECK(check_coarsening_monotone(rho, MqmiSpec::I()).verdict ==
          Verdict::pass);
    CHECK(check_coarsening_monotone(rho, MqmiSpec::IPrime()).verdict ==
          Verdict::pass);
  }
}

TEST_CASE("tsallis coarsening report separates drop pairs") {
  // A product of a maximally mixed qubit with a Bell pair: discard/merge
  // pairs stay monotone while a drop pair increases the value.
  DensityMatrix a{SubsystemLayout({{"A", 2}}),
                  ComplexMatrix::Identity(2, 2) * 0.5};
  DensityMatrix bc = bell_pair();
  DensityMatrix renamed{SubsystemLayout({{"B", 2}, {"C", 2}}), bc.mat};
  DensityMatrix rho = kron(a, renamed);
  CheckReport report = check_coarsening_monotone(rho, MqmiSpec::Iq(2.0));
  REQUIRE(report.min_margin_drop_pairs.has_value());
  CHECK(report.min_margin >= -1e-9);
  CHECK(*report.min_margin_drop_pairs < -0.2);
  CHECK(report.verdict == Verdict::counterexample_found);
  REQUIRE(report.witness.has_value());
}

TEST_CASE("discorrelated check flags the classical fixture") {
  CheckReport r =
      check_discorrelated(classical_two_term(0.5, 3), MqmiSpec::I());
  CHECK(r.verdict == Verdict::counterexample_found);
  REQUIRE(r.witness.has_value());
  bool saw = false;
  for (const auto& [k, v] : r.witness->values) {
    if (k == "J(A:C)") {
      saw = true;
      CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  CHECK(saw);
}

TEST_CASE("discorrelated check passes on products and vacuous states") {
  CheckReport r = check_discorrelated(product_ab_c(5), MqmiSpec::I());
  // condition holds only if I(A:BC) == I(A:B); for a product over AB x C it
  // does, and the leak I(A:C) vanishes.
  CHECK(r.verdict == Verdict::pass);

  DensityMatrix generic = random_mixed(SubsystemLayout::qubits(3), 4, 8);
  CheckReport r2 = check_discorrelated(generic, MqmiSpec::I());
  CHECK(r2.verdict == Verdict::pass);  // condition generically not met
}

TEST_CASE("complete monogamy holds for the block-sum quantity on products") {
  Partition abc = Partition::parse("A|B|C");
  Partition ab = Partition::parse("A|B");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CheckReport r = check_complete_monogamy(product_ab_c(100 + seed), abc, ab,
                                            MqmiSpec::I());
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.min_margin >= -1e-9);
  }
}

TEST_CASE("complete monogamy fails for the complement-sum quantity") {
  CheckReport r = check_complete_monogamy(classical_two_term(0.5, 3),
                                          Partition::parse("A|B|C"),
                                          Partition::parse("A|B"),
                                          MqmiSpec::IPrime());
  CHECK(r.verdict == Verdict::counterexample_found);
  REQUIRE(r.witness.has_value());
  CHECK(-r.min_margin == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tight variant distinguishes bell pairs from product pairs") {
  Partition fine = Partition::parse("A|B|C|D");
  Partition cut = Partition::parse("AB|CD");

  // Bell (x) Bell: the condition itself fails (I(A:B) = I(C:D) = 2).
  DensityMatrix bb = kron(bell_pair(),
                          [] {
                            DensityMatrix b = bell_pair();
                            return DensityMatrix{
                                SubsystemLayout({{"C", 2}, {"D", 2}}), b.mat};
                          }());
  CheckReport r1 = check_complete_monogamy(bb, fine, cut, MqmiSpec::I());
  CHECK(r1.verdict == Verdict::pass);
  bool condition_note = false;
  for (const auto& n : r1.notes) {
    if (n.find("condition not met") != std::string::npos) condition_note = true;
  }
  CHECK(condition_note);

  // sigma_A x omega_{BC} x tau_D: condition holds, exclusion values vanish.
  DensityMatrix sa = random_mixed(SubsystemLayout({{"A", 2}}), 2, 300);
  DensityMatrix bc = random_mixed(SubsystemLayout({{"B", 2}, {"C", 2}}), 3, 301);
  DensityMatrix td = random_mixed(SubsystemLayout({{"D", 2}}), 2, 302);
  DensityMatrix rho = kron(kron(sa, bc), td);
  CheckReport r2 = check_complete_monogamy(rho, fine, cut, MqmiSpec::I());
  CHECK(r2.verdict == Verdict::pass);
  CHECK(r2.min_margin >= -1e-9);
  CHECK(r2.id == "tight-complete-monogamy");
}

TEST_CASE("complete monogamy rejects unrelated partitions") {
  DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, 9);
  CHECK_THROWS_AS(
      (void)check_complete_monogamy(rho, Partition::parse("A|BC"),
                                    Partition::parse("AB|C"), MqmiSpec::I()),
      std::invalid_argument);
}

TEST_CASE("triangle slack is nonnegative for the von Neumann quantities") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    DensityMatrix r3 = random_mixed(SubsystemLayout::qubits(3), 4, 500 + seed);
    CHECK(check_triangle(r3, MqmiSpec::I()).min_margin >= -1e-9);
    DensityMatrix r4 = random_mixed(SubsystemLayout::qubits(4), 4, 600 + seed);
    CHECK(check_triangle(r4, MqmiSpec::I()).min_margin >= -1e-9);
    CHECK(check_triangle(r4, MqmiSpec::IPrime()).min_margin >= -1e-9);
  }
}

TEST_CASE("a known state violates the Tsallis triangle") {
  // Bell pair on A, D; maximally mixed B; pure C.
  DensityMatrix ad = bell_pair();
  DensityMatrix renamed{SubsystemLayout({{"A", 2}, {"D", 2}}), ad.mat};
  DensityMatrix b{SubsystemLayout({{"B", 2}}),
                  ComplexMatrix::Identity(2, 2) * 0.5};
  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  DensityMatrix c{SubsystemLayout({{"C", 2}}), ket0};
  DensityMatrix rho =
      permute_parties(kron(kron(renamed, b), c), {"A", "B", "C", "D"});
  CheckReport r = check_triangle(rho, MqmiSpec::Iq(2.0));
  CHECK(r.verdict == Verdict::counterexample_found);
  CHECK(r.min_margin == doctest::Approx(-0.25).epsilon(1e-9));
}

TEST_CASE("entropy bound margins") {
  // Maximally mixed three qubits: J = 0, S = 3, E-term = 0.
  DensityMatrix mixed = ghz_mixture(0.0, 3);
  CheckReport r = check_entropy_bound(mixed, MqmiSpec::I());
  CHECK(r.min_margin == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(r.verdict == Verdict::pass);

  // GHZ: equality.
  CheckReport r2 = check_entropy_bound(ghz_state(3), MqmiSpec::I());
  CHECK(std::abs(r2.min_margin) < 1e-9);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, 700 + seed);
    CHECK(check_entropy_bound(rho, MqmiSpec::I()).min_margin >= -1e-9);
    CHECK(check_entropy_bound(rho, MqmiSpec::Iq(2.0)).min_margin >= -1e-9);
  }
  CHECK_THROWS_AS((void)check_entropy_bound(mixed, MqmiSpec::IPrime()),
                  std::invalid_argument);
}

TEST_CASE("alpha fit on pure states returns the boundary exponent") {
  SweepConfig config;
  config.ensemble = SweepConfig::Ensemble::haar_pure;
  config.layout = SubsystemLayout::qubits(3);
  config.samples = 120;
  config.seed = 12345;
  for (const MqmiSpec& spec : {MqmiSpec::I(), MqmiSpec::Iq(2.0)}) {
    CheckReport r = fit_alpha(config, spec, AlphaVariant::monogamy);
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(r.alpha.has_value());
    // On pure three-party states the whole equals the sum of the two parts,
    // so the minimal exponent sits at 1.
    CHECK(*r.alpha == doctest::Approx(1.0).epsilon(2e-4));
    CHECK(r.min_margin >= -1e-9);
    REQUIRE(r.alpha_half_margin.has_value());
    CHECK(*r.alpha_half_margin < -1e-3);  // bracketing certificate
  }
}

TEST_CASE("alpha fit rejects mixed ensembles for the monogamy variant") {
  SweepConfig config;
  config.ensemble = SweepConfig::Ensemble::hs_mixed;
  config.layout = SubsystemLayout::qubits(3);
  config.samples = 5;
  CHECK_THROWS_AS((void)fit_alpha(config, MqmiSpec::I(), AlphaVariant::monogamy),
                  std::invalid_argument);
}

TEST_CASE("alpha fit for the complete and tight variants on mixed states") {
  SweepConfig config;
  config.ensemble = SweepConfig::Ensemble::hs_mixed;
  config.rank = 4;
  config.layout = SubsystemLayout::qubits(3);
  config.samples = 60;
  config.seed = 999;
  CheckReport rc = fit_alpha(config, MqmiSpec::I(), AlphaVariant::complete);
  CHECK(rc.verdict == Verdict::pass);
  REQUIRE(rc.alpha.has_value());
  CHECK(*rc.alpha <= 2.0 + 1e-3);  // whole >= part + max(other parts)
  CheckReport rt = fit_alpha(config, MqmiSpec::I(), AlphaVariant::tight);
  CHECK(rt.verdict == Verdict::pass);
  REQUIRE(rt.alpha.has_value());
  CHECK(*rt.alpha == doctest::Approx(1.0).epsilon(2e-4));  // exact chain rule
}

TEST_CASE("counterexample registry returns the expected verdicts") {
  for (const auto& id : counterexample_case_ids()) {
    CheckReport r = reproduce_counterexample(id);
    INFO(id);
    for (const auto& n : r.notes) INFO(n);
    if (id == "xi-example") {
      CHECK(r.verdict == Verdict::pass);
    } else {
      CHECK(r.verdict == Verdict::counterexample_found);
    }
  }
  CHECK_THROWS_AS((void)reproduce_counterexample("unknown"),
                  std::invalid_argument);
}

TEST_CASE("registry details: additivity gap and interaction sign scan") {
  CheckReport add = reproduce_counterexample("iqprime-additivity");
  CHECK(add.min_margin == doctest::Approx(-0.75).epsilon(1e-10));
  bool discrepancy_note = false;
  for (const auto& n : add.notes) {
    if (n.find("factored form") != std::string::npos) discrepancy_note = true;
  }
  CHECK(discrepancy_note);

  CheckReport ghz = reproduce_counterexample("ghz-idprime");
  bool sign_note = false;
  for (const auto& n : ghz.notes) {
    if (n.find("sign change") != std::string::npos) sign_note = true;
  }
  CHECK(sign_note);
}

TEST_CASE("sweeps are deterministic and order independent") {
  SweepConfig config;
  config.ensemble = SweepConfig::Ensemble::hs_mixed;
  config.rank = 4;
  config.layout = SubsystemLayout::qubits(3);
  config.samples = 25;
  config.seed = 777;
  auto a = run_sweep(config, {"coarsening-monotone", "ssa"}, MqmiSpec::I());
  auto b = run_sweep(config, {"coarsening-monotone", "ssa"}, MqmiSpec::I());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(report_to_json(a[i]).dump() == report_to_json(b[i]).dump());
    CHECK(a[i].verdict == Verdict::pass);
  }
  CHECK_THROWS_AS((void)run_sweep(config, {"bogus"}, MqmiSpec::I()),
                  std::invalid_argument);
}

TEST_CASE("searches find the documented violations quickly") {
  SearchConfig ssa{"sq-ssa-violation", 2.0, 40000, 7};
  CheckReport r1 = run_search(ssa);
  CHECK(r1.verdict == Verdict::counterexample_found);
  CHECK(r1.min_margin < -1e-6);
  REQUIRE(r1.witness.has_value());
  // the witness really violates strong subadditivity of the linear entropy
  double margin = ssa_margin(r1.witness->state, {"A"}, {"B"}, {"C"},
                             EntropySpec::tsallis(2.0));
  CHECK(margin == doctest::Approx(r1.min_margin).epsilon(1e-9));

  SearchConfig cinc{"iq-coarsen-c-increase", 2.0, 40000, 7};
  CheckReport r2 = run_search(cinc);
  CHECK(r2.verdict == Verdict::counterexample_found);

  CHECK_THROWS_AS((void)run_search(SearchConfig{"bogus", 2.0, 10, 1}),
                  std::invalid_argument);
}

TEST_CASE("worked six-party chain for the complement-sum quantity") {
  Partition finer = Partition::parse("AB|CD|EF");
  Partition coarser = Partition::parse("AB|C|E");
  REQUIRE(is_coarser(finer, coarser).coarser);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DensityMatrix psi = random_pure(SubsystemLayout::qubits(6), 900 + seed);
    SubsetSpectra cache(psi);
    double fine_v = mutual_information(cache, finer, MqmiSpec::IPrime());
    double coarse_v = mutual_information(cache, coarser, MqmiSpec::IPrime());
    CHECK(fine_v >= coarse_v - 1e-9);
  }
}

TEST_CASE("permutation symmetry check runs on a sample") {
  DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, 31);
  CheckReport r = check_permutation_symmetry(rho, MqmiSpec::IqPrime(2.0));
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.min_margin >= -1e-10);
}
