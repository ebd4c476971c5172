#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mqmi/entropy.hpp"
#include "mqmi/mqmi.hpp"
#include "mqmi/rng.hpp"
#include "mqmi/states.hpp"
#include "mqmi/tensor.hpp"

using namespace mqmi;

TEST_CASE("GHZ mixture endpoints") {
  DensityMatrix pure = ghz_mixture(1.0, 3);
  CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-12));
  RealVector eigs = hermitian_eigenvalues(pure.mat);
  CHECK(eigs(7) == doctest::Approx(1.0).epsilon(1e-12));

  DensityMatrix mixed = ghz_mixture(0.0, 3);
  CHECK((mixed.mat - ComplexMatrix::Identity(8, 8) / 8.0).cwiseAbs().maxCoeff() <
        1e-15);
}

TEST_CASE("GHZ mixture spectrum at half visibility") {
  DensityMatrix rho = ghz_mixture(0.5, 3);
  RealVector eigs = hermitian_eigenvalues(rho.mat);
  CHECK(eigs(7) == doctest::Approx(9.0 / 16.0).epsilon(1e-12));
  for (int i = 0; i < 7; ++i) {
    CHECK(eigs(i) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  }
}

TEST_CASE("classical two-term state") {
  DensityMatrix pure = classical_two_term(1.0, 3);
  CHECK(pure.mat(0, 0).real() == 1.0);

  DensityMatrix half = classical_two_term(0.5, 3);
  for (const auto& label : {"A", "B", "C"}) {
    DensityMatrix m = partial_trace(half, {label});
    CHECK((m.mat - ComplexMatrix::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() <
          1e-15);
  }
}

TEST_CASE("classical two-term state saturates the q-entropy identity exactly") {
  DensityMatrix half = classical_two_term(0.5, 3);
  for (double q : {1.5, 2.0, 2.5}) {
    double margin = ssa_margin(half, {"A"}, {"B"}, {"C"},
                               EntropySpec::tsallis(q));
    CHECK(std::abs(margin) < 1e-14);
  }
}

TEST_CASE("additivity gap state matches its displayed matrices") {
  DensityMatrix rho = additivity_gap_state();
  REQUIRE(rho.layout.size() == 4);
  REQUIRE(rho.dim() == 16);

  DensityMatrix abc = partial_trace(rho, {"A", "B", "C"});
  ComplexMatrix expected = ComplexMatrix::Zero(8, 8);
  for (long r : {2, 4}) {
    for (long c : {2, 4}) expected(r, c) = 0.25;
  }
  for (long r : {3, 5}) {
    for (long c : {3, 5}) expected(r, c) = 0.25;
  }
  CHECK((abc.mat - expected).cwiseAbs().maxCoeff() < 1e-14);

  RealVector eigs = hermitian_eigenvalues(abc.mat);
  CHECK(eigs(7) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eigs(6) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(eigs(5)) < 1e-12);

  DensityMatrix ab = partial_trace(rho, {"A", "B"});
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(1, 1) = bell(1, 2) = bell(2, 1) = bell(2, 2) = 0.5;
  CHECK((ab.mat - bell).cwiseAbs().maxCoeff() < 1e-14);

  for (const auto& pair : std::vector<std::vector<std::string>>{
           {"A", "C"}, {"B", "C"}, {"C", "D"}}) {
    DensityMatrix m = partial_trace(rho, pair);
    CHECK((m.mat - ComplexMatrix::Identity(4, 4) * 0.25).cwiseAbs().maxCoeff() <
          1e-14);
  }
}

TEST_CASE("single-block markov state with product factors is a product state") {
  ComplexMatrix left = ComplexMatrix::Zero(4, 4);  // |0><0| x |+><+| on A,BL
  left(0, 0) = left(0, 1) = left(1, 0) = left(1, 1) = 0.5;
  ComplexMatrix right = ComplexMatrix::Identity(2, 2) * 0.5;  // C alone
  MarkovSpec spec;
  spec.blocks.push_back({1.0, left, right, 2, 1});
  DensityMatrix rho = markov_state(spec);
  REQUIRE(rho.layout.total_dim() == 8);
  double i_abc = mutual_information(rho, Partition::parse("A|BC"), MqmiSpec::I());
  CHECK(std::abs(i_abc) < 1e-10);
}

TEST_CASE("two trivial blocks reproduce the classical two-term state") {
  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  ComplexMatrix ket1 = ComplexMatrix::Zero(2, 2);
  ket1(1, 1) = 1.0;
  MarkovSpec spec;
  spec.blocks.push_back({0.5, ket0, ket0, 1, 1});
  spec.blocks.push_back({0.5, ket1, ket1, 1, 1});
  DensityMatrix rho = markov_state(spec);
  DensityMatrix expected = classical_two_term(0.5, 3);
  CHECK((rho.mat - expected.mat).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("markov states saturate strong subadditivity") {
  DensityMatrix demo = markov_demo_state();
  double margin = ssa_margin(demo, {"A"}, {"B"}, {"C"}, EntropySpec::vn());
  CHECK(std::abs(margin) < 1e-9);
  // and still carry A-C correlation
  double leak = mutual_information(demo, Partition::parse("A|C"), MqmiSpec::I());
  CHECK(leak > 1e-3);
}

TEST_CASE("sampled markov specs all saturate strong subadditivity") {
  Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    MarkovSpec spec;
    int blocks = 1 + static_cast<int>(rng.next_u64() % 3);
    std::vector<double> weights;
    double total = 0.0;
    for (int j = 0; j < blocks; ++j) {
      weights.push_back(0.1 + rng.uniform());
      total += weights.back();
    }
    for (int j = 0; j < blocks; ++j) {
      int dl = 1 + static_cast<int>(rng.next_u64() % 2);
      int dr = 1 + static_cast<int>(rng.next_u64() % 2);
      DensityMatrix left = random_mixed(
          SubsystemLayout({{"L", 2 * dl}}), 2 * dl, rng.next_u64());
      DensityMatrix right = random_mixed(
          SubsystemLayout({{"R", 2 * dr}}), 2 * dr, rng.next_u64());
      spec.blocks.push_back({weights[j] / total, left.mat, right.mat, dl, dr});
    }
    if (spec.blocks.size() == 1 && spec.blocks[0].b_left_dim == 1 &&
        spec.blocks[0].b_right_dim == 1) {
      spec.blocks[0].b_left_dim = 2;
      spec.blocks[0].left = random_mixed(SubsystemLayout({{"L", 4}}), 4,
                                         rng.next_u64())
                                .mat;
    }
    DensityMatrix rho = markov_state(spec);
    double margin = ssa_margin(rho, {"A"}, {"B"}, {"C"}, EntropySpec::vn());
    CHECK(std::abs(margin) <= 1e-9);
  }
}

TEST_CASE("markov spec validation") {
  MarkovSpec spec;
  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  spec.blocks.push_back({0.7, ket0, ket0, 1, 1});
  CHECK_THROWS_AS((void)markov_state(spec), std::invalid_argument);  // weights
  spec.blocks[0].weight = 1.0;
  CHECK_THROWS_AS((void)markov_state(spec), std::invalid_argument);  // B dim 1
  spec.blocks[0].b_left_dim = 2;  // left factor now has the wrong size
  CHECK_THROWS_AS((void)markov_state(spec), std::invalid_argument);
}

TEST_CASE("random states are deterministic and well formed") {
  SubsystemLayout layout = SubsystemLayout::qubits(3);
  DensityMatrix p1 = random_pure(layout, 42);
  DensityMatrix p2 = random_pure(layout, 42);
  CHECK((p1.mat - p2.mat).cwiseAbs().maxCoeff() == 0.0);
  CHECK(p1.purity() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p1.mat.trace().real() == doctest::Approx(1.0).epsilon(1e-12));

  DensityMatrix m1 = random_mixed(layout, 4, 43);
  DensityMatrix m2 = random_mixed(layout, 4, 43);
  CHECK((m1.mat - m2.mat).cwiseAbs().maxCoeff() == 0.0);
  CHECK(violated_invariants(m1).empty());

  DensityMatrix r1 = random_mixed(layout, 1, 44);
  CHECK(r1.purity() == doctest::Approx(1.0).epsilon(1e-10));

  DensityMatrix other = random_pure(layout, 45);
  CHECK((p1.mat - other.mat).cwiseAbs().maxCoeff() > 1e-3);

  CHECK_THROWS_AS((void)random_mixed(layout, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)random_mixed(layout, 9, 1), std::invalid_argument);
}

TEST_CASE("builtin state registry") {
  for (const auto& name : builtin_state_names()) {
    DensityMatrix rho = builtin_state(name);
    CHECK(violated_invariants(rho).empty());
  }
  CHECK_THROWS_AS((void)builtin_state("nope"), std::invalid_argument);
}

TEST_CASE("probability and size guards") {
  CHECK_THROWS_AS((void)ghz_mixture(1.5, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)ghz_mixture(-0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)ghz_state(1), std::invalid_argument);
  CHECK_THROWS_AS((void)classical_two_term(0.5, 1), std::invalid_argument);
}
