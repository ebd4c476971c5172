#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mqmi/mqmi.hpp"
#include "mqmi/rng.hpp"
#include "mqmi/states.hpp"
#include "mqmi/tensor.hpp"
#include "oracles.hpp"

using namespace mqmi;

namespace {
const Partition kSingles3 = Partition::parse("A|B|C");
}

TEST_CASE("GHZ fixtures for the two main quantities") {
  DensityMatrix ghz = ghz_state(3);
  CHECK(mutual_information(ghz, kSingles3, MqmiSpec::I()) ==
        doctest::Approx(3.0).epsilon(1e-12));
  CHECK(mutual_information(ghz, kSingles3, MqmiSpec::IPrime()) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("GHZ pairwise marginals sit on the exponent boundary") {
  // classically correlated pairs: each pairwise value is one bit, so at
  // exponent 1 the whole (3) exactly matches the pairwise sum.
  DensityMatrix ghz = ghz_state(3);
  SubsetSpectra cache(ghz);
  double pair_sum = 0.0;
  for (const auto& text : {"A|B", "A|C", "B|C"}) {
    double v = mutual_information(cache, Partition::parse(text), MqmiSpec::I());
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    pair_sum += v;
  }
  CHECK(mutual_information(cache, kSingles3, MqmiSpec::I()) ==
        doctest::Approx(pair_sum).epsilon(1e-12));
}

TEST_CASE("product states carry no mutual information") {
  DensityMatrix a = random_mixed(SubsystemLayout({{"A", 2}}), 2, 1);
  DensityMatrix b = random_mixed(SubsystemLayout({{"B", 2}}), 2, 2);
  DensityMatrix c = random_mixed(SubsystemLayout({{"C", 2}}), 2, 3);
  DensityMatrix rho = kron(kron(a, b), c);
  CHECK(std::abs(mutual_information(rho, kSingles3, MqmiSpec::I())) < 1e-10);
  CHECK(std::abs(mutual_information(rho, kSingles3, MqmiSpec::IPrime())) <
        1e-10);
}

TEST_CASE("interaction form on the GHZ mixture is negative") {
  DensityMatrix rho = ghz_mixture(0.5, 3);
  double v = mutual_information(rho, kSingles3, MqmiSpec::IDoublePrime());
  CHECK(v == doctest::Approx(-0.21692).epsilon(5e-4));
  CHECK(v < 0.0);
}

TEST_CASE("complement-sum Tsallis quantity vanishes across the product cut") {
  DensityMatrix rho = additivity_gap_state();
  Partition cut = Partition::parse("AB|CD");
  for (double q : {1.5, 2.0, 3.0}) {
    CHECK(std::abs(mutual_information(rho, cut, MqmiSpec::IqPrime(q))) < 1e-10);
  }
}

TEST_CASE("two-block coincidence of the two shapes") {
  for (std::uint64_t seed : {5u, 6u, 7u}) {
    DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, seed);
    for (const auto& text : {"A|BC", "AB|C", "AC|B"}) {
      Partition p = Partition::parse(text);
      CHECK(std::abs(mutual_information(rho, p, MqmiSpec::I()) -
                     mutual_information(rho, p, MqmiSpec::IPrime())) < 1e-10);
      CHECK(std::abs(mutual_information(rho, p, MqmiSpec::Iq(2.0)) -
                     mutual_information(rho, p, MqmiSpec::IqPrime(2.0))) <
            1e-10);
    }
  }
}

TEST_CASE("partition blocks outside the layout are rejected") {
  DensityMatrix rho = random_mixed(SubsystemLayout::qubits(2), 2, 9);
  CHECK_THROWS_AS(
      (void)mutual_information(rho, Partition::parse("A|Z"), MqmiSpec::I()),
      std::invalid_argument);
}

TEST_CASE("parties outside the partition are traced out first") {
  DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, 10);
  Partition ab = Partition::parse("A|B");
  double on_full = mutual_information(rho, ab, MqmiSpec::I());
  double on_marginal = mutual_information(partial_trace(rho, {"A", "B"}), ab,
                                          MqmiSpec::I());
  CHECK(std::abs(on_full - on_marginal) < 1e-12);
}

TEST_CASE("nonnegativity on random states") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, 600 + seed);
    CHECK(mutual_information(rho, kSingles3, MqmiSpec::I()) >= -1e-9);
    CHECK(mutual_information(rho, kSingles3, MqmiSpec::IPrime()) >= -1e-9);
    CHECK(mutual_information(rho, kSingles3, MqmiSpec::Iq(2.0)) >= -1e-9);
  }
}

TEST_CASE("additivity on products for the block-sum shape") {
  DensityMatrix left = random_mixed(SubsystemLayout({{"A", 2}, {"B", 2}}), 3, 77);
  DensityMatrix right = random_mixed(SubsystemLayout({{"C", 2}, {"D", 2}}), 3, 78);
  DensityMatrix rho = kron(left, right);
  double whole =
      mutual_information(rho, Partition::parse("A|B|C|D"), MqmiSpec::I());
  double parts =
      mutual_information(left, Partition::parse("A|B"), MqmiSpec::I()) +
      mutual_information(right, Partition::parse("C|D"), MqmiSpec::I());
  CHECK(std::abs(whole - parts) < 1e-9);

  double whole_p =
      mutual_information(rho, Partition::parse("A|B|C|D"), MqmiSpec::IPrime());
  double parts_p =
      mutual_information(left, Partition::parse("A|B"), MqmiSpec::IPrime()) +
      mutual_information(right, Partition::parse("C|D"), MqmiSpec::IPrime());
  CHECK(std::abs(whole_p - parts_p) < 1e-9);
}

TEST_CASE("q = 2 product characterization") {
  // at most one mixed factor: zero
  DensityMatrix mixed = random_mixed(SubsystemLayout({{"A", 2}}), 2, 30);
  DensityMatrix pure_b = random_pure(SubsystemLayout({{"B", 2}}), 31);
  DensityMatrix one_mixed = kron(mixed, pure_b);
  CHECK(std::abs(mutual_information(one_mixed, Partition::parse("A|B"),
                                    MqmiSpec::Iq(2.0))) < 1e-10);
  // two mixed factors: strictly positive
  DensityMatrix mixed_b = random_mixed(SubsystemLayout({{"B", 2}}), 2, 32);
  DensityMatrix two_mixed = kron(mixed, mixed_b);
  CHECK(mutual_information(two_mixed, Partition::parse("A|B"),
                           MqmiSpec::Iq(2.0)) > 1e-6);
}

TEST_CASE("permutation symmetry of all six kinds") {
  DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, 41);
  DensityMatrix permuted = permute_parties(rho, {"C", "A", "B"});
  for (const MqmiSpec& spec :
       {MqmiSpec::I(), MqmiSpec::IPrime(), MqmiSpec::IDoublePrime(),
        MqmiSpec::Iq(2.0), MqmiSpec::IqPrime(2.0), MqmiSpec::IqDoublePrime(2.0)}) {
    double v0 = mutual_information(rho, kSingles3, spec);
    double v1 = mutual_information(permuted, kSingles3, spec);
    CHECK(std::abs(v0 - v1) < 1e-10);
  }
}

TEST_CASE("tsallis kinds reject q <= 1 and the interaction form wants 3 blocks") {
  CHECK_THROWS_AS((void)MqmiSpec::Iq(1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)MqmiSpec::Iq(0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)MqmiSpec::IqPrime(0.9), std::invalid_argument);
  DensityMatrix rho = random_mixed(SubsystemLayout::qubits(2), 2, 50);
  CHECK_THROWS_AS((void)mutual_information(rho, Partition::parse("A|B"),
                                           MqmiSpec::IDoublePrime()),
                  std::invalid_argument);
}

TEST_CASE("kind tokens round-trip") {
  for (const auto& kind :
       {"I", "Iprime", "Idprime", "Iq", "Iqprime", "Iqdprime"}) {
    MqmiSpec spec = MqmiSpec::from_kind(kind, 2.0);
    CHECK(spec.kind_token() == kind);
  }
  CHECK_THROWS_AS((void)MqmiSpec::from_kind("Iq", std::nullopt),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)MqmiSpec::from_kind("nope", std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("coarsening map covers every coarser partition") {
  DensityMatrix rho = random_mixed(SubsystemLayout::qubits(3), 4, 60);
  auto values = mutual_information_coarsenings(rho, kSingles3, MqmiSpec::I());
  CHECK(values.size() == 14);  // all partitions of subsets of {A,B,C}
  for (const auto& [partition, value] : values) {
    CHECK(value <= values.at(kSingles3) + 1e-9);
  }
}

TEST_CASE("pure-state entanglement fixtures") {
  DensityMatrix ghz = ghz_state(3);
  double ef = entanglement_of_formation_pure(ghz, kSingles3);
  CHECK(ef == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(mutual_information(ghz, kSingles3, MqmiSpec::I()) ==
        doctest::Approx(2.0 * ef).epsilon(1e-12));

  DensityMatrix bell0 = kron(bell_pair(), DensityMatrix{
      SubsystemLayout({{"C", 2}}), [] {
        ComplexMatrix m = ComplexMatrix::Zero(2, 2);
        m(0, 0) = 1.0;
        return m;
      }()});
  CHECK(entanglement_of_formation_pure(bell0, kSingles3) ==
        doctest::Approx(1.0).epsilon(1e-12));

  DensityMatrix product = random_pure(SubsystemLayout({{"A", 2}}), 70);
  DensityMatrix product3 =
      kron(kron(product, random_pure(SubsystemLayout({{"B", 2}}), 71)),
           random_pure(SubsystemLayout({{"C", 2}}), 72));
  CHECK(std::abs(entanglement_of_formation_pure(product3, kSingles3)) < 1e-9);

  CHECK(tsallis_entanglement_pure(ghz, kSingles3, 2.0) ==
        doctest::Approx(0.75).epsilon(1e-12));
  CHECK(std::abs(tsallis_entanglement_pure(product3, kSingles3, 2.0)) < 1e-9);
}

TEST_CASE("block-sum Tsallis equals twice the pure entanglement on pure states") {
  for (std::uint64_t seed : {80u, 81u, 82u}) {
    DensityMatrix psi = random_pure(SubsystemLayout::qubits(3), seed);
    double iq = mutual_information(psi, kSingles3, MqmiSpec::Iq(2.0));
    double eq = tsallis_entanglement_pure(psi, kSingles3, 2.0);
    CHECK(std::abs(iq - 2.0 * eq) < 1e-10);
  }
}

TEST_CASE("pure-state helpers reject mixed input and partial partitions") {
  DensityMatrix mixed = random_mixed(SubsystemLayout::qubits(3), 4, 90);
  CHECK_THROWS_AS((void)entanglement_of_formation_pure(mixed, kSingles3),
                  std::invalid_argument);
  DensityMatrix psi = random_pure(SubsystemLayout::qubits(3), 91);
  CHECK_THROWS_AS(
      (void)entanglement_of_formation_pure(psi, Partition::parse("A|B")),
      std::invalid_argument);
  CHECK_THROWS_AS((void)concurrence(mixed, {"A"}), std::invalid_argument);
}

TEST_CASE("concurrence fixtures and the three-qubit triangle") {
  CHECK(concurrence(bell_pair(), {"A"}) == doctest::Approx(1.0).epsilon(1e-12));

  DensityMatrix product =
      kron(random_pure(SubsystemLayout({{"A", 2}}), 95),
           random_pure(SubsystemLayout({{"B", 2}}), 96));
  CHECK(std::abs(concurrence(product, {"A"})) < 1e-7);

  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    DensityMatrix psi = random_pure(SubsystemLayout::qubits(3), 700 + seed);
    double a_bc = concurrence(psi, {"A"});
    double ab_c = concurrence(psi, {"A", "B"});
    double b_ac = concurrence(psi, {"B"});
    CHECK(a_bc * a_bc <= ab_c * ab_c + b_ac * b_ac + 1e-9);
  }
}
