#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mqmi/common.hpp"
#include "mqmi/density_matrix.hpp"
#include "mqmi/layout.hpp"

namespace mqmi {

/// |Phi+><Phi+| on qubits A, B.
DensityMatrix bell_pair();

/// n-qubit GHZ projector.
DensityMatrix ghz_state(int n);

/// p |GHZ_n><GHZ_n| + (1 - p) I / 2^n.
DensityMatrix ghz_mixture(double visibility, int n);

/// p |0...0><0...0| + (1 - p) |1...1><1...1| on n qubits.
DensityMatrix classical_two_term(double p, int n);

/// The 4-qubit state rho_ABC (x) I/2 whose AB marginal is a pure Bell-type
/// state while AC, BC and CD marginals are maximally mixed; the fixture on
/// which the Tsallis complement-sum quantity loses additivity.
DensityMatrix additivity_gap_state();

/// One direct-sum block of a Markov state: weight q_j, a state on
/// A (x) B_j^L and a state on B_j^R (x) C, given as raw matrices together
/// with the B-block dimensions (either side may be 1).
struct MarkovBlock {
  double weight = 0.0;
  ComplexMatrix left;
  ComplexMatrix right;
  int b_left_dim = 1;
  int b_right_dim = 1;
};

struct MarkovSpec {
  int a_dim = 2;
  int c_dim = 2;
  std::vector<MarkovBlock> blocks;
};

/// Assembles the direct sum  (+)_j q_j rho^{A B_j^L} (x) rho^{B_j^R C}
/// on A (x) B (x) C with B block-diagonal over j. Every instance saturates
/// strong subadditivity: S(AB) + S(BC) = S(ABC) + S(B).
DensityMatrix markov_state(const MarkovSpec& spec);

/// Fixed two-block Markov state on qubits A, C and a 4-dimensional B, with
/// visible A-C correlation; demonstrates that the saturation condition does
/// not force I(A:C) = 0 on mixed states.
DensityMatrix markov_demo_state();

/// Projector onto a normalized vector of iid standard complex Gaussians.
DensityMatrix random_pure(const SubsystemLayout& layout, std::uint64_t seed);

/// G G^dag / tr(G G^dag) with G a (total dim) x rank complex Gaussian matrix.
DensityMatrix random_mixed(const SubsystemLayout& layout, int rank,
                           std::uint64_t seed);

/// CLI fixtures: ghz3, ghz-mixture-half, classical-half, additivity-state,
/// markov-demo, bell-pair.
DensityMatrix builtin_state(const std::string& name);
std::vector<std::string> builtin_state_names();

}  // namespace mqmi
