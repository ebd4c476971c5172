#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mqmi/common.hpp"
#include "mqmi/density_matrix.hpp"
#include "mqmi/entropy.hpp"
#include "mqmi/partitions.hpp"

namespace mqmi {

/// The three shapes of multipartite mutual information over blocks
/// X_1 | ... | X_k, with S* the chosen entropy:
///   block_sum       sum_i S*(X_i) - S*(X_1...X_k)
///   complement_sum  sum_i S*(complement of X_i in the partition) -
///                   (k-1) S*(X_1...X_k)
///   interaction     inclusion-exclusion over exactly three blocks:
///                   sum singles - sum pairs + triple
enum class MqmiForm { block_sum, complement_sum, interaction };

struct MqmiSpec {
  MqmiForm form = MqmiForm::block_sum;
  EntropySpec entropy = EntropySpec::vn();

  static MqmiSpec I() { return {MqmiForm::block_sum, EntropySpec::vn()}; }
  static MqmiSpec IPrime() {
    return {MqmiForm::complement_sum, EntropySpec::vn()};
  }
  static MqmiSpec IDoublePrime() {
    return {MqmiForm::interaction, EntropySpec::vn()};
  }
  static MqmiSpec Iq(double q);
  static MqmiSpec IqPrime(double q);
  static MqmiSpec IqDoublePrime(double q);

  /// CLI tokens: I, Iprime, Idprime, Iq, Iqprime, Iqdprime.
  static MqmiSpec from_kind(const std::string& kind, std::optional<double> q);
  std::string kind_token() const;
  std::string name() const;  // "I", "I'(S_q(q=2))", ...

  bool is_tsallis() const { return entropy.is_tsallis(); }
};

/// Evaluates the quantity on a partition of (a subset of) the state's
/// parties; parties outside the partition are traced out first, which the
/// subset-entropy evaluation does implicitly. Tsallis forms require q > 1,
/// the interaction form exactly three blocks.
double mutual_information(SubsetSpectra& cache, const Partition& partition,
                          const MqmiSpec& spec);
double mutual_information(const DensityMatrix& rho, const Partition& partition,
                          const MqmiSpec& spec);

/// The quantity on every partition coarser than `partition` (including it).
std::map<Partition, double> mutual_information_coarsenings(
    const DensityMatrix& rho, const Partition& partition, const MqmiSpec& spec);

/// Half the sum of one-block marginal entropies of a pure state; the
/// partition must cover all parties. Tolerates purity down to 1 - 1e-9.
double entanglement_of_formation_pure(const DensityMatrix& rho,
                                      const Partition& partition);
double tsallis_entanglement_pure(const DensityMatrix& rho,
                                 const Partition& partition, double q);

/// sqrt(2 (1 - tr marginal^2)) for a pure state and one side of a
/// bipartition.
double concurrence(const DensityMatrix& rho,
                   const std::vector<std::string>& block);

}  // namespace mqmi
