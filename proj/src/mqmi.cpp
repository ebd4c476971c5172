#include "mqmi/mqmi.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mqmi/tensor.hpp"

namespace mqmi {

namespace {

EntropySpec tsallis_for_mqmi(double q) {
  if (!(q > 1.0)) {
    throw std::invalid_argument(
        "Tsallis mutual information needs q > 1; the q-entropy is not "
        "subadditive for 0 < q < 1");
  }
  return EntropySpec::tsallis(q);
}

}  // namespace

MqmiSpec MqmiSpec::Iq(double q) {
  return {MqmiForm::block_sum, tsallis_for_mqmi(q)};
}

MqmiSpec MqmiSpec::IqPrime(double q) {
  return {MqmiForm::complement_sum, tsallis_for_mqmi(q)};
}

MqmiSpec MqmiSpec::IqDoublePrime(double q) {
  return {MqmiForm::interaction, tsallis_for_mqmi(q)};
}

MqmiSpec MqmiSpec::from_kind(const std::string& kind, std::optional<double> q) {
  bool tsallis = !kind.empty() && kind[0] == 'I' && kind.size() > 1 &&
                 kind[1] == 'q';
  if (tsallis && !q.has_value()) {
    throw std::invalid_argument("kind '" + kind + "' needs --q");
  }
  if (kind == "I") return I();
  if (kind == "Iprime") return IPrime();
  if (kind == "Idprime") return IDoublePrime();
  if (kind == "Iq") return Iq(*q);
  if (kind == "Iqprime") return IqPrime(*q);
  if (kind == "Iqdprime") return IqDoublePrime(*q);
  throw std::invalid_argument("unknown kind '" + kind + "'");
}

std::string MqmiSpec::kind_token() const {
  switch (form) {
    case MqmiForm::block_sum:
      return is_tsallis() ? "Iq" : "I";
    case MqmiForm::complement_sum:
      return is_tsallis() ? "Iqprime" : "Iprime";
    case MqmiForm::interaction:
      return is_tsallis() ? "Iqdprime" : "Idprime";
  }
  return "?";
}

std::string MqmiSpec::name() const {
  std::string base;
  switch (form) {
    case MqmiForm::block_sum:
      base = is_tsallis() ? "Iq" : "I";
      break;
    case MqmiForm::complement_sum:
      base = is_tsallis() ? "Iq'" : "I'";
      break;
    case MqmiForm::interaction:
      base = is_tsallis() ? "Iq''" : "I''";
      break;
  }
  if (is_tsallis()) {
    std::ostringstream os;
    os << base << "[q=" << entropy.q << "]";
    return os.str();
  }
  return base;
}

double mutual_information(SubsetSpectra& cache, const Partition& partition,
                          const MqmiSpec& spec) {
  if (spec.is_tsallis() && !(spec.entropy.q > 1.0)) {
    throw std::invalid_argument("Tsallis mutual information needs q > 1");
  }
  const auto& layout = cache.layout();
  std::vector<std::uint32_t> blocks;
  std::uint32_t all = 0;
  for (const auto& b : partition.blocks()) {
    std::uint32_t m = layout.mask_of(b);
    blocks.push_back(m);
    all |= m;
  }
  const EntropySpec& ent = spec.entropy;
  int k = static_cast<int>(blocks.size());
  switch (spec.form) {
    case MqmiForm::block_sum: {
      double sum = 0.0;
      for (auto m : blocks) sum += cache.entropy(m, ent);
      return sum - cache.entropy(all, ent);
    }
    case MqmiForm::complement_sum: {
      double sum = 0.0;
      for (auto m : blocks) sum += cache.entropy(all & ~m, ent);
      return sum - (k - 1) * cache.entropy(all, ent);
    }
    case MqmiForm::interaction: {
      if (k != 3) {
        throw std::invalid_argument(
            "the interaction form needs exactly 3 blocks");
      }
      double singles = cache.entropy(blocks[0], ent) +
                       cache.entropy(blocks[1], ent) +
                       cache.entropy(blocks[2], ent);
      double pairs = cache.entropy(blocks[0] | blocks[1], ent) +
                     cache.entropy(blocks[0] | blocks[2], ent) +
                     cache.entropy(blocks[1] | blocks[2], ent);
      return singles - pairs + cache.entropy(all, ent);
    }
  }
  throw std::logic_error("unreachable");
}

double mutual_information(const DensityMatrix& rho, const Partition& partition,
                          const MqmiSpec& spec) {
  SubsetSpectra cache(rho);
  return mutual_information(cache, partition, spec);
}

std::map<Partition, double> mutual_information_coarsenings(
    const DensityMatrix& rho, const Partition& partition,
    const MqmiSpec& spec) {
  SubsetSpectra cache(rho);
  std::map<Partition, double> out;
  for (const auto& p : coarser_partitions(partition)) {
    out.emplace(p, mutual_information(cache, p, spec));
  }
  return out;
}

namespace {

void require_pure(const DensityMatrix& rho, const char* what) {
  if (rho.purity() < 1.0 - tol::check) {
    throw std::invalid_argument(std::string(what) +
                                ": input state is not pure");
  }
}

double half_marginal_entropy_sum(const DensityMatrix& rho,
                                 const Partition& partition,
                                 const EntropySpec& ent, const char* what) {
  require_pure(rho, what);
  std::uint32_t all = 0;
  SubsetSpectra cache(rho);
  double sum = 0.0;
  for (const auto& b : partition.blocks()) {
    std::uint32_t m = rho.layout.mask_of(b);
    all |= m;
    sum += cache.entropy(m, ent);
  }
  if (all != rho.layout.full_mask()) {
    throw std::invalid_argument(std::string(what) +
                                ": the partition must cover all parties");
  }
  return 0.5 * sum;
}

}  // namespace

double entanglement_of_formation_pure(const DensityMatrix& rho,
                                      const Partition& partition) {
  return half_marginal_entropy_sum(rho, partition, EntropySpec::vn(),
                                   "entanglement_of_formation_pure");
}

double tsallis_entanglement_pure(const DensityMatrix& rho,
                                 const Partition& partition, double q) {
  return half_marginal_entropy_sum(rho, partition, tsallis_for_mqmi(q),
                                   "tsallis_entanglement_pure");
}

double concurrence(const DensityMatrix& rho,
                   const std::vector<std::string>& block) {
  require_pure(rho, "concurrence");
  DensityMatrix marginal = partial_trace(rho, block);
  double c2 = 2.0 * (1.0 - marginal.purity());
  return std::sqrt(std::max(0.0, c2));
}

}  // namespace mqmi
