#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mqmi/common.hpp"
#include "mqmi/density_matrix.hpp"

namespace mqmi {

enum class EntropyKind { von_neumann, tsallis };

/// Which spectral entropy to use. Von Neumann is in bits (log base 2);
/// Tsallis S_q = (1 - tr rho^q) / (q - 1) is base-free and needs q > 0,
/// q != 1. Values of q in (0, 1) are accepted here but rejected by the
/// mutual-information layer, which needs subadditivity (q > 1).
struct EntropySpec {
  EntropyKind kind = EntropyKind::von_neumann;
  double q = 0.0;

  static EntropySpec vn() { return {EntropyKind::von_neumann, 0.0}; }
  static EntropySpec tsallis(double q);

  bool is_tsallis() const { return kind == EntropyKind::tsallis; }
  std::string name() const;
};

/// Entropy of a clamped spectrum, with 0 log 0 := 0.
double spectrum_entropy(const RealVector& spectrum, const EntropySpec& spec);

double von_neumann_entropy(const DensityMatrix& rho);
double tsallis_entropy(const DensityMatrix& rho, double q);
double state_entropy(const DensityMatrix& rho, const EntropySpec& spec);

/// S(rho || sigma) = tr(rho log2 rho - rho log2 sigma). Returns +infinity
/// when the support of rho leaks outside the support of sigma (kernel
/// projection above 1e-8); that is a legitimate value, not an error.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(AB) + S(BC) - S(ABC) - S(B) for disjoint label sets a, b, c.
double ssa_margin(const DensityMatrix& rho, const std::vector<std::string>& a,
                  const std::vector<std::string>& b,
                  const std::vector<std::string>& c, const EntropySpec& spec);

/// Per-state cache of marginal spectra, keyed by party mask. Every MQMI
/// quantity is a linear combination of subset entropies, so sweeps evaluate
/// many partitions against one state through this.
class SubsetSpectra {
 public:
  explicit SubsetSpectra(const DensityMatrix& rho) : rho_(&rho) {}

  const DensityMatrix& state() const { return *rho_; }
  const SubsystemLayout& layout() const { return rho_->layout; }

  const RealVector& spectrum(std::uint32_t mask);
  double entropy(std::uint32_t mask, const EntropySpec& spec);  // 0 if mask==0

 private:
  const DensityMatrix* rho_;
  std::unordered_map<std::uint32_t, RealVector> cache_;
};

}  // namespace mqmi
