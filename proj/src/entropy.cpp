#include "mqmi/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mqmi/tensor.hpp"

namespace mqmi {

EntropySpec EntropySpec::tsallis(double q) {
  if (!(q > 0.0) || std::abs(q - 1.0) < 1e-12) {
    throw std::invalid_argument("tsallis entropy: q must be > 0 and != 1");
  }
  return {EntropyKind::tsallis, q};
}

std::string EntropySpec::name() const {
  if (kind == EntropyKind::von_neumann) return "S";
  std::ostringstream os;
  os << "S_q(q=" << q << ")";
  return os.str();
}

double spectrum_entropy(const RealVector& spectrum, const EntropySpec& spec) {
  if (spec.kind == EntropyKind::von_neumann) {
    double s = 0.0;
    for (long i = 0; i < spectrum.size(); ++i) {
      double lam = spectrum(i);
      if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return s;
  }
  double sum_q = 0.0;
  for (long i = 0; i < spectrum.size(); ++i) {
    double lam = spectrum(i);
    if (lam > 0.0) sum_q += std::pow(lam, spec.q);
  }
  return (1.0 - sum_q) / (spec.q - 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return spectrum_entropy(state_spectrum(rho.mat), EntropySpec::vn());
}

double tsallis_entropy(const DensityMatrix& rho, double q) {
  return spectrum_entropy(state_spectrum(rho.mat), EntropySpec::tsallis(q));
}

double state_entropy(const DensityMatrix& rho, const EntropySpec& spec) {
  return spectrum_entropy(state_spectrum(rho.mat), spec);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  }
  HermitianEigen es = hermitian_eigensystem(sigma.mat);

  // Weight of rho inside sigma's kernel.
  double leak = 0.0;
  for (long j = 0; j < es.values.size(); ++j) {
    if (es.values(j) <= tol::psd_clamp) {
      ComplexVector w = es.vectors.col(j);
      leak += (w.adjoint() * rho.mat * w)(0, 0).real();
    }
  }
  if (leak > 1e-8) {
    return std::numeric_limits<double>::infinity();
  }

  RealVector rho_spec = state_spectrum(rho.mat);
  double s = 0.0;
  for (long i = 0; i < rho_spec.size(); ++i) {
    if (rho_spec(i) > 0.0) s += rho_spec(i) * std::log2(rho_spec(i));
  }
  for (long j = 0; j < es.values.size(); ++j) {
    if (es.values(j) > tol::psd_clamp) {
      ComplexVector w = es.vectors.col(j);
      double overlap = (w.adjoint() * rho.mat * w)(0, 0).real();
      if (overlap > 0.0) s -= overlap * std::log2(es.values(j));
    }
  }
  return s;
}

double ssa_margin(const DensityMatrix& rho, const std::vector<std::string>& a,
                  const std::vector<std::string>& b,
                  const std::vector<std::string>& c, const EntropySpec& spec) {
  const auto& layout = rho.layout;
  std::uint32_t ma = layout.mask_of(a);
  std::uint32_t mb = layout.mask_of(b);
  std::uint32_t mc = layout.mask_of(c);
  if ((ma & mb) || (ma & mc) || (mb & mc)) {
    throw std::invalid_argument("ssa_margin: label sets overlap");
  }
  SubsetSpectra cache(rho);
  return cache.entropy(ma | mb, spec) + cache.entropy(mb | mc, spec) -
         cache.entropy(ma | mb | mc, spec) - cache.entropy(mb, spec);
}

const RealVector& SubsetSpectra::spectrum(std::uint32_t mask) {
  auto it = cache_.find(mask);
  if (it != cache_.end()) return it->second;
  RealVector spec;
  if (mask == rho_->layout.full_mask()) {
    spec = state_spectrum(rho_->mat);
  } else {
    spec = state_spectrum(partial_trace(*rho_, mask).mat);
  }
  return cache_.emplace(mask, std::move(spec)).first->second;
}

double SubsetSpectra::entropy(std::uint32_t mask, const EntropySpec& spec) {
  if (mask == 0) return 0.0;
  return spectrum_entropy(spectrum(mask), spec);
}

}  // namespace mqmi
