#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mqmi/common.hpp"
#include "mqmi/density_matrix.hpp"
#include "mqmi/layout.hpp"

namespace mqmi {

/// Kronecker product, index convention index(i (x) j) = i * dim(b) + j.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of states; layouts are concatenated and must not share
/// labels. Guarded by the total-dimension limit.
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the parties selected by `keep_mask`, in original layout
/// order. Trace and Hermiticity are preserved.
DensityMatrix partial_trace(const DensityMatrix& rho, std::uint32_t keep_mask);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep);

/// Same state with its parties listed in `order` (a permutation of the
/// layout's labels); the matrix is reindexed accordingly.
DensityMatrix permute_parties(const DensityMatrix& rho,
                              const std::vector<std::string>& order);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns
};

/// Eigenvalues of a Hermitian matrix, ascending. Rejects non-square or
/// visibly non-Hermitian input (deviation above 1e-8) and non-convergence.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);
HermitianEigen hermitian_eigensystem(const ComplexMatrix& m);

/// Eigenvalues of a state with the PSD clamp applied: values in
/// [-psd_clamp, 0) become 0, anything lower throws.
RealVector state_spectrum(const ComplexMatrix& m);

/// Spectrum of the marginal of a unit vector state on the parties in
/// `block_mask`, computed from the reshaped coefficient matrix.
RealVector pure_marginal_spectrum(const ComplexVector& psi,
                                  const SubsystemLayout& layout,
                                  std::uint32_t block_mask);

}  // namespace mqmi
