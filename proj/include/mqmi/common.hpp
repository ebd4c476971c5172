#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace mqmi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Shared numerical tolerances. The PSD clamp is the single source of truth
// for spectral hygiene: eigenvalues in [-psd_clamp, 0) are treated as 0,
// anything more negative is a validation error.
namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace_one = 1e-10;
inline constexpr double psd_clamp = 1e-10;
inline constexpr double check = 1e-9;
inline constexpr double exact = 1e-12;
}  // namespace tol

// Desk-scale guards: everything here is meant for a handful of qubits.
inline constexpr long kMaxTotalDim = 1024;
inline constexpr int kMaxPartitionParties = 6;

// Default seed for every CLI entry point, so repeat runs are byte-identical.
inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace mqmi
