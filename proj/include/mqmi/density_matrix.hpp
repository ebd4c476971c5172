#pragma once

#include <string>
#include <vector>

#include "mqmi/common.hpp"
#include "mqmi/layout.hpp"

namespace mqmi {

/// Dense complex matrix with an attached subsystem layout. Valid instances
/// are Hermitian, unit-trace and PSD up to the shared clamp tolerance;
/// constructors that take untrusted data go through make_density_matrix,
/// internal operations preserve validity by construction.
struct DensityMatrix {
  SubsystemLayout layout;
  ComplexMatrix mat;

  long dim() const { return mat.rows(); }
  double purity() const;  // tr(rho^2)
};

/// Names every violated invariant; empty means valid.
std::vector<std::string> violated_invariants(const DensityMatrix& rho);

/// Throws std::invalid_argument listing the violated invariants.
DensityMatrix make_density_matrix(SubsystemLayout layout, ComplexMatrix mat);

}  // namespace mqmi
