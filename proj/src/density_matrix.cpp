#include "mqmi/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mqmi/tensor.hpp"

namespace mqmi {

double DensityMatrix::purity() const {
  // tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return mat.squaredNorm();
}

std::vector<std::string> violated_invariants(const DensityMatrix& rho) {
  std::vector<std::string> bad;
  const auto& m = rho.mat;
  if (m.rows() != m.cols()) {
    bad.push_back("matrix is not square");
    return bad;
  }
  if (m.rows() != rho.layout.total_dim()) {
    bad.push_back("matrix side does not match the layout's total dimension");
    return bad;
  }
  if (!m.allFinite()) {
    bad.push_back("matrix has non-finite entries");
    return bad;
  }
  double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::hermitian) {
    std::ostringstream os;
    os << "not Hermitian (max |M - M^dag| = " << herm << ")";
    bad.push_back(os.str());
  }
  double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (tr_err > tol::trace_one) {
    std::ostringstream os;
    os << "trace differs from 1 by " << tr_err;
    bad.push_back(os.str());
  }
  if (bad.empty()) {
    RealVector eigs = hermitian_eigenvalues(m);
    if (eigs(0) < -tol::psd_clamp) {
      std::ostringstream os;
      os << "not PSD (smallest eigenvalue " << eigs(0) << ")";
      bad.push_back(os.str());
    }
  }
  return bad;
}

DensityMatrix make_density_matrix(SubsystemLayout layout, ComplexMatrix mat) {
  DensityMatrix rho{std::move(layout), std::move(mat)};
  auto bad = violated_invariants(rho);
  if (!bad.empty()) {
    std::string msg = "invalid density matrix:";
    for (const auto& b : bad) msg += " [" + b + "]";
    throw std::invalid_argument(msg);
  }
  return rho;
}

}  // namespace mqmi
