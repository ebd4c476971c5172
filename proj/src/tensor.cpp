#include "mqmi/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace mqmi {

namespace {

// Flat strides per party: stride(k) = product of dims of parties after k.
std::vector<long> layout_strides(const SubsystemLayout& layout) {
  int n = layout.size();
  std::vector<long> stride(n, 1);
  for (int k = n - 2; k >= 0; --k) {
    stride[k] = stride[k + 1] * layout.dim(k + 1);
  }
  return stride;
}

// Flat offsets of all digit combinations over the parties in `mask`,
// enumerated with the masked parties running in layout order.
std::vector<long> mask_offsets(const SubsystemLayout& layout,
                               std::uint32_t mask) {
  auto stride = layout_strides(layout);
  std::vector<int> idx;
  for (int i = 0; i < layout.size(); ++i) {
    if (mask & (1u << i)) idx.push_back(i);
  }
  long count = layout.dim_of(mask);
  std::vector<long> offsets(count, 0);
  long repeat = count;
  for (int i : idx) {
    repeat /= layout.dim(i);
    long period = repeat * layout.dim(i);
    for (long v = 0; v < count; ++v) {
      long digit = (v % period) / repeat;
      offsets[v] += digit * stride[i];
    }
  }
  return offsets;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<Party> parties = a.layout.parties();
  for (const auto& p : b.layout.parties()) {
    parties.push_back(p);
  }
  SubsystemLayout layout(std::move(parties));  // checks labels and the guard
  return DensityMatrix{std::move(layout), kron(a.mat, b.mat)};
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::uint32_t keep_mask) {
  const auto& layout = rho.layout;
  if (keep_mask == 0) {
    throw std::invalid_argument("partial_trace: empty keep set");
  }
  if (keep_mask & ~layout.full_mask()) {
    throw std::invalid_argument("partial_trace: mask outside layout");
  }
  std::uint32_t traced = layout.full_mask() & ~keep_mask;
  if (traced == 0) {
    return rho;
  }
  auto keep_off = mask_offsets(layout, keep_mask);
  auto tr_off = mask_offsets(layout, traced);
  long dk = static_cast<long>(keep_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (long r = 0; r < dk; ++r) {
    for (long c = 0; c < dk; ++c) {
      Complex sum(0.0, 0.0);
      for (long t : tr_off) {
        sum += rho.mat(keep_off[r] + t, keep_off[c] + t);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix{layout.sublayout(keep_mask), std::move(out)};
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep) {
  return partial_trace(rho, rho.layout.mask_of(keep));
}

DensityMatrix permute_parties(const DensityMatrix& rho,
                              const std::vector<std::string>& order) {
  const auto& layout = rho.layout;
  if (static_cast<int>(order.size()) != layout.size() ||
      layout.mask_of(order) != layout.full_mask()) {
    throw std::invalid_argument("permute_parties: not a permutation of the layout");
  }
  std::vector<Party> parties;
  std::vector<int> src;  // src[k] = index in the old layout of new party k
  for (const auto& l : order) {
    int i = layout.index_of(l);
    src.push_back(i);
    parties.push_back(layout.party(i));
  }
  SubsystemLayout new_layout(std::move(parties));
  auto old_stride = layout_strides(layout);

  long d = rho.dim();
  std::vector<long> to_old(d, 0);  // flat new index -> flat old index
  for (long v = 0; v < d; ++v) {
    long rem = v;
    long old_index = 0;
    for (int k = 0; k < new_layout.size(); ++k) {
      long block = d;
      for (int l = 0; l <= k; ++l) block /= new_layout.dim(l);
      long digit = rem / block;
      rem %= block;
      old_index += digit * old_stride[src[k]];
    }
    to_old[v] = old_index;
  }
  ComplexMatrix out(d, d);
  for (long r = 0; r < d; ++r) {
    for (long c = 0; c < d; ++c) {
      out(r, c) = rho.mat(to_old[r], to_old[c]);
    }
  }
  return DensityMatrix{std::move(new_layout), std::move(out)};
}

namespace {

void require_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigensolver: matrix is not square");
  }
  double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-8) {
    throw std::invalid_argument("eigensolver: matrix is not Hermitian (deviation " +
                                std::to_string(dev) + ")");
  }
}

}  // namespace

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver: did not converge");
  }
  return solver.eigenvalues();
}

HermitianEigen hermitian_eigensystem(const ComplexMatrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver: did not converge");
  }
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

RealVector state_spectrum(const ComplexMatrix& m) {
  RealVector eigs = hermitian_eigenvalues(m);
  for (long i = 0; i < eigs.size(); ++i) {
    if (eigs(i) < -tol::psd_clamp) {
      throw std::invalid_argument("state_spectrum: eigenvalue " +
                                  std::to_string(eigs(i)) +
                                  " below the PSD clamp");
    }
    if (eigs(i) < 0.0) eigs(i) = 0.0;
  }
  return eigs;
}

RealVector pure_marginal_spectrum(const ComplexVector& psi,
                                  const SubsystemLayout& layout,
                                  std::uint32_t block_mask) {
  if (psi.size() != layout.total_dim()) {
    throw std::invalid_argument("pure_marginal_spectrum: dimension mismatch");
  }
  std::uint32_t rest = layout.full_mask() & ~block_mask;
  if (block_mask == 0 || (block_mask & ~layout.full_mask())) {
    throw std::invalid_argument("pure_marginal_spectrum: bad mask");
  }
  if (rest == 0) {
    RealVector one(1);
    one(0) = psi.squaredNorm();
    return one;
  }
  auto block_off = mask_offsets(layout, block_mask);
  auto rest_off = mask_offsets(layout, rest);
  ComplexMatrix coeff(block_off.size(), rest_off.size());
  for (std::size_t i = 0; i < block_off.size(); ++i) {
    for (std::size_t j = 0; j < rest_off.size(); ++j) {
      coeff(i, j) = psi(block_off[i] + rest_off[j]);
    }
  }
  // Marginal = coeff * coeff^dag; its spectrum is the squared singular values.
  return state_spectrum(coeff * coeff.adjoint());
}

}  // namespace mqmi
