#include "mqmi/states.hpp"

#include <cmath>
#include <stdexcept>

#include "mqmi/rng.hpp"
#include "mqmi/tensor.hpp"

namespace mqmi {

namespace {

DensityMatrix from_vector(SubsystemLayout layout, const ComplexVector& psi) {
  ComplexVector v = psi / psi.norm();
  return DensityMatrix{std::move(layout), v * v.adjoint()};
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": p out of [0, 1]");
  }
}

}  // namespace

DensityMatrix bell_pair() {
  SubsystemLayout layout = SubsystemLayout::qubits(2);
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0;
  return from_vector(std::move(layout), psi);
}

DensityMatrix ghz_state(int n) {
  if (n < 2) throw std::invalid_argument("ghz_state: n must be >= 2");
  SubsystemLayout layout = SubsystemLayout::qubits(n);
  long d = layout.total_dim();
  ComplexVector psi = ComplexVector::Zero(d);
  psi(0) = psi(d - 1) = 1.0;
  return from_vector(std::move(layout), psi);
}

DensityMatrix ghz_mixture(double visibility, int n) {
  check_probability(visibility, "ghz_mixture");
  DensityMatrix ghz = ghz_state(n);
  long d = ghz.dim();
  ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  ghz.mat = visibility * ghz.mat + (1.0 - visibility) * mixed;
  return ghz;
}

DensityMatrix classical_two_term(double p, int n) {
  check_probability(p, "classical_two_term");
  if (n < 2) throw std::invalid_argument("classical_two_term: n must be >= 2");
  SubsystemLayout layout = SubsystemLayout::qubits(n);
  long d = layout.total_dim();
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(0, 0) = p;
  m(d - 1, d - 1) = 1.0 - p;
  return DensityMatrix{std::move(layout), std::move(m)};
}

DensityMatrix additivity_gap_state() {
  SubsystemLayout abc = SubsystemLayout::qubits(3);
  ComplexVector psi0 = ComplexVector::Zero(8);  // (|010> + |100>)/sqrt(2)
  psi0(2) = psi0(4) = 1.0 / std::sqrt(2.0);
  ComplexVector psi1 = ComplexVector::Zero(8);  // (|011> + |101>)/sqrt(2)
  psi1(3) = psi1(5) = 1.0 / std::sqrt(2.0);
  ComplexMatrix m = 0.5 * (psi0 * psi0.adjoint()) + 0.5 * (psi1 * psi1.adjoint());
  DensityMatrix rho_abc{std::move(abc), std::move(m)};

  DensityMatrix rho_d{SubsystemLayout({{"D", 2}}),
                      ComplexMatrix::Identity(2, 2) * 0.5};
  return kron(rho_abc, rho_d);
}

namespace {

void check_markov_factor(const ComplexMatrix& m, long expected_dim,
                         const char* side) {
  if (m.rows() != expected_dim || m.cols() != expected_dim) {
    throw std::invalid_argument(std::string("markov_state: ") + side +
                                " factor has inconsistent block dimensions");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol::hermitian) {
    throw std::invalid_argument(std::string("markov_state: ") + side +
                                " factor is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol::trace_one) {
    throw std::invalid_argument(std::string("markov_state: ") + side +
                                " factor is not unit trace");
  }
  state_spectrum(m);  // throws when not PSD
}

}  // namespace

DensityMatrix markov_state(const MarkovSpec& spec) {
  if (spec.blocks.empty()) {
    throw std::invalid_argument("markov_state: no blocks");
  }
  if (spec.a_dim < 2 || spec.c_dim < 2) {
    throw std::invalid_argument("markov_state: A and C need dimension >= 2");
  }
  double wsum = 0.0;
  long b_dim = 0;
  for (const auto& blk : spec.blocks) {
    if (blk.weight < 0.0) {
      throw std::invalid_argument("markov_state: negative weight");
    }
    if (blk.b_left_dim < 1 || blk.b_right_dim < 1) {
      throw std::invalid_argument("markov_state: block dimensions must be >= 1");
    }
    wsum += blk.weight;
    b_dim += static_cast<long>(blk.b_left_dim) * blk.b_right_dim;
    check_markov_factor(blk.left, spec.a_dim * blk.b_left_dim, "left");
    check_markov_factor(blk.right, blk.b_right_dim * spec.c_dim, "right");
  }
  if (std::abs(wsum - 1.0) > 1e-12) {
    throw std::invalid_argument("markov_state: weights do not sum to 1");
  }
  if (b_dim < 2) {
    throw std::invalid_argument("markov_state: B needs total dimension >= 2");
  }

  SubsystemLayout layout({{"A", spec.a_dim},
                          {"B", static_cast<int>(b_dim)},
                          {"C", spec.c_dim}});
  long d = layout.total_dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);

  const long da = spec.a_dim;
  const long dc = spec.c_dim;
  long b_offset = 0;
  for (const auto& blk : spec.blocks) {
    const long dl = blk.b_left_dim;
    const long dr = blk.b_right_dim;
    for (long a = 0; a < da; ++a)
      for (long ap = 0; ap < da; ++ap)
        for (long bl = 0; bl < dl; ++bl)
          for (long blp = 0; blp < dl; ++blp)
            for (long br = 0; br < dr; ++br)
              for (long brp = 0; brp < dr; ++brp) {
                Complex lv = blk.left(a * dl + bl, ap * dl + blp);
                if (lv == Complex(0.0, 0.0)) continue;
                for (long c = 0; c < dc; ++c)
                  for (long cp = 0; cp < dc; ++cp) {
                    Complex rv = blk.right(br * dc + c, brp * dc + cp);
                    if (rv == Complex(0.0, 0.0)) continue;
                    long b = b_offset + bl * dr + br;
                    long bp = b_offset + blp * dr + brp;
                    long row = (a * b_dim + b) * dc + c;
                    long col = (ap * b_dim + bp) * dc + cp;
                    out(row, col) += blk.weight * lv * rv;
                  }
              }
    b_offset += dl * dr;
  }
  return DensityMatrix{std::move(layout), std::move(out)};
}

DensityMatrix markov_demo_state() {
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;

  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;

  ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);

  MarkovSpec spec;
  spec.a_dim = 2;
  spec.c_dim = 2;
  spec.blocks.push_back({0.5, bell, ket0, 2, 1});
  spec.blocks.push_back({0.5, plus, bell, 1, 2});
  return markov_state(spec);
}

DensityMatrix random_pure(const SubsystemLayout& layout, std::uint64_t seed) {
  Rng rng(seed);
  long d = layout.total_dim();
  ComplexVector psi(d);
  for (long i = 0; i < d; ++i) psi(i) = rng.complex_gaussian();
  return from_vector(layout, psi);
}

DensityMatrix random_mixed(const SubsystemLayout& layout, int rank,
                           std::uint64_t seed) {
  long d = layout.total_dim();
  if (rank < 1 || rank > d) {
    throw std::invalid_argument("random_mixed: rank out of [1, total dim]");
  }
  Rng rng(seed);
  ComplexMatrix g(d, rank);
  for (long i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.complex_gaussian();
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix{layout, std::move(m)};
}

DensityMatrix builtin_state(const std::string& name) {
  if (name == "ghz3") return ghz_state(3);
  if (name == "ghz-mixture-half") return ghz_mixture(0.5, 3);
  if (name == "classical-half") return classical_two_term(0.5, 3);
  if (name == "additivity-state") return additivity_gap_state();
  if (name == "markov-demo") return markov_demo_state();
  if (name == "bell-pair") return bell_pair();
  throw std::invalid_argument("unknown builtin state '" + name + "'");
}

std::vector<std::string> builtin_state_names() {
  return {"ghz3",  "ghz-mixture-half", "classical-half",
          "additivity-state", "markov-demo", "bell-pair"};
}

}  // namespace mqmi
