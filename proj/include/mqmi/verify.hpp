#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mqmi/common.hpp"
#include "mqmi/density_matrix.hpp"
#include "mqmi/entropy.hpp"
#include "mqmi/mqmi.hpp"
#include "mqmi/partitions.hpp"

namespace mqmi {

/// pass: the checked relation held everywhere it was evaluated.
/// counterexample_found: a concrete violating instance was produced (always
/// carries a witness).
/// fail: the check could not reach its goal without producing a violation,
/// e.g. a search exhausted its budget or an exponent fit hit its cap.
enum class Verdict { pass, fail, counterexample_found };
std::string to_string(Verdict v);

struct Witness {
  DensityMatrix state;
  std::string finer;    // partition text, when a pair is involved
  std::string coarser;  // partition text / second operand
  std::string note;
  std::vector<std::pair<std::string, double>> values;
};

struct CheckReport {
  std::string id;
  std::string quantity;  // spec echo, e.g. "Iq[q=2]"
  long samples = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::optional<double> min_margin_drop_pairs;  // Tsallis: pairs needing an
                                                // in-block drop, reported
                                                // separately
  std::optional<double> alpha;
  std::optional<double> alpha_half_margin;  // bracketing certificate
  std::optional<Witness> witness;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::pass;
  std::uint64_t seed = 0;
  double tolerance = tol::check;
};

struct SweepConfig {
  enum class Ensemble { haar_pure, hs_mixed };
  Ensemble ensemble = Ensemble::haar_pure;
  int rank = 1;  // hs_mixed only
  SubsystemLayout layout;
  long samples = 1;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = tol::check;
};

/// Deterministic: the state for (config, index) never depends on the rest of
/// the sweep.
DensityMatrix sample_state(const SweepConfig& config, long index);

/// Minimum of (finer - coarser) over every comparable partition pair of the
/// state's parties. For Tsallis quantities the pairs needing an in-block
/// drop are excluded from the main margin and reported separately.
CheckReport check_coarsening_monotone(const DensityMatrix& rho,
                                      const MqmiSpec& spec,
                                      double tolerance = tol::check);

/// On A, B, C: if J(A:BC) == J(A:B) within tolerance, J(A:C) must vanish.
CheckReport check_discorrelated(const DensityMatrix& rho, const MqmiSpec& spec,
                                double tolerance = tol::check);

/// If J(finer) == J(coarser) within tolerance, J must vanish on the whole
/// exclusion set of the pair. The variant (discard-based or tight/merge
/// based) is inferred from how the partitions are related.
CheckReport check_complete_monogamy(const DensityMatrix& rho,
                                    const Partition& finer,
                                    const Partition& coarser,
                                    const MqmiSpec& spec,
                                    double tolerance = tol::check);

/// Triangle relations: on 3 parties J(A:BC) <= J(B:AC) + J(AB:C) over all
/// role assignments; on 4 parties the pairing form
/// J(AB:CD) <= J(AC:BD) + J(AD:BC) and the three-block form
/// J(A:B:CD) <= J(A:BD:C) + J(AD:B:C) (complement-sum quantities check their
/// own three-block form). Reports the minimum slack.
CheckReport check_triangle(const DensityMatrix& rho, const MqmiSpec& spec,
                           double tolerance = tol::check);

/// J(rho) + S*(rho) - 2 * sum_i p_i E(psi_i) >= 0 with {p_i, psi_i} the
/// eigendecomposition of rho and E the pure-state entanglement matching the
/// entropy; equality expected for pure input.
CheckReport check_entropy_bound(const DensityMatrix& rho, const MqmiSpec& spec,
                                double tolerance = tol::check);

/// S(AB) + S(BC) - S(ABC) - S(B) on a three-party state.
CheckReport check_ssa(const DensityMatrix& rho, const EntropySpec& entropy,
                      double tolerance = tol::check);

/// Largest deviation of the value under party permutations of the state
/// (full-singles partition); min_margin is minus that deviation.
CheckReport check_permutation_symmetry(const DensityMatrix& rho,
                                       const MqmiSpec& spec,
                                       double tolerance = tol::check);

enum class AlphaVariant { monogamy, complete, tight };

/// Smallest exponent a in (0, 10] such that J^a(whole) >= sum J^a(parts)
/// across the sampled ensemble (bisection to 1e-4, convention 0^a := 0).
/// The monogamy variant requires a pure-state ensemble. The report carries
/// the ensemble supremum and a bracketing certificate at a/2.
CheckReport fit_alpha(const SweepConfig& config, const MqmiSpec& spec,
                      AlphaVariant variant);

/// Registry of fixed reproductions: ghz-idprime, iqprime-additivity,
/// cheng-state, markov-I, markov-Iprime, xi-example.
CheckReport reproduce_counterexample(const std::string& case_id);
std::vector<std::string> counterexample_case_ids();

/// Named per-sample checks over an ensemble: coarsening-monotone, triangle,
/// entropy-bound, discorrelated, ssa, nonnegative, permutation-symmetry,
/// relative-entropy-identity. Aggregates are order-independent.
std::vector<CheckReport> run_sweep(const SweepConfig& config,
                                   const std::vector<std::string>& checks,
                                   const MqmiSpec& spec);
std::vector<std::string> sweep_check_names();

struct SearchConfig {
  std::string target;
  double q = 2.0;
  long budget = 100000;
  std::uint64_t seed = kDefaultSeed;
};

/// Randomized counterexample search: restarts drawn from pure, low-rank and
/// product-structured ensembles, then hill climbing on the violation margin
/// with Hermitian perturbations projected back to the state set. Targets:
/// sq-ssa-violation, iq-coarsen-c-increase, iq-triangle-violation,
/// iqprime-negative, iqprime-nonmonotone, iprime-triangle-violation,
/// iqprime-triangle-violation.
CheckReport run_search(const SearchConfig& config);
std::vector<std::string> search_target_names();

}  // namespace mqmi
