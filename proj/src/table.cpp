#include "mqmi/table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "mqmi/rng.hpp"
#include "mqmi/states.hpp"
#include "mqmi/tensor.hpp"

namespace mqmi {

const std::array<std::string, kTableColumnCount>& table_columns() {
  static const std::array<std::string, kTableColumnCount> cols = {
      "non-negative", "symmetric", "additive", "coarse-a", "coarse-b",
      "coarse-c",     "M",         "CM",       "TCM",      "TI"};
  return cols;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

TableCell dash_cell() {
  TableCell c;
  c.claim = "-";
  c.evidence = "out of scope";
  c.verified = true;
  return c;
}

TableCell yes_cell(double min_margin, long samples, const std::string& how,
                   double tolerance = tol::check) {
  TableCell c;
  c.claim = "yes";
  c.verified = min_margin >= -tolerance;
  c.contradiction = !c.verified;
  c.verdict = c.verified ? Verdict::pass : Verdict::counterexample_found;
  c.evidence = how + " n=" + std::to_string(samples) + " min margin " +
               fmt(min_margin);
  if (c.contradiction) c.evidence += " (contradicts the claimed status)";
  return c;
}

TableCell no_cell(bool found, const std::string& detail) {
  TableCell c;
  c.claim = "no";
  c.verified = found;
  c.verdict = found ? Verdict::counterexample_found : Verdict::fail;
  c.evidence = found ? "counterexample: " + detail
                     : "unverified: " + detail;
  return c;
}

TableCell pure_cell(bool alpha_ok, double alpha, bool mixed_ce,
                    const std::string& detail) {
  TableCell c;
  c.claim = "pure";
  c.verified = alpha_ok && mixed_ce;
  c.verdict = c.verified ? Verdict::pass : Verdict::fail;
  std::ostringstream os;
  os << "pure-state exponent " << alpha << (alpha_ok ? " ok" : " FAILED")
     << "; mixed counterexample "
     << (mixed_ce ? "reproduced" : "NOT reproduced") << " (" << detail << ")";
  c.evidence = os.str();
  c.contradiction = !alpha_ok;
  return c;
}

// ---------------------------------------------------------------------------
// move-class pair lists (single coarsening classes, for the three columns)

struct MoveClassPairs {
  std::vector<Partition> partitions;
  std::vector<std::pair<int, int>> a, b, c;
};

const MoveClassPairs& move_class_pairs(const std::vector<std::string>& labels) {
  static std::map<std::string, MoveClassPairs> cache;
  std::string key;
  for (const auto& l : labels) key += l + "|";
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  MoveClassPairs table;
  table.partitions = all_partitions(labels);
  std::map<Partition, int> index;
  for (int i = 0; i < static_cast<int>(table.partitions.size()); ++i) {
    index.emplace(table.partitions[i], i);
  }
  for (int i = 0; i < static_cast<int>(table.partitions.size()); ++i) {
    const Partition& p = table.partitions[i];
    for (int j = 0; j < static_cast<int>(table.partitions.size()); ++j) {
      if (i == j) continue;
      const Partition& q = table.partitions[j];
      if (is_coarser_a(p, q)) table.a.emplace_back(i, j);
      if (is_coarser_b(p, q)) table.b.emplace_back(i, j);
    }
    for (int bi = 0; bi < p.block_count(); ++bi) {
      if (p.blocks()[bi].size() < 2) continue;
      for (const auto& party : p.blocks()[bi]) {
        Partition q = apply_move(p, CoarseningMove::drop(bi, party));
        table.c.emplace_back(i, index.at(q));
      }
    }
  }
  return cache.emplace(std::move(key), std::move(table)).first->second;
}

// Minimum (finer - coarser) margin per move class over an ensemble.
struct ClassMargins {
  double a = std::numeric_limits<double>::infinity();
  double b = std::numeric_limits<double>::infinity();
  double c = std::numeric_limits<double>::infinity();
};

ClassMargins class_margins_on(const DensityMatrix& rho, const MqmiSpec& spec) {
  const auto& table = move_class_pairs(rho.layout.labels());
  SubsetSpectra cache(rho);
  std::vector<double> value(table.partitions.size());
  for (std::size_t i = 0; i < table.partitions.size(); ++i) {
    value[i] = mutual_information(cache, table.partitions[i], spec);
  }
  ClassMargins m;
  for (const auto& [f, c] : table.a) m.a = std::min(m.a, value[f] - value[c]);
  for (const auto& [f, c] : table.b) m.b = std::min(m.b, value[f] - value[c]);
  for (const auto& [f, c] : table.c) m.c = std::min(m.c, value[f] - value[c]);
  return m;
}

// ---------------------------------------------------------------------------
// ensembles and families

std::vector<DensityMatrix> standard_ensemble(const SubsystemLayout& layout,
                                             int n_each, std::uint64_t seed) {
  std::vector<DensityMatrix> out;
  for (int i = 0; i < n_each; ++i) {
    out.push_back(random_pure(layout, derive_seed(seed, 2 * i)));
    out.push_back(random_mixed(layout, 4, derive_seed(seed, 2 * i + 1)));
  }
  return out;
}

// sigma (x) tau over a random bipartition of 4 qubits, reordered to A,B,C,D.
DensityMatrix product_instance(std::uint64_t seed, bool right_factor_pure,
                               std::uint32_t* split_out) {
  SubsystemLayout four = SubsystemLayout::qubits(4);
  Rng rng(seed);
  std::uint32_t split = 1u + static_cast<std::uint32_t>(rng.next_u64() % 7u);
  // split over the 4 labels: left = bits of `split` over first 3 + pad
  std::uint32_t left = split;  // 1..7 guarantees both sides nonempty
  std::uint32_t right = four.full_mask() & ~left;
  DensityMatrix sigma = random_mixed(four.sublayout(left),
                                     2, rng.next_u64());
  DensityMatrix tau = right_factor_pure
                          ? random_pure(four.sublayout(right), rng.next_u64())
                          : random_mixed(four.sublayout(right), 2,
                                         rng.next_u64());
  if (split_out) *split_out = left;
  return permute_parties(kron(sigma, tau), four.labels());
}

double additivity_deviation(const DensityMatrix& rho, std::uint32_t left,
                            const MqmiSpec& spec) {
  const auto& layout = rho.layout;
  auto singles_of = [&](std::uint32_t mask) {
    std::vector<std::vector<std::string>> blocks;
    for (const auto& l : layout.labels_of(mask)) blocks.push_back({l});
    return Partition(std::move(blocks));
  };
  std::uint32_t right = layout.full_mask() & ~left;
  SubsetSpectra cache(rho);
  double whole = mutual_information(cache, singles_of(layout.full_mask()), spec);
  double lv = mutual_information(cache, singles_of(left), spec);
  double rv = mutual_information(cache, singles_of(right), spec);
  return std::abs(whole - lv - rv);
}

// Condition-satisfying families for the complete / tight columns. Returns
// the worst exclusion-set value over instances where the condition held.
struct FamilyOutcome {
  double worst = 0.0;
  long met = 0;
  long total = 0;
};

FamilyOutcome run_family(const std::vector<DensityMatrix>& states,
                         const Partition& finer, const Partition& coarser,
                         const MqmiSpec& spec) {
  FamilyOutcome out;
  for (const auto& rho : states) {
    CheckReport r = check_complete_monogamy(rho, finer, coarser, spec);
    out.total += 1;
    bool met = true;
    for (const auto& n : r.notes) {
      if (n.rfind("condition not met", 0) == 0) met = false;
    }
    if (!met) continue;
    out.met += 1;
    out.worst = std::max(out.worst, -r.min_margin);
  }
  return out;
}

}  // namespace

EvidenceTable build_evidence_table(std::uint64_t seed) {
  EvidenceTable table;
  table.notes.push_back(
      "entries are evidence-backed at desk scale (fixed-seed sweeps, "
      "constructed families, registry fixtures, bounded searches), not "
      "proofs");
  table.notes.push_back("Tsallis rows evaluated at q = 2");
  table.notes.push_back(
      "CM/TCM for the Tsallis block-sum quantity concern discard/merge "
      "coarsening only");

  const MqmiSpec I = MqmiSpec::I();
  const MqmiSpec Ip = MqmiSpec::IPrime();
  const MqmiSpec Iq2 = MqmiSpec::Iq(2.0);
  const MqmiSpec Iqp2 = MqmiSpec::IqPrime(2.0);

  SubsystemLayout three = SubsystemLayout::qubits(3);
  SubsystemLayout four = SubsystemLayout::qubits(4);
  auto states3 = standard_ensemble(three, 40, derive_seed(seed, 1));
  auto states4 = standard_ensemble(four, 25, derive_seed(seed, 2));

  Partition abc = Partition::parse("A|B|C");
  Partition ab = Partition::parse("A|B");
  Partition a_bc = Partition::parse("A|BC");
  Partition ab_c = Partition::parse("AB|C");

  // --- shared evidence pieces -------------------------------------------

  // non-negativity sweeps (value of the full-singles partition)
  auto nonneg_sweep = [&](const MqmiSpec& spec) {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& rho : states3) {
      worst = std::min(worst,
                       mutual_information(rho, abc, spec));
    }
    return yes_cell(worst, static_cast<long>(states3.size()), "sweep");
  };

  // permutation symmetry
  auto symmetric_sweep = [&](const MqmiSpec& spec) {
    double worst = 0.0;
    for (std::size_t i = 0; i < states3.size(); i += 4) {
      CheckReport r = check_permutation_symmetry(states3[i], spec);
      worst = std::max(worst, -r.min_margin);
    }
    TableCell c;
    c.claim = "yes";
    c.verified = worst <= 1e-10;
    c.contradiction = !c.verified;
    c.verdict = c.verified ? Verdict::pass : Verdict::counterexample_found;
    c.evidence = "permutation sweep max deviation " + fmt(worst);
    return c;
  };

  // coarsening class margins over the 3-qubit ensemble
  auto class_sweep = [&](const MqmiSpec& spec) {
    ClassMargins worst;
    for (const auto& rho : states3) {
      ClassMargins m = class_margins_on(rho, spec);
      worst.a = std::min(worst.a, m.a);
      worst.b = std::min(worst.b, m.b);
      worst.c = std::min(worst.c, m.c);
    }
    return worst;
  };

  // monogamy column
  auto monogamy_cell = [&](const MqmiSpec& spec, const DensityMatrix& mixed_ce,
                           const std::string& ce_name) {
    SweepConfig cfg;
    cfg.ensemble = SweepConfig::Ensemble::haar_pure;
    cfg.layout = three;
    cfg.samples = 250;
    cfg.seed = derive_seed(seed, 77);
    CheckReport fit = fit_alpha(cfg, spec, AlphaVariant::monogamy);
    bool alpha_ok = fit.verdict == Verdict::pass && fit.alpha.has_value() &&
                    fit.min_margin >= -tol::check;
    CheckReport ce = check_discorrelated(mixed_ce, spec);
    bool found = ce.verdict == Verdict::counterexample_found;
    return pure_cell(alpha_ok, fit.alpha.value_or(-1.0), found,
                     "mixed witness: " + ce_name);
  };

  DensityMatrix markov = markov_demo_state();
  DensityMatrix classical = classical_two_term(0.5, 3);

  // --- row I ---------------------------------------------------------------
  {
    TableRow row;
    row.quantity = "I";
    row.cells[0] = nonneg_sweep(I);
    row.cells[1] = symmetric_sweep(I);
    {
      double worst = 0.0;
      long n = 60;
      for (long i = 0; i < n; ++i) {
        std::uint32_t left = 0;
        DensityMatrix rho =
            product_instance(derive_seed(seed, 100 + i), false, &left);
        worst = std::max(worst, additivity_deviation(rho, left, I));
      }
      row.cells[2] = yes_cell(-worst, n, "product-family sweep");
    }
    {
      ClassMargins m = class_sweep(I);
      row.cells[3] = yes_cell(m.a, static_cast<long>(states3.size()), "sweep");
      row.cells[4] = yes_cell(m.b, static_cast<long>(states3.size()), "sweep");
      row.cells[5] = yes_cell(m.c, static_cast<long>(states3.size()), "sweep");
    }
    row.cells[6] = monogamy_cell(I, markov, "markov-demo");
    {
      // CM: product families rho^{XY} (x) rho^{Z}
      std::vector<DensityMatrix> family;
      for (long i = 0; i < 60; ++i) {
        DensityMatrix sigma = random_mixed(SubsystemLayout(
            {{"A", 2}, {"B", 2}}), 2, derive_seed(seed, 300 + i));
        DensityMatrix tau = random_mixed(SubsystemLayout({{"C", 2}}), 2,
                                         derive_seed(seed, 400 + i));
        family.push_back(kron(sigma, tau));
      }
      FamilyOutcome fo = run_family(family, abc, ab, I);
      TableCell c = yes_cell(-fo.worst, fo.met, "constructed-family sweep");
      c.evidence += " (" + std::to_string(fo.met) + "/" +
                    std::to_string(fo.total) + " conditions met)";
      c.verified = c.verified && fo.met == fo.total;
      row.cells[7] = c;
    }
    {
      // TCM: omega^{AB} (x) tau_C against (A|B|C, A|BC)
      std::vector<DensityMatrix> family;
      for (long i = 0; i < 60; ++i) {
        DensityMatrix omega = random_mixed(SubsystemLayout(
            {{"A", 2}, {"B", 2}}), 3, derive_seed(seed, 500 + i));
        DensityMatrix tau = random_mixed(SubsystemLayout({{"C", 2}}), 2,
                                         derive_seed(seed, 600 + i));
        family.push_back(kron(omega, tau));
      }
      FamilyOutcome fo = run_family(family, abc, a_bc, I);
      TableCell c = yes_cell(-fo.worst, fo.met, "constructed-family sweep");
      c.verified = c.verified && fo.met == fo.total;
      row.cells[8] = c;
    }
    {
      double worst = std::numeric_limits<double>::infinity();
      for (const auto& rho : states3) {
        worst = std::min(worst, check_triangle(rho, I).min_margin);
      }
      for (const auto& rho : states4) {
        worst = std::min(worst, check_triangle(rho, I).min_margin);
      }
      row.cells[9] = yes_cell(
          worst, static_cast<long>(states3.size() + states4.size()), "sweep");
    }
    table.rows.push_back(std::move(row));
  }

  // --- row I' ----------------------------------------------------------------
  {
    TableRow row;
    row.quantity = "I'";
    row.cells[0] = nonneg_sweep(Ip);
    row.cells[1] = symmetric_sweep(Ip);
    {
      double worst = 0.0;
      long n = 60;
      for (long i = 0; i < n; ++i) {
        std::uint32_t left = 0;
        DensityMatrix rho =
            product_instance(derive_seed(seed, 700 + i), false, &left);
        worst = std::max(worst, additivity_deviation(rho, left, Ip));
      }
      row.cells[2] = yes_cell(-worst, n, "product-family sweep");
    }
    {
      ClassMargins m = class_sweep(Ip);
      row.cells[3] = yes_cell(m.a, static_cast<long>(states3.size()), "sweep");
      row.cells[4] = yes_cell(m.b, static_cast<long>(states3.size()), "sweep");
      row.cells[5] = yes_cell(m.c, static_cast<long>(states3.size()), "sweep");
    }
    row.cells[6] = monogamy_cell(Ip, markov, "markov-demo");
    {
      CheckReport r = check_complete_monogamy(classical, abc, ab, Ip);
      row.cells[7] = no_cell(r.verdict == Verdict::counterexample_found,
                             "classical-half, worst exclusion value " +
                                 fmt(-r.min_margin));
    }
    {
      CheckReport r = check_complete_monogamy(classical, abc, a_bc, Ip);
      row.cells[8] = no_cell(r.verdict == Verdict::counterexample_found,
                             "classical-half, worst exclusion value " +
                                 fmt(-r.min_margin));
    }
    {
      double worst = std::numeric_limits<double>::infinity();
      for (const auto& rho : states3) {
        worst = std::min(worst, check_triangle(rho, Ip).min_margin);
      }
      for (const auto& rho : states4) {
        worst = std::min(worst, check_triangle(rho, Ip).min_margin);
      }
      SearchConfig sc{"iprime-triangle-violation", 2.0, 20000,
                      derive_seed(seed, 9)};
      CheckReport search = run_search(sc);
      bool found = search.verdict == Verdict::counterexample_found;
      TableCell c = no_cell(found,
                            "listed forms pass sweeps (min slack " +
                                fmt(worst) + ") and " +
                                std::to_string(search.samples) +
                                " search evaluations found no violation; "
                                "claimed failing status kept, flagged as a "
                                "discrepancy");
      if (!found) {
        table.notes.push_back(
            "I'/TI: the claimed status is 'no', but the listed triangle "
            "forms pass every sweep and admit a subadditivity argument; no "
            "violating instance found at desk scale");
      }
      row.cells[9] = c;
    }
    table.rows.push_back(std::move(row));
  }

  // --- row I'' ---------------------------------------------------------------
  {
    TableRow row;
    row.quantity = "I''";
    DensityMatrix ghz_half = ghz_mixture(0.5, 3);
    double v = mutual_information(ghz_half, abc, MqmiSpec::IDoublePrime());
    row.cells[0] =
        no_cell(v < -tol::check,
                "half-visibility GHZ mixture gives " + fmt(v));
    row.cells[1] = symmetric_sweep(MqmiSpec::IDoublePrime());
    for (int k = 2; k < kTableColumnCount; ++k) row.cells[k] = dash_cell();
    table.rows.push_back(std::move(row));
  }

  // --- row Iq ------------------------------------------------------------
  {
    TableRow row;
    row.quantity = "Iq";
    row.cells[0] = nonneg_sweep(Iq2);
    row.cells[1] = symmetric_sweep(Iq2);
    {
      double worst = 0.0;
      long n = 60;
      for (long i = 0; i < n; ++i) {
        std::uint32_t left = 0;
        DensityMatrix rho =
            product_instance(derive_seed(seed, 800 + i), true, &left);
        worst = std::max(worst, additivity_deviation(rho, left, Iq2));
      }
      TableCell c = yes_cell(-worst, n, "product-family sweep");
      c.evidence += " (one factor pure, so the factor correlation vanishes)";
      row.cells[2] = c;
    }
    {
      ClassMargins m = class_sweep(Iq2);
      row.cells[3] = yes_cell(m.a, static_cast<long>(states3.size()), "sweep");
      row.cells[4] = yes_cell(m.b, static_cast<long>(states3.size()), "sweep");
      SearchConfig sc{"iq-coarsen-c-increase", 2.0, 30000,
                      derive_seed(seed, 10)};
      CheckReport search = run_search(sc);
      row.cells[5] =
          no_cell(search.verdict == Verdict::counterexample_found,
                  "search margin " + fmt(search.min_margin) + " after " +
                      std::to_string(search.samples) + " evaluations");
    }
    row.cells[6] = monogamy_cell(Iq2, classical, "classical-half");
    {
      // CM family: rho^{AB} (x) pure_C
      std::vector<DensityMatrix> family;
      for (long i = 0; i < 60; ++i) {
        DensityMatrix sigma = random_mixed(SubsystemLayout(
            {{"A", 2}, {"B", 2}}), 2, derive_seed(seed, 900 + i));
        DensityMatrix tau = random_pure(SubsystemLayout({{"C", 2}}),
                                        derive_seed(seed, 1000 + i));
        family.push_back(kron(sigma, tau));
      }
      FamilyOutcome fo = run_family(family, abc, ab, Iq2);
      TableCell c = yes_cell(-fo.worst, fo.met, "constructed-family sweep");
      c.evidence += " [discard/merge moves]";
      c.verified = c.verified && fo.met == fo.total;
      row.cells[7] = c;
    }
    {
      // TCM family: sigma_A (x) pure_B (x) tau_C against (A|B|C, AB|C)
      std::vector<DensityMatrix> family;
      for (long i = 0; i < 60; ++i) {
        DensityMatrix sa = random_mixed(SubsystemLayout({{"A", 2}}), 2,
                                        derive_seed(seed, 1100 + i));
        DensityMatrix pb = random_pure(SubsystemLayout({{"B", 2}}),
                                       derive_seed(seed, 1200 + i));
        DensityMatrix tc = random_mixed(SubsystemLayout({{"C", 2}}), 2,
                                        derive_seed(seed, 1300 + i));
        family.push_back(kron(kron(sa, pb), tc));
      }
      FamilyOutcome fo = run_family(family, abc, ab_c, Iq2);
      TableCell c = yes_cell(-fo.worst, fo.met, "constructed-family sweep");
      c.evidence += " [discard/merge moves]";
      c.verified = c.verified && fo.met == fo.total;
      row.cells[8] = c;
    }
    {
      SearchConfig sc{"iq-triangle-violation", 2.0, 40000,
                      derive_seed(seed, 11)};
      CheckReport search = run_search(sc);
      row.cells[9] =
          no_cell(search.verdict == Verdict::counterexample_found,
                  "search margin " + fmt(search.min_margin) + " after " +
                      std::to_string(search.samples) + " evaluations");
    }
    table.rows.push_back(std::move(row));
  }

  // --- row Iq' -----------------------------------------------------------
  {
    TableRow row;
    row.quantity = "Iq'";
    {
      SearchConfig sc{"iqprime-negative", 2.0, 25000, derive_seed(seed, 12)};
      CheckReport search = run_search(sc);
      bool found = search.verdict == Verdict::counterexample_found;
      row.cells[0] =
          no_cell(found, found ? "search value " + fmt(search.min_margin)
                               : "no negative value in " +
                                     std::to_string(search.samples) +
                                     " evaluations (best " +
                                     fmt(search.min_margin) + ")");
      if (!found) {
        table.notes.push_back(
            "Iq'/non-negative: claimed status 'no'; the bounded search "
            "found no negative instance, the additivity counterexample "
            "carries the row instead");
      }
    }
    row.cells[1] = symmetric_sweep(Iqp2);
    {
      CheckReport r = reproduce_counterexample("iqprime-additivity");
      row.cells[2] = no_cell(r.verdict == Verdict::counterexample_found,
                             "registry additivity gap " + fmt(r.min_margin) +
                                 " at q = 2");
    }
    {
      SearchConfig sc{"iqprime-nonmonotone", 2.0, 25000, derive_seed(seed, 13)};
      CheckReport search = run_search(sc);
      bool found = search.verdict == Verdict::counterexample_found;
      ClassMargins wm;
      if (found && search.witness) {
        wm = class_margins_on(search.witness->state, Iqp2);
      }
      auto class_cell = [&](double margin, const char* cls) {
        if (!found) {
          return no_cell(false, "no nonmonotone witness in " +
                                    std::to_string(search.samples) +
                                    " evaluations");
        }
        return no_cell(margin < -1e-6, std::string("witness ") + cls +
                                           "-class margin " + fmt(margin));
      };
      row.cells[3] = class_cell(wm.a, "a");
      row.cells[4] = class_cell(wm.b, "b");
      row.cells[5] = class_cell(wm.c, "c");
    }
    row.cells[6] = monogamy_cell(Iqp2, classical, "classical-half");
    {
      CheckReport r = check_complete_monogamy(classical, abc, ab, Iqp2);
      row.cells[7] = no_cell(r.verdict == Verdict::counterexample_found,
                             "classical-half, worst exclusion value " +
                                 fmt(-r.min_margin));
    }
    {
      CheckReport r = check_complete_monogamy(classical, abc, a_bc, Iqp2);
      row.cells[8] = no_cell(r.verdict == Verdict::counterexample_found,
                             "classical-half, worst exclusion value " +
                                 fmt(-r.min_margin));
    }
    {
      SearchConfig sc{"iqprime-triangle-violation", 2.0, 25000,
                      derive_seed(seed, 14)};
      CheckReport search = run_search(sc);
      bool found = search.verdict == Verdict::counterexample_found;
      row.cells[9] =
          no_cell(found, found ? "search margin " + fmt(search.min_margin)
                               : "no violation in " +
                                     std::to_string(search.samples) +
                                     " evaluations (best " +
                                     fmt(search.min_margin) + ")");
      if (!found) {
        table.notes.push_back(
            "Iq'/TI: claimed status 'no' kept without a local witness");
      }
    }
    table.rows.push_back(std::move(row));
  }

  // --- row Iq'' ----------------------------------------------------------
  {
    TableRow row;
    row.quantity = "Iq''";
    CheckReport r = reproduce_counterexample("ghz-idprime");
    row.cells[0] = no_cell(r.verdict == Verdict::counterexample_found,
                           "GHZ mixture, negative near q = 1");
    row.cells[1] = symmetric_sweep(MqmiSpec::IqDoublePrime(2.0));
    for (int k = 2; k < kTableColumnCount; ++k) row.cells[k] = dash_cell();
    table.rows.push_back(std::move(row));
  }

  for (const auto& row : table.rows) {
    for (const auto& cell : row.cells) {
      if (cell.contradiction) table.contradiction = true;
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string cell_mark(const TableCell& c) {
  std::string mark;
  if (c.claim == "yes") {
    mark = "Y";
  } else if (c.claim == "no") {
    mark = "x";
  } else if (c.claim == "pure") {
    mark = "pure";
  } else {
    mark = "-";
  }
  if (c.claim == "-") return mark;
  if (c.contradiction) return mark + "!!";
  if (!c.verified) return mark + "?";
  return mark;
}

}  // namespace

std::string render_table_text(const EvidenceTable& table) {
  std::ostringstream os;
  const auto& cols = table_columns();
  auto pad_to = [&os](const std::string& s, std::size_t width) {
    os << s;
    for (std::size_t p = s.size(); p < width; ++p) os << ' ';
  };
  pad_to("quantity", 8);
  for (const auto& c : cols) {
    os << "  ";
    pad_to(c, c.size());
  }
  os << "\n";
  for (const auto& row : table.rows) {
    pad_to(row.quantity, 8);
    for (int k = 0; k < kTableColumnCount; ++k) {
      os << "  ";
      pad_to(cell_mark(row.cells[k]), cols[k].size());
    }
    os << "\n";
  }
  os << "\nlegend: Y claimed-yes, x claimed-no, pure = holds on pure "
        "states, - out of scope;\n'?' = claimed status kept but "
        "unverified here, '!!' = local evidence contradicts it.\n";
  for (const auto& n : table.notes) os << "note: " << n << "\n";
  os << "\ncell evidence:\n";
  for (const auto& row : table.rows) {
    for (int k = 0; k < kTableColumnCount; ++k) {
      os << "  " << row.quantity << " / " << cols[k] << ": "
         << row.cells[k].evidence << "\n";
    }
  }
  return os.str();
}

std::string render_table_csv(const EvidenceTable& table) {
  std::ostringstream os;
  os << "quantity";
  for (const auto& c : table_columns()) os << "," << c;
  os << "\n";
  for (const auto& row : table.rows) {
    os << row.quantity;
    for (int k = 0; k < kTableColumnCount; ++k) {
      os << "," << cell_mark(row.cells[k]);
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json table_to_json(const EvidenceTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json cells = nlohmann::json::object();
    for (int k = 0; k < kTableColumnCount; ++k) {
      const TableCell& c = row.cells[k];
      cells[table_columns()[k]] = {{"claim", c.claim},
                                   {"verdict", to_string(c.verdict)},
                                   {"evidence", c.evidence},
                                   {"verified", c.verified},
                                   {"contradiction", c.contradiction}};
    }
    rows.push_back({{"quantity", row.quantity}, {"cells", cells}});
  }
  return {{"rows", rows},
          {"notes", table.notes},
          {"contradiction", table.contradiction}};
}

}  // namespace mqmi
