// Command-line front end: evaluate any of the six mutual-information
// quantities on any partition of a built-in or user-supplied state, run
// verification sweeps and counterexample searches, replay the fixed
// reproductions, and regenerate the evidence table.
//
// Exit codes: 0 expected outcome, 1 unexpected mathematical outcome,
// 2 usage or validation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mqmi/state_io.hpp"
#include "mqmi/states.hpp"
#include "mqmi/table.hpp"
#include "mqmi/verify.hpp"

namespace {

using namespace mqmi;

SubsystemLayout parse_parties(const std::string& text) {
  std::vector<Party> parties;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("--parties: expected label:dim, got '" +
                                  item + "'");
    }
    parties.push_back(
        {item.substr(0, colon), std::stoi(item.substr(colon + 1))});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return SubsystemLayout(std::move(parties));
}

DensityMatrix load_state(const std::string& builtin, const std::string& file) {
  if (!builtin.empty() && !file.empty()) {
    throw std::invalid_argument("give either --builtin or --state, not both");
  }
  if (!builtin.empty()) return builtin_state(builtin);
  if (!file.empty()) return read_state_file(file);
  throw std::invalid_argument("need --builtin NAME or --state FILE");
}

void write_json_report(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string report_csv_header() {
  return "id,quantity,verdict,samples,min_margin,drop_pair_margin,alpha";
}

std::string report_csv_line(const CheckReport& r) {
  std::ostringstream os;
  os << r.id << "," << r.quantity << "," << to_string(r.verdict) << ","
     << r.samples << "," << r.min_margin << ",";
  if (r.min_margin_drop_pairs) os << *r.min_margin_drop_pairs;
  os << ",";
  if (r.alpha) os << *r.alpha;
  return os.str();
}

void print_report_summary(const CheckReport& r) {
  std::cout << r.id << " [" << r.quantity << "] verdict=" << to_string(r.verdict)
            << " samples=" << r.samples << " min_margin=" << r.min_margin;
  if (r.min_margin_drop_pairs) {
    std::cout << " drop_pair_margin=" << *r.min_margin_drop_pairs;
  }
  if (r.alpha) std::cout << " alpha=" << *r.alpha;
  std::cout << "\n";
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  if (r.witness) {
    std::cout << "  witness: " << r.witness->note;
    if (!r.witness->finer.empty()) {
      std::cout << " [" << r.witness->finer;
      if (!r.witness->coarser.empty()) std::cout << " vs " << r.witness->coarser;
      std::cout << "]";
    }
    std::cout << "\n";
  }
}

int run_check(const std::string& builtin, const std::string& file,
              const std::string& kind, std::optional<double> q,
              const std::string& partition_text, const std::string& format,
              const std::string& out_path) {
  DensityMatrix rho = load_state(builtin, file);
  MqmiSpec spec = MqmiSpec::from_kind(kind, q);
  Partition partition = Partition::parse(partition_text, rho.layout.labels());
  double value = mutual_information(rho, partition, spec);

  nlohmann::json j = {{"kind", spec.kind_token()},
                      {"quantity", spec.name()},
                      {"partition", partition.to_string()},
                      {"source", builtin.empty() ? file : builtin},
                      {"value", value},
                      {"version", kVersionString}};
  if (spec.is_tsallis()) j["q"] = spec.entropy.q;
  write_json_report(out_path, j);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%s(%s) = %.9f\n", spec.name().c_str(),
                partition.to_string().c_str(), value);
  }
  return 0;
}

void print_reports(const std::vector<CheckReport>& reports,
                   const std::string& format) {
  if (format == "json") {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) all.push_back(report_to_json(r));
    std::cout << (all.size() == 1 ? all.front() : all).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << report_csv_header() << "\n";
    for (const auto& r : reports) std::cout << report_csv_line(r) << "\n";
  } else {
    for (const auto& r : reports) print_report_summary(r);
  }
}

int run_repro(const std::string& case_id, const std::string& format,
              const std::string& out_path) {
  std::vector<std::string> cases;
  if (case_id == "all") {
    cases = counterexample_case_ids();
  } else {
    cases = {case_id};
  }
  std::vector<CheckReport> reports;
  nlohmann::json all = nlohmann::json::array();
  int rc = 0;
  for (const auto& c : cases) {
    reports.push_back(reproduce_counterexample(c));
    all.push_back(report_to_json(reports.back()));
    Verdict expected =
        c == "xi-example" ? Verdict::pass : Verdict::counterexample_found;
    if (reports.back().verdict != expected) rc = 1;
  }
  print_reports(reports, format);
  write_json_report(out_path, all.size() == 1 ? all.front() : all);
  return rc;
}

int run_sweep_cmd(const SweepConfig& config,
                  const std::vector<std::string>& checks, const MqmiSpec& spec,
                  const std::string& format, const std::string& out_path) {
  std::vector<CheckReport> reports = run_sweep(config, checks, spec);
  nlohmann::json all = nlohmann::json::array();
  int rc = 0;
  for (const auto& r : reports) {
    all.push_back(report_to_json(r));
    if (r.verdict != Verdict::pass) rc = 1;
  }
  print_reports(reports, format);
  write_json_report(out_path, all.size() == 1 ? all.front() : all);
  return rc;
}

int run_search_cmd(const SearchConfig& config, const std::string& format,
                   const std::string& out_path) {
  CheckReport r = run_search(config);
  print_reports({r}, format);
  write_json_report(out_path, report_to_json(r));
  return r.verdict == Verdict::counterexample_found ? 0 : 1;
}

int run_table_cmd(std::uint64_t seed, const std::string& format,
                  const std::string& out_path) {
  EvidenceTable table = build_evidence_table(seed);
  if (format == "json") {
    std::cout << table_to_json(table).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << render_table_csv(table);
  } else {
    std::cout << render_table_text(table);
  }
  if (!out_path.empty()) write_json_report(out_path, table_to_json(table));
  return table.contradiction ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multipartite quantum mutual information toolkit"};
  app.require_subcommand(1);

  std::string builtin, state_file, kind = "I", partition_text = "A|B|C";
  std::string format = "table", out_path;
  std::optional<double> q;
  std::string case_id;
  std::string ensemble = "hs-mixed", parties_text = "A:2,B:2,C:2";
  std::vector<std::string> checks;
  std::string target;
  long samples = 100, budget = 100000;
  int rank = 4;
  std::uint64_t seed = kDefaultSeed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format: table, csv or json");
    sub->add_option("--out", out_path, "write the JSON report to this path");
  };

  CLI::App* check = app.add_subcommand("check", "evaluate one quantity");
  check->add_option("--builtin", builtin,
                    "built-in state: ghz3, ghz-mixture-half, classical-half, "
                    "additivity-state, markov-demo, bell-pair");
  check->add_option("--state", state_file, "state file (JSON)");
  check->add_option("--kind", kind,
                    "I, Iprime, Idprime, Iq, Iqprime or Iqdprime");
  check->add_option("--q", q, "Tsallis parameter (q > 1)");
  check->add_option("--partition", partition_text, "e.g. \"A|BC|D\"");
  add_common(check);

  CLI::App* repro = app.add_subcommand("repro", "replay a registry case");
  repro
      ->add_option("--case", case_id,
                   "ghz-idprime, iqprime-additivity, cheng-state, markov-I, "
                   "markov-Iprime, xi-example, or all")
      ->required();
  add_common(repro);

  CLI::App* sweep = app.add_subcommand("sweep", "randomized property sweep");
  sweep->add_option("--ensemble", ensemble, "haar-pure or hs-mixed");
  sweep->add_option("--rank", rank, "rank for hs-mixed");
  sweep->add_option("--parties", parties_text, "layout, e.g. A:2,B:2,C:2");
  sweep->add_option("--samples", samples, "sample count");
  sweep->add_option("--seed", seed, "master seed");
  sweep
      ->add_option("--check", checks,
                   "coarsening-monotone, triangle, entropy-bound, "
                   "discorrelated, ssa, nonnegative, permutation-symmetry, "
                   "relative-entropy-identity")
      ->required();
  sweep->add_option("--kind", kind, "quantity under test");
  sweep->add_option("--q", q, "Tsallis parameter");
  add_common(sweep);

  CLI::App* search = app.add_subcommand("search", "counterexample search");
  search
      ->add_option("--target", target,
                   "sq-ssa-violation, iq-coarsen-c-increase, "
                   "iq-triangle-violation, iqprime-negative, "
                   "iqprime-nonmonotone, iprime-triangle-violation, "
                   "iqprime-triangle-violation")
      ->required();
  search->add_option("--q", q, "Tsallis parameter");
  search->add_option("--budget", budget, "evaluation budget");
  search->add_option("--seed", seed, "master seed");
  add_common(search);

  CLI::App* table = app.add_subcommand("table", "regenerate the evidence table");
  table->add_option("--seed", seed, "master seed");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) {
      return run_check(builtin, state_file, kind, q, partition_text, format,
                       out_path);
    }
    if (repro->parsed()) {
      return run_repro(case_id, format, out_path);
    }
    if (sweep->parsed()) {
      SweepConfig config;
      config.ensemble = ensemble == "haar-pure"
                            ? SweepConfig::Ensemble::haar_pure
                            : SweepConfig::Ensemble::hs_mixed;
      if (ensemble != "haar-pure" && ensemble != "hs-mixed") {
        throw std::invalid_argument("unknown ensemble '" + ensemble + "'");
      }
      config.rank = rank;
      config.layout = parse_parties(parties_text);
      config.samples = samples;
      config.seed = seed;
      return run_sweep_cmd(config, checks, MqmiSpec::from_kind(kind, q),
                           format, out_path);
    }
    if (search->parsed()) {
      SearchConfig config;
      config.target = target;
      config.q = q.value_or(2.0);
      config.budget = budget;
      config.seed = seed;
      return run_search_cmd(config, format, out_path);
    }
    if (table->parsed()) {
      return run_table_cmd(seed, format, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
