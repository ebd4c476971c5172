#include "mqmi/state_io.hpp"

#include <fstream>
#include <stdexcept>

namespace mqmi {

nlohmann::json state_to_json(const DensityMatrix& rho) {
  nlohmann::json parties = nlohmann::json::array();
  for (const auto& p : rho.layout.parties()) {
    parties.push_back({{"label", p.label}, {"dim", p.dim}});
  }
  nlohmann::json matrix = nlohmann::json::array();
  for (long r = 0; r < rho.dim(); ++r) {
    for (long c = 0; c < rho.dim(); ++c) {
      matrix.push_back({rho.mat(r, c).real(), rho.mat(r, c).imag()});
    }
  }
  return {{"parties", parties}, {"matrix", matrix}};
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  if (!j.contains("parties") || !j.contains("matrix")) {
    throw std::invalid_argument(
        "state file: needs 'parties' and 'matrix' fields");
  }
  std::vector<Party> parties;
  for (const auto& p : j.at("parties")) {
    parties.push_back({p.at("label").get<std::string>(), p.at("dim").get<int>()});
  }
  SubsystemLayout layout(std::move(parties));
  long d = layout.total_dim();
  const auto& entries = j.at("matrix");
  if (static_cast<long>(entries.size()) != d * d) {
    throw std::invalid_argument("state file: matrix has " +
                                std::to_string(entries.size()) +
                                " entries, expected " + std::to_string(d * d));
  }
  ComplexMatrix m(d, d);
  long idx = 0;
  for (long r = 0; r < d; ++r) {
    for (long c = 0; c < d; ++c, ++idx) {
      const auto& e = entries.at(idx);
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument(
            "state file: matrix entries must be [re, im] pairs");
      }
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return make_density_matrix(std::move(layout), std::move(m));
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open state file '" + path + "'");
  }
  nlohmann::json j;
  in >> j;
  return state_from_json(j);
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write state file '" + path + "'");
  }
  out << state_to_json(rho).dump(2) << "\n";
}

nlohmann::json report_to_json(const CheckReport& report) {
  nlohmann::json j = {{"id", report.id},
                      {"quantity", report.quantity},
                      {"samples", report.samples},
                      {"min_margin", report.min_margin},
                      {"verdict", to_string(report.verdict)},
                      {"notes", report.notes},
                      {"seed", report.seed},
                      {"tolerance", report.tolerance},
                      {"version", kVersionString}};
  if (report.min_margin_drop_pairs) {
    j["min_margin_drop_pairs"] = *report.min_margin_drop_pairs;
  }
  if (report.alpha) j["alpha"] = *report.alpha;
  if (report.alpha_half_margin) j["alpha_half_margin"] = *report.alpha_half_margin;
  if (report.witness) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [k, v] : report.witness->values) values[k] = v;
    j["witness"] = {{"state", state_to_json(report.witness->state)},
                    {"finer", report.witness->finer},
                    {"coarser", report.witness->coarser},
                    {"note", report.witness->note},
                    {"values", values}};
  }
  return j;
}

}  // namespace mqmi
