#include "apqaoa/bench/inspect.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "apqaoa/dimacs.hpp"
#include "apqaoa/schedules.hpp"

namespace apqaoa::bench {

using nlohmann::json;

json instance_metadata(const ExperimentConfig& config, const SuiteInstance& inst) {
  const SpectrumTable table = SpectrumTable::build(inst.generated.formula);
  json j = {{"schema_version", kSchemaVersion},
            {"artifact_version", artifact_version()},
            {"config_hash", config_hash(config)},
            {"model", to_string(inst.spec.kind)},
            {"n", inst.spec.n},
            {"m", inst.spec.m},
            {"k", inst.spec.k},
            {"index", inst.index},
            {"seed", inst.spec.seed},
            {"satisfiable", !inst.generated.interpretations.empty()},
            {"interpretations", inst.generated.interpretations.size()},
            {"c_max", table.c_max()},
            {"c_min", table.c_min()},
            {"G_0", exact_G0(table)},
            {"G_E", estimate_GE(inst.spec.n, inst.spec.k, inst.spec.m, config.c0)}};
  j["hidden_t0"] = inst.generated.hidden_t0 ? json(inst.generated.hidden_t0->bits()) : json(nullptr);
  return j;
}

std::string instance_stem(const std::string& dir, int n, int index) {
  char sub[16];
  char name[24];
  std::snprintf(sub, sizeof sub, "n%02d", n);
  std::snprintf(name, sizeof name, "inst%04d", index);
  return (std::filesystem::path(dir) / "instances" / sub / name).string();
}

std::vector<std::string> write_suite(const ExperimentConfig& config, const std::string& dir) {
  config.validate();
  std::vector<std::string> stems;
  for (int n : config.n_values) {
    for (int i = 0; i < config.suite_size; ++i) {
      const SuiteInstance inst = make_instance(config, n, i);
      const std::string stem = instance_stem(dir, n, i);
      std::filesystem::create_directories(std::filesystem::path(stem).parent_path());
      const std::string comment = "model " + to_string(inst.spec.kind) + " seed " + std::to_string(inst.spec.seed);
      write_dimacs_file(stem + ".cnf", inst.generated.formula, comment);
      std::ofstream meta(stem + ".meta.json");
      if (!meta) throw std::runtime_error("cannot write " + stem + ".meta.json");
      meta << instance_metadata(config, inst).dump(2) << '\n';
      stems.push_back(stem);
    }
  }
  return stems;
}

json spectrum_summary(const CnfFormula& formula, double c0) {
  const SpectrumTable table = SpectrumTable::build(formula);
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(table.num_clauses()) + 1, 0);
  for (std::uint16_t v : table.values()) ++histogram[v];
  return {{"n", table.num_vars()},
          {"m", table.num_clauses()},
          {"k", table.k()},
          {"c_min", table.c_min()},
          {"c_max", table.c_max()},
          {"satisfiable", table.satisfiable()},
          {"maximizers", table.maximizers().size()},
          {"G_0", exact_G0(table)},
          {"G_E", estimate_GE(table.num_vars(), table.k(), table.num_clauses(), c0)},
          {"histogram", histogram}};
}

GridScanResult scan_linear(const CnfFormula& formula, int p, const GridAxis& theta, const GridAxis& rho,
                           ScanMode scan_mode, NormalizationMode mode, double c0) {
  const bool prob = scan_mode == ScanMode::Probability;
  const Problem problem = Problem::from_formula(formula, prob ? NormalizationMode::Exact : mode, c0);
  EvalCounter counter;
  QaoaEvaluator eval(problem, counter);
  return grid_scan(
      [&](double t, double r) {
        double expect = 0.0;
        double target = 0.0;
        eval.observe(linear_to_gamma_beta(LinearSchedule{t, r}, p), expect, target);
        return prob ? target : expect;
      },
      theta, rho);
}

void write_scan_csv(std::ostream& out, const GridScanResult& scan) {
  out << "theta,rho,value\n";
  out.precision(12);
  for (int i = 0; i < scan.theta.points; ++i) {
    for (int j = 0; j < scan.rho.points; ++j) {
      out << scan.theta.at(i) << ',' << scan.rho.at(j) << ','
          << scan.values[static_cast<std::size_t>(i) * scan.rho.points + j] << '\n';
    }
  }
}

}  // namespace apqaoa::bench
