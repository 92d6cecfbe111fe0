#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "apqaoa/bench/experiment.hpp"
#include "apqaoa/optimize.hpp"

namespace apqaoa::bench {

/// Sidecar metadata for a generated instance.
nlohmann::json instance_metadata(const ExperimentConfig& config, const SuiteInstance& inst);

/// instances/n<NN>/inst<IIII> under `dir`, without extension.
std::string instance_stem(const std::string& dir, int n, int index);

/// Writes <stem>.cnf and <stem>.meta.json for every instance of the suite and
/// returns the stems in canonical order.
std::vector<std::string> write_suite(const ExperimentConfig& config, const std::string& dir);

/// c_min, c_max, maximizer count, G_0, G_E and the level histogram.
nlohmann::json spectrum_summary(const CnfFormula& formula, double c0);

enum class ScanMode { Probability, Expectation };

/// Linear-schedule landscape over (theta, rho) at depth p. Probability mode
/// normalizes by the exact spread and reports the target probability;
/// expectation mode uses `mode` and reports the normalized <H_C>.
GridScanResult scan_linear(const CnfFormula& formula, int p, const GridAxis& theta, const GridAxis& rho,
                           ScanMode scan_mode, NormalizationMode mode, double c0);

/// theta,rho,value rows in grid order.
void write_scan_csv(std::ostream& out, const GridScanResult& scan);

}  // namespace apqaoa::bench
