#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "apqaoa/cnf.hpp"

namespace apqaoa {

class DimacsError : public FormulaError {
 public:
  using FormulaError::FormulaError;
};

/// Parses DIMACS CNF text. With `expected_k` set, every clause must have
/// exactly that many literals; otherwise k is taken from the first clause and
/// enforced on the rest. An empty formula without `expected_k` gets
/// k = min(3, n).
CnfFormula parse_dimacs(std::string_view text, std::optional<int> expected_k = std::nullopt);

/// Writes `formula` in DIMACS CNF form, optionally preceded by `c` comment
/// lines (one per line of `comment`).
std::string write_dimacs(const CnfFormula& formula, std::string_view comment = {});

CnfFormula read_dimacs_file(const std::string& path, std::optional<int> expected_k = std::nullopt);
void write_dimacs_file(const std::string& path, const CnfFormula& formula,
                       std::string_view comment = {});

}  // namespace apqaoa
