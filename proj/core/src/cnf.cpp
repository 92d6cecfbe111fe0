#include "apqaoa/cnf.hpp"

#include <algorithm>
#include <string>

namespace apqaoa {

Literal Literal::from_int(int signed_var) {
  if (signed_var == 0) throw FormulaError("literal 0 is not a variable");
  return Literal{signed_var < 0 ? -signed_var : signed_var, signed_var < 0};
}

Assignment::Assignment(std::uint32_t bits, int n) : bits_(bits), n_(n) {
  if (n < 0 || n > kMaxVariables) {
    throw FormulaError("assignment width " + std::to_string(n) + " out of range");
  }
  if (n < 32 && (bits >> n) != 0) {
    throw FormulaError("assignment bits exceed width " + std::to_string(n));
  }
}

Assignment Assignment::from_values(const std::vector<bool>& values) {
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j]) bits |= std::uint32_t{1} << j;
  }
  return Assignment(bits, static_cast<int>(values.size()));
}

bool Assignment::value(int var) const {
  if (var < 1 || var > n_) {
    throw FormulaError("variable " + std::to_string(var) + " outside assignment of width " +
                       std::to_string(n_));
  }
  return ((bits_ >> (var - 1)) & 1u) != 0;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end(),
            [](const Literal& a, const Literal& b) { return a.var < b.var; });
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    const Literal& lit = literals_[i];
    if (lit.var < 1 || lit.var > kMaxVariables) {
      throw FormulaError("variable index " + std::to_string(lit.var) + " out of range");
    }
    if (i > 0 && literals_[i - 1].var == lit.var) {
      throw FormulaError("variable " + std::to_string(lit.var) + " repeated in clause");
    }
    const std::uint32_t bit = std::uint32_t{1} << (lit.var - 1);
    mask_ |= bit;
    if (lit.negated) falsifying_ |= bit;
  }
}

CnfFormula::CnfFormula(int num_vars, int k, std::vector<Clause> clauses)
    : n_(num_vars), k_(k), clauses_(std::move(clauses)) {
  if (n_ < 0 || n_ > kMaxVariables) {
    throw FormulaError("variable count " + std::to_string(n_) + " out of range [0, " +
                       std::to_string(kMaxVariables) + "]");
  }
  if (k_ < 1 || k_ > std::max(n_, 1)) {
    throw FormulaError("clause width k=" + std::to_string(k_) + " invalid for n=" +
                       std::to_string(n_));
  }
  for (const Clause& c : clauses_) validate(c);
}

void CnfFormula::add_clause(Clause clause) {
  validate(clause);
  clauses_.push_back(std::move(clause));
}

void CnfFormula::validate(const Clause& clause) const {
  if (clause.size() != k_) {
    throw FormulaError("clause has " + std::to_string(clause.size()) + " literals, expected " +
                       std::to_string(k_));
  }
  if (clause.max_var() > n_) {
    throw FormulaError("clause mentions variable " + std::to_string(clause.max_var()) +
                       " but formula has " + std::to_string(n_));
  }
}

bool eval_clause(const Clause& clause, const Assignment& x) {
  if (clause.max_var() > x.width()) {
    throw FormulaError("clause variable " + std::to_string(clause.max_var()) +
                       " outside assignment of width " + std::to_string(x.width()));
  }
  for (const Literal& lit : clause.literals()) {
    if (x.value(lit.var) != lit.negated) return true;
  }
  return false;
}

int count_satisfied(const CnfFormula& formula, const Assignment& x) {
  if (x.width() != formula.num_vars()) {
    throw FormulaError("assignment width " + std::to_string(x.width()) +
                       " does not match formula with " + std::to_string(formula.num_vars()) +
                       " variables");
  }
  int count = 0;
  for (const Clause& c : formula.clauses()) count += eval_clause(c, x) ? 1 : 0;
  return count;
}

}  // namespace apqaoa
