#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace apqaoa {

/// Hard upper bound on the variable count. Spectrum tables and state vectors
/// are dense over all 2^n assignments.
inline constexpr int kMaxVariables = 24;

class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A signed literal over a 1-based variable index.
struct Literal {
  int var = 1;
  bool negated = false;

  static Literal from_int(int signed_var);
  int to_int() const { return negated ? -var : var; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// An n-bit assignment. Bit j holds the value of variable j+1, so variable 1
/// is the least-significant bit of the integer encoding.
class Assignment {
 public:
  Assignment(std::uint32_t bits, int n);

  static Assignment from_values(const std::vector<bool>& values);

  std::uint32_t bits() const { return bits_; }
  int width() const { return n_; }
  bool value(int var) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::uint32_t bits_;
  int n_;
};

/// Disjunction of exactly k literals over distinct variables. Literals are
/// kept sorted by variable index, so two clauses compare equal iff they
/// denote the same disjunction.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  int size() const { return static_cast<int>(literals_.size()); }
  int max_var() const { return literals_.empty() ? 0 : literals_.back().var; }

  /// Bit mask of the variables the clause touches.
  std::uint32_t var_mask() const { return mask_; }
  /// The unique assignment of the touched variables that falsifies the
  /// clause: bit set for every negated literal.
  std::uint32_t falsifying_bits() const { return falsifying_; }

  bool falsified_by(std::uint32_t x) const { return (x & mask_) == falsifying_; }

  friend bool operator==(const Clause& a, const Clause& b) {
    return a.literals_ == b.literals_;
  }

 private:
  std::vector<Literal> literals_;
  std::uint32_t mask_ = 0;
  std::uint32_t falsifying_ = 0;
};

/// n variables and m clauses of exactly k literals each. Duplicate clauses
/// are permitted.
class CnfFormula {
 public:
  CnfFormula(int num_vars, int k, std::vector<Clause> clauses = {});

  int num_vars() const { return n_; }
  int k() const { return k_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  void add_clause(Clause clause);

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  void validate(const Clause& clause) const;

  int n_;
  int k_;
  std::vector<Clause> clauses_;
};

/// True iff at least one literal of `clause` is satisfied by `x`.
bool eval_clause(const Clause& clause, const Assignment& x);

/// Number of clauses of `formula` satisfied by `x`, in [0, m].
int count_satisfied(const CnfFormula& formula, const Assignment& x);

inline int count_falsified(const CnfFormula& formula, const Assignment& x) {
  return formula.num_clauses() - count_satisfied(formula, x);
}

}  // namespace apqaoa
