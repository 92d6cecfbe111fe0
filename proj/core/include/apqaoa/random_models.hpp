#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apqaoa/cnf.hpp"
#include "apqaoa/rng.hpp"

namespace apqaoa {

/// The three random k-SAT models: unconditioned uniform clauses (F), clauses
/// kept only while the formula stays satisfiable (F_s), and clauses satisfied
/// by a hidden planted assignment (F_f).
enum class ModelKind { Uniform, Satisfiable, Planted };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

struct ModelSpec {
  ModelKind kind = ModelKind::Satisfiable;
  int n = 10;
  int m = 59;
  int k = 3;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Dense bitset over the 2^n assignments with a maintained population count.
class AssignmentSet {
 public:
  /// All 2^n assignments present.
  explicit AssignmentSet(int n);

  int num_vars() const { return n_; }
  std::uint64_t count() const { return count_; }
  bool contains(std::uint32_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }

  /// Number of members falsifying `clause` (scans its 2^{n-k} falsifying
  /// assignments only).
  std::uint64_t count_falsifying(const Clause& clause) const;
  /// Removes every assignment that falsifies `clause`.
  void remove_falsifying(const Clause& clause);

  std::vector<std::uint32_t> members() const;

 private:
  int n_;
  std::uint64_t count_;
  std::vector<std::uint64_t> words_;
};

/// Calls `fn(x)` for every x in [0, 2^n) with (x & clause.var_mask()) equal to
/// clause.falsifying_bits(), in increasing order.
template <typename Fn>
void for_each_falsifying(int n, const Clause& clause, Fn&& fn) {
  const std::uint32_t full = n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  const std::uint32_t free_bits = full & ~clause.var_mask();
  const std::uint32_t fixed = clause.falsifying_bits();
  std::uint32_t sub = 0;
  do {
    fn(sub | fixed);
    sub = (sub - free_bits) & free_bits;
  } while (sub != 0);
}

struct GenerationResult {
  CnfFormula formula;
  std::optional<Assignment> hidden_t0;
  /// Every assignment satisfying all clauses, ascending.
  std::vector<std::uint32_t> interpretations;
};

/// Draws one clause uniformly from the 2^k * C(n, k) clauses on n variables.
Clause sample_clause_uniform(int n, int k, Rng& rng);

GenerationResult generate(const ModelSpec& spec);

/// Clause count giving roughly 1.3 interpretations per F_s(n, m, 3) instance.
/// mu_n rises linearly from 5.9 at n = 10 to 6.3 at n = 20 and is clamped
/// outside that range; the result is round(mu_n * n).
int m_star(int n);

}  // namespace apqaoa
