#include "apqaoa/random_models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace apqaoa {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Uniform: return "F";
    case ModelKind::Satisfiable: return "Fs";
    case ModelKind::Planted: return "Ff";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "F" || name == "uniform") return ModelKind::Uniform;
  if (name == "Fs" || name == "F_s" || name == "satisfiable") return ModelKind::Satisfiable;
  if (name == "Ff" || name == "F_f" || name == "planted") return ModelKind::Planted;
  throw std::invalid_argument("unknown model kind '" + name + "' (expected F, Fs or Ff)");
}

void ModelSpec::validate() const {
  if (n < 1 || n > kMaxVariables) {
    throw std::invalid_argument("model n=" + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxVariables) + "]");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("model k=" + std::to_string(k) + " must lie in [1, n]");
  }
  if (m < 0) throw std::invalid_argument("model m must be non-negative");
}

AssignmentSet::AssignmentSet(int n)
    : n_(n), count_(std::uint64_t{1} << n), words_(((std::size_t{1} << n) + 63) / 64, ~std::uint64_t{0}) {
  const std::size_t tail = (std::size_t{1} << n) % 64;
  if (tail != 0) words_.back() = (std::uint64_t{1} << tail) - 1;
}

std::uint64_t AssignmentSet::count_falsifying(const Clause& clause) const {
  std::uint64_t hits = 0;
  for_each_falsifying(n_, clause, [&](std::uint32_t x) { hits += contains(x) ? 1 : 0; });
  return hits;
}

void AssignmentSet::remove_falsifying(const Clause& clause) {
  for_each_falsifying(n_, clause, [&](std::uint32_t x) {
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  });
}

std::vector<std::uint32_t> AssignmentSet::members() const {
  std::vector<std::uint32_t> out;
  out.reserve(count_);
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<std::uint32_t>(wi * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

Clause sample_clause_uniform(int n, int k, Rng& rng) {
  if (k < 1 || k > n) throw std::invalid_argument("sample_clause_uniform requires 1 <= k <= n");
  // Floyd's algorithm: k distinct indices uniform over the C(n, k) subsets.
  std::vector<Literal> lits;
  lits.reserve(k);
  auto taken = [&](int v) {
    return std::any_of(lits.begin(), lits.end(), [v](const Literal& l) { return l.var == v; });
  };
  for (int j = n - k + 1; j <= n; ++j) {
    const int t = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(j)));
    lits.push_back(Literal{taken(t) ? j : t, false});
  }
  for (Literal& l : lits) l.negated = rng.coin();
  return Clause(std::move(lits));
}

namespace {

Clause sample_satisfied_by(int n, int k, std::uint32_t t0, Rng& rng) {
  for (;;) {
    Clause c = sample_clause_uniform(n, k, rng);
    if (!c.falsified_by(t0)) return c;
  }
}

}  // namespace

GenerationResult generate(const ModelSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  CnfFormula formula(spec.n, spec.k);
  AssignmentSet alive(spec.n);
  std::optional<Assignment> hidden;

  switch (spec.kind) {
    case ModelKind::Uniform:
      for (int i = 0; i < spec.m; ++i) {
        Clause c = sample_clause_uniform(spec.n, spec.k, rng);
        alive.remove_falsifying(c);
        formula.add_clause(std::move(c));
      }
      break;
    case ModelKind::Planted: {
      const auto t0 = static_cast<std::uint32_t>(rng.uniform_below(std::uint64_t{1} << spec.n));
      hidden = Assignment(t0, spec.n);
      for (int i = 0; i < spec.m; ++i) {
        Clause c = sample_satisfied_by(spec.n, spec.k, t0, rng);
        alive.remove_falsifying(c);
        formula.add_clause(std::move(c));
      }
      break;
    }
    case ModelKind::Satisfiable:
      for (int i = 0; i < spec.m; ++i) {
        for (;;) {
          Clause c = sample_clause_uniform(spec.n, spec.k, rng);
          if (alive.count_falsifying(c) < alive.count()) {
            alive.remove_falsifying(c);
            formula.add_clause(std::move(c));
            break;
          }
        }
      }
      break;
  }
  return GenerationResult{std::move(formula), hidden, alive.members()};
}

int m_star(int n) {
  if (n < 2) throw std::invalid_argument("m_star requires n >= 2");
  const double mu = std::clamp(5.9 + 0.04 * (n - 10), 5.9, 6.3);
  return static_cast<int>(std::lround(mu * n));
}

}  // namespace apqaoa
