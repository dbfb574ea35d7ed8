#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nlgames/errors.hpp"
#include "nlgames/game.hpp"
#include "nlgames/rational.hpp"

namespace nlg {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

struct ClassicalValueResult {
  Rational value;                  // winning count of the best strategy / (m_A * m_B)
  int winning_count = 0;           // numerator before reduction
  DeterministicStrategy witness;   // first maximizer in lexicographic order
};

/// Exact classical value by exhaustive enumeration over all deterministic
/// strategies, lexicographic in (a_map, b_map). Inputs are weighted uniformly.
/// Throws BudgetExceededError when n_A^m_A * n_B^m_B exceeds the budget.
ClassicalValueResult classical_value(const GameRelation& game,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// True iff some deterministic strategy wins every input pair. Short-circuits
/// on the first winning strategy.
bool is_classically_winnable(const GameRelation& game,
                             std::uint64_t budget = kDefaultEnumerationBudget);

struct PairCompatibilityWitness {
  int a0 = 0;
  int a1 = 0;
  std::vector<int> bob;  // one compatible Bob output per y
};

/// Decision procedure for games where Alice has exactly two inputs: winnable
/// iff some output pair (a0, a1) admits, for every y, a Bob output b winning
/// against both. Runs in O(n_A^2 * m_B * n_B); no strategy enumeration.
/// Throws std::invalid_argument unless m_A == 2.
bool winnable_2xn(const GameRelation& game, PairCompatibilityWitness* witness = nullptr);

}  // namespace nlg
