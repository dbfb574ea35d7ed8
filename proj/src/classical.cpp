#include "nlgames/classical.hpp"

#include <stdexcept>

namespace nlg {

namespace {

void check_budget(const GameRelation& game, std::uint64_t budget) {
  const BigInt required =
      count_deterministic(game.m_a(), game.m_b(), game.n_a(), game.n_b());
  if (mpz_cmp_ui(required.get_mpz_t(), static_cast<unsigned long>(budget)) > 0) {
    throw BudgetExceededError(required, static_cast<unsigned long>(budget));
  }
}

// Visits every deterministic strategy in lexicographic (a_map, b_map) order.
// The visitor returns true to stop early.
template <typename Visitor>
void for_each_strategy(const GameRelation& game, Visitor&& visit) {
  const int slots = game.m_a() + game.m_b();
  std::vector<int> digits(slots, 0);
  for (;;) {
    if (visit(digits)) return;
    int i = slots - 1;
    for (; i >= 0; --i) {
      const int radix = i < game.m_a() ? game.n_a() : game.n_b();
      if (++digits[i] < radix) break;
      digits[i] = 0;
    }
    if (i < 0) return;
  }
}

int winning_count(const GameRelation& game, const std::vector<int>& digits) {
  int count = 0;
  for (int x = 0; x < game.m_a(); ++x)
    for (int y = 0; y < game.m_b(); ++y)
      if (game.wins(x, y, digits[x], digits[game.m_a() + y])) ++count;
  return count;
}

DeterministicStrategy to_strategy(const GameRelation& game, const std::vector<int>& digits) {
  return DeterministicStrategy{
      std::vector<int>(digits.begin(), digits.begin() + game.m_a()),
      std::vector<int>(digits.begin() + game.m_a(), digits.end())};
}

}  // namespace

ClassicalValueResult classical_value(const GameRelation& game, std::uint64_t budget) {
  check_budget(game, budget);
  const int pairs = game.m_a() * game.m_b();
  ClassicalValueResult result;
  result.winning_count = -1;
  for_each_strategy(game, [&](const std::vector<int>& digits) {
    const int count = winning_count(game, digits);
    if (count > result.winning_count) {
      result.winning_count = count;
      result.witness = to_strategy(game, digits);
    }
    return result.winning_count == pairs;  // cannot improve past a perfect score
  });
  result.value = make_fraction(result.winning_count, pairs);
  return result;
}

bool is_classically_winnable(const GameRelation& game, std::uint64_t budget) {
  check_budget(game, budget);
  const int pairs = game.m_a() * game.m_b();
  bool winnable = false;
  for_each_strategy(game, [&](const std::vector<int>& digits) {
    if (winning_count(game, digits) == pairs) {
      winnable = true;
      return true;
    }
    return false;
  });
  return winnable;
}

bool winnable_2xn(const GameRelation& game, PairCompatibilityWitness* witness) {
  if (game.m_a() != 2) {
    throw std::invalid_argument("pair-compatibility criterion needs exactly two Alice inputs, got " +
                                std::to_string(game.m_a()));
  }
  for (int a0 = 0; a0 < game.n_a(); ++a0) {
    for (int a1 = 0; a1 < game.n_a(); ++a1) {
      std::vector<int> bob(game.m_b(), -1);
      bool compatible = true;
      for (int y = 0; y < game.m_b() && compatible; ++y) {
        for (int b = 0; b < game.n_b(); ++b) {
          if (game.wins(0, y, a0, b) && game.wins(1, y, a1, b)) {
            bob[y] = b;
            break;
          }
        }
        compatible = bob[y] >= 0;
      }
      if (compatible) {
        if (witness != nullptr) *witness = PairCompatibilityWitness{a0, a1, std::move(bob)};
        return true;
      }
    }
  }
  return false;
}

}  // namespace nlg
