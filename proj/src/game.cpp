#include "nlgames/game.hpp"

#include <stdexcept>
#include <string>

namespace nlg {

namespace {

void check_dimension(int value, const char* name) {
  if (value < 1) {
    throw std::invalid_argument(std::string(name) + " must be at least 1, got " +
                                std::to_string(value));
  }
}

}  // namespace

GameRelation::GameRelation(int m_a, int m_b, int n_a, int n_b, std::vector<bool> wins)
    : m_a_(m_a), m_b_(m_b), n_a_(n_a), n_b_(n_b), wins_(std::move(wins)) {
  check_dimension(m_a, "m_A");
  check_dimension(m_b, "m_B");
  check_dimension(n_a, "n_A");
  check_dimension(n_b, "n_B");
  const std::size_t expected = static_cast<std::size_t>(m_a) * m_b * n_a * n_b;
  if (wins_.size() != expected) {
    throw std::invalid_argument("winning table has " + std::to_string(wins_.size()) +
                                " entries, expected " + std::to_string(expected));
  }
}

GameRelation GameRelation::from_predicate(
    int m_a, int m_b, int n_a, int n_b,
    const std::function<bool(int, int, int, int)>& predicate) {
  check_dimension(m_a, "m_A");
  check_dimension(m_b, "m_B");
  check_dimension(n_a, "n_A");
  check_dimension(n_b, "n_B");
  std::vector<bool> wins;
  wins.reserve(static_cast<std::size_t>(m_a) * m_b * n_a * n_b);
  for (int x = 0; x < m_a; ++x)
    for (int y = 0; y < m_b; ++y)
      for (int a = 0; a < n_a; ++a)
        for (int b = 0; b < n_b; ++b) wins.push_back(predicate(x, y, a, b));
  return GameRelation(m_a, m_b, n_a, n_b, std::move(wins));
}

GameRelation GameRelation::from_win_list(int m_a, int m_b, int n_a, int n_b,
                                         std::span<const std::array<int, 4>> win_list) {
  check_dimension(m_a, "m_A");
  check_dimension(m_b, "m_B");
  check_dimension(n_a, "n_A");
  check_dimension(n_b, "n_B");
  std::vector<bool> wins(static_cast<std::size_t>(m_a) * m_b * n_a * n_b, false);
  GameRelation game(m_a, m_b, n_a, n_b, std::move(wins));
  for (const auto& [x, y, a, b] : win_list) {
    game.wins_[game.index(x, y, a, b)] = true;  // index() range-checks
  }
  return game;
}

std::size_t GameRelation::index(int x, int y, int a, int b) const {
  if (x < 0 || x >= m_a_ || y < 0 || y >= m_b_ || a < 0 || a >= n_a_ || b < 0 || b >= n_b_) {
    throw std::out_of_range("game index (" + std::to_string(x) + ", " + std::to_string(y) +
                            ", " + std::to_string(a) + ", " + std::to_string(b) +
                            ") out of range");
  }
  return ((static_cast<std::size_t>(x) * m_b_ + y) * n_a_ + a) * n_b_ + b;
}

bool GameRelation::wins(int x, int y, int a, int b) const { return wins_[index(x, y, a, b)]; }

void validate_strategy(const GameRelation& game, const DeterministicStrategy& strategy) {
  if (static_cast<int>(strategy.alice.size()) != game.m_a() ||
      static_cast<int>(strategy.bob.size()) != game.m_b()) {
    throw std::invalid_argument("strategy shape does not match game inputs");
  }
  for (int a : strategy.alice) {
    if (a < 0 || a >= game.n_a()) {
      throw std::invalid_argument("alice output " + std::to_string(a) + " out of range");
    }
  }
  for (int b : strategy.bob) {
    if (b < 0 || b >= game.n_b()) {
      throw std::invalid_argument("bob output " + std::to_string(b) + " out of range");
    }
  }
}

int strategy_winning_count(const GameRelation& game, const DeterministicStrategy& strategy) {
  validate_strategy(game, strategy);
  int count = 0;
  for (int x = 0; x < game.m_a(); ++x)
    for (int y = 0; y < game.m_b(); ++y)
      if (game.wins(x, y, strategy.alice[x], strategy.bob[y])) ++count;
  return count;
}

TripleOutcome TripleOutcome::from_bits(int t0, int t1, int t2) {
  for (int t : {t0, t1, t2}) {
    if (t != 0 && t != 1) throw std::invalid_argument("triple entries must be bits");
  }
  return TripleOutcome{{t0, t1, t2}};
}

TripleOutcome TripleOutcome::from_code(int code, LocalParity parity) {
  if (code < 0 || code > 3) throw std::invalid_argument("outcome code must be in 0..3");
  const int t0 = (code >> 1) & 1;
  const int t1 = code & 1;
  const int t2 = t0 ^ t1 ^ (parity == LocalParity::kOdd ? 1 : 0);
  return TripleOutcome{{t0, t1, t2}};
}

TripleOutcome TripleOutcome::from_full_code(int code) {
  if (code < 0 || code > 7) throw std::invalid_argument("raw outcome code must be in 0..7");
  return TripleOutcome{{(code >> 2) & 1, (code >> 1) & 1, code & 1}};
}

GameRelation magic_square_game(MsqEncoding encoding) {
  if (encoding == MsqEncoding::kFull8) {
    return GameRelation::from_predicate(3, 3, 8, 8, [](int x, int y, int a, int b) {
      const TripleOutcome ta = TripleOutcome::from_full_code(a);
      const TripleOutcome tb = TripleOutcome::from_full_code(b);
      return ta.parity() == 0 && tb.parity() == 1 && ta.bits[y] == tb.bits[x];
    });
  }
  return GameRelation::from_predicate(3, 3, 4, 4, [](int x, int y, int a, int b) {
    const TripleOutcome ta = TripleOutcome::from_code(a, LocalParity::kEven);
    const TripleOutcome tb = TripleOutcome::from_code(b, LocalParity::kOdd);
    return ta.bits[y] == tb.bits[x];
  });
}

GameRelation chsh_game() {
  return GameRelation::from_predicate(
      2, 2, 2, 2, [](int x, int y, int a, int b) { return (a ^ b) == (x & y); });
}

GameRelation subgame_alice_inputs(const GameRelation& game, std::span<const int> inputs) {
  if (inputs.empty()) throw std::invalid_argument("sub-game needs at least one Alice input");
  for (int x : inputs) {
    if (x < 0 || x >= game.m_a()) {
      throw std::invalid_argument("alice input " + std::to_string(x) + " out of range");
    }
  }
  std::vector<int> selected(inputs.begin(), inputs.end());
  return GameRelation::from_predicate(
      static_cast<int>(selected.size()), game.m_b(), game.n_a(), game.n_b(),
      [&](int x, int y, int a, int b) { return game.wins(selected[x], y, a, b); });
}

DeterministicStrategy table_to_strategy(const MagicSquareTable& table, MsqEncoding encoding,
                                        bool validate_parities) {
  for (const auto& row : table.c) {
    for (int bit : row) {
      if (bit != 0 && bit != 1) throw std::invalid_argument("table entries must be bits");
    }
  }
  if (validate_parities && encoding == MsqEncoding::kRestricted4) {
    for (int x = 0; x < 3; ++x) {
      if (table.row_parity(x) != 0) {
        throw std::invalid_argument("row " + std::to_string(x) +
                                    " has odd parity; not playable under the promise");
      }
    }
    for (int y = 0; y < 3; ++y) {
      if (table.column_parity(y) != 1) {
        throw std::invalid_argument("column " + std::to_string(y) +
                                    " has even parity; not playable under the promise");
      }
    }
  }
  DeterministicStrategy strategy;
  for (int x = 0; x < 3; ++x) {
    const int code = 2 * table.c[x][0] + table.c[x][1];
    strategy.alice.push_back(encoding == MsqEncoding::kRestricted4
                                 ? code
                                 : TripleOutcome::from_code(code, LocalParity::kEven).full_code());
  }
  for (int y = 0; y < 3; ++y) {
    const int code = 2 * table.c[0][y] + table.c[1][y];
    strategy.bob.push_back(encoding == MsqEncoding::kRestricted4
                               ? code
                               : TripleOutcome::from_code(code, LocalParity::kOdd).full_code());
  }
  return strategy;
}

BigInt count_deterministic(int m_a, int m_b, int n_a, int n_b) {
  check_dimension(m_a, "m_A");
  check_dimension(m_b, "m_B");
  check_dimension(n_a, "n_A");
  check_dimension(n_b, "n_B");
  BigInt alice, bob;
  mpz_ui_pow_ui(alice.get_mpz_t(), static_cast<unsigned long>(n_a),
                static_cast<unsigned long>(m_a));
  mpz_ui_pow_ui(bob.get_mpz_t(), static_cast<unsigned long>(n_b),
                static_cast<unsigned long>(m_b));
  return alice * bob;
}

}  // namespace nlg
