#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nlgames/rational.hpp"

namespace nlg {

/// A bipartite game: input counts, output counts, and the winning relation W
/// stored as a dense bitset over (x, y, a, b). Immutable after construction.
class GameRelation {
 public:
  GameRelation(int m_a, int m_b, int n_a, int n_b, std::vector<bool> wins);

  static GameRelation from_predicate(
      int m_a, int m_b, int n_a, int n_b,
      const std::function<bool(int x, int y, int a, int b)>& predicate);

  static GameRelation from_win_list(int m_a, int m_b, int n_a, int n_b,
                                    std::span<const std::array<int, 4>> wins);

  int m_a() const { return m_a_; }
  int m_b() const { return m_b_; }
  int n_a() const { return n_a_; }
  int n_b() const { return n_b_; }

  /// Throws std::out_of_range on any index outside the declared ranges.
  bool wins(int x, int y, int a, int b) const;

  std::size_t table_size() const { return wins_.size(); }
  const std::vector<bool>& table() const { return wins_; }

  bool operator==(const GameRelation&) const = default;

 private:
  std::size_t index(int x, int y, int a, int b) const;

  int m_a_;
  int m_b_;
  int n_a_;
  int n_b_;
  std::vector<bool> wins_;
};

/// One output function per party: alice[x] in [0, n_A), bob[y] in [0, n_B).
struct DeterministicStrategy {
  std::vector<int> alice;
  std::vector<int> bob;

  bool operator==(const DeterministicStrategy&) const = default;
};

/// Throws std::invalid_argument unless the strategy's shape and output values
/// fit the game.
void validate_strategy(const GameRelation& game, const DeterministicStrategy& strategy);

/// Number of input pairs (x, y) the strategy wins.
int strategy_winning_count(const GameRelation& game, const DeterministicStrategy& strategy);

/// A shared 3x3 table of bits. Parity satisfaction is a computed property,
/// not an invariant.
struct MagicSquareTable {
  std::array<std::array<int, 3>, 3> c{};

  int row_parity(int x) const { return c[x][0] ^ c[x][1] ^ c[x][2]; }
  int column_parity(int y) const { return c[0][y] ^ c[1][y] ^ c[2][y]; }
};

enum class LocalParity { kEven, kOdd };

/// Three bits with a declared parity convention. The two leading bits carry
/// the 4-outcome code 2*t0 + t1; the third bit is the parity completion.
struct TripleOutcome {
  std::array<int, 3> bits{};

  int code() const { return 2 * bits[0] + bits[1]; }
  int parity() const { return bits[0] ^ bits[1] ^ bits[2]; }
  int full_code() const { return 4 * bits[0] + 2 * bits[1] + bits[2]; }

  static TripleOutcome from_bits(int t0, int t1, int t2);
  static TripleOutcome from_code(int code, LocalParity parity);
  static TripleOutcome from_full_code(int code);
};

enum class MsqEncoding { kFull8, kRestricted4 };

/// The Magic Square game. Full8 keeps all three raw bits per output (8x8
/// outcomes, all three requirements checked); Restricted4 keeps the
/// parity-completed codes (4x4 outcomes, only the intersection check can fail).
GameRelation magic_square_game(MsqEncoding encoding);

/// The xor game a ^ b == x & y on binary inputs and outputs.
GameRelation chsh_game();

/// Restriction of a game to a subset of Alice's inputs, in the given order.
GameRelation subgame_alice_inputs(const GameRelation& game, std::span<const int> inputs);

/// Strategy played from a shared table: Alice answers input x with the code of
/// row x, Bob answers input y with the code of column y. Codes use the two
/// leading bits; Full8 outputs re-complete the third bit with the party's
/// parity. With validate_parities set, Restricted4 rejects tables whose rows
/// are not even or whose columns are not odd.
DeterministicStrategy table_to_strategy(const MagicSquareTable& table, MsqEncoding encoding,
                                        bool validate_parities = false);

/// n_A^m_A * n_B^m_B, exactly.
BigInt count_deterministic(int m_a, int m_b, int n_a, int n_b);

}  // namespace nlg
