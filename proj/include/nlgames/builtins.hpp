#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlgames/bell.hpp"
#include "nlgames/game.hpp"
#include "nlgames/quantum.hpp"

namespace nlg {

/// Built-in games: "magic-square-r4", "magic-square-f8", "chsh", and the
/// two-input restriction "magic-square-r4-2x3".
std::optional<GameRelation> builtin_game(std::string_view id);

/// Built-in expressions: "magic-square-r4", "magic-square-f8",
/// "magic-square-abstract4".
std::optional<BellExpression> builtin_expression(std::string_view id);

struct QuantumSetup {
  QuantumStrategy strategy;
  GameRelation game;
};

/// Built-in quantum strategies paired with their games; ids as for
/// builtin_game except "magic-square-f8" shares the Restricted4 measurements
/// relabeled to raw three-bit outputs.
std::optional<QuantumSetup> builtin_quantum(std::string_view id, bool debug_flip_sign = false);

std::vector<std::string> builtin_game_ids();
std::vector<std::string> builtin_expression_ids();

}  // namespace nlg
