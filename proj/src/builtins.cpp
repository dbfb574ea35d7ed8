#include "nlgames/builtins.hpp"

#include <array>

namespace nlg {

namespace {
constexpr std::array<int, 2> kFirstTwoInputs{0, 1};
}

std::optional<GameRelation> builtin_game(std::string_view id) {
  if (id == "magic-square-r4") return magic_square_game(MsqEncoding::kRestricted4);
  if (id == "magic-square-f8") return magic_square_game(MsqEncoding::kFull8);
  if (id == "chsh") return chsh_game();
  if (id == "magic-square-r4-2x3") {
    return subgame_alice_inputs(magic_square_game(MsqEncoding::kRestricted4), kFirstTwoInputs);
  }
  return std::nullopt;
}

std::optional<BellExpression> builtin_expression(std::string_view id) {
  if (id == "magic-square-r4") return magic_square_inequality(MsqInequalityForm::kRestricted4);
  if (id == "magic-square-f8") return magic_square_inequality(MsqInequalityForm::kFull8);
  if (id == "magic-square-abstract4") {
    return magic_square_inequality(MsqInequalityForm::kAbstract4);
  }
  return std::nullopt;
}

std::optional<QuantumSetup> builtin_quantum(std::string_view id, bool debug_flip_sign) {
  if (id == "magic-square-r4") {
    return QuantumSetup{magic_square_quantum_strategy(MsqEncoding::kRestricted4, debug_flip_sign),
                        magic_square_game(MsqEncoding::kRestricted4)};
  }
  if (id == "magic-square-f8") {
    return QuantumSetup{magic_square_quantum_strategy(MsqEncoding::kFull8, debug_flip_sign),
                        magic_square_game(MsqEncoding::kFull8)};
  }
  if (id == "chsh") {
    return QuantumSetup{chsh_quantum_strategy(), chsh_game()};
  }
  if (id == "magic-square-r4-2x3") {
    return QuantumSetup{
        restrict_alice_inputs(
            magic_square_quantum_strategy(MsqEncoding::kRestricted4, debug_flip_sign),
            kFirstTwoInputs),
        subgame_alice_inputs(magic_square_game(MsqEncoding::kRestricted4), kFirstTwoInputs)};
  }
  return std::nullopt;
}

std::vector<std::string> builtin_game_ids() {
  return {"magic-square-r4", "magic-square-f8", "chsh", "magic-square-r4-2x3"};
}

std::vector<std::string> builtin_expression_ids() {
  return {"magic-square-r4", "magic-square-f8", "magic-square-abstract4"};
}

}  // namespace nlg
