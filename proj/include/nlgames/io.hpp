#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlgames/bell.hpp"
#include "nlgames/errors.hpp"
#include "nlgames/game.hpp"
#include "nlgames/polytope.hpp"
#include "nlgames/quantum.hpp"

namespace nlg {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Game documents ("game v1" header, inputs/outputs lines, one "win x y a b"
/// line per winning quadruple, "end"). Parsing accepts comments, blank lines
/// and unsorted or duplicated win lines; serialization is canonical, so
/// serialize(parse(text)) is the identity on canonical documents.
GameRelation parse_game(std::string_view text);
std::string serialize_game(const GameRelation& game);

/// Expression documents ("bell v1" header, bound and nonzero coefficients as
/// exact fractions). Same canonicalization contract as game documents.
BellExpression parse_expression(std::string_view text);
std::string serialize_expression(const BellExpression& expression);

/// Strategy export: state amplitudes and projector matrices as (real,
/// imaginary) pairs at 17 significant digits.
std::string serialize_quantum_strategy(const QuantumStrategy& strategy);

/// One row per line, entries space-separated, for independent auditing.
std::string matrix_to_text(const std::vector<std::vector<BigInt>>& matrix);

std::string format_double(double value);  // 17 significant digits

/// Line-oriented report emitted by every CLI command. Deterministic except
/// for the elapsed-ms line.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string command);

  void add_input(std::string_view key, std::string_view value);
  void add_result(std::string_view key, std::string_view value);
  void add_check(std::string_view name, std::string_view expected, std::string_view actual,
                 bool passed);

  bool all_checks_passed() const { return failed_checks_ == 0; }
  int failed_checks() const { return failed_checks_; }

  std::string document(long elapsed_ms) const;
  std::string plain() const;

 private:
  std::string command_;
  std::vector<std::string> input_lines_;
  std::vector<std::string> result_lines_;
  int failed_checks_ = 0;
};

}  // namespace nlg
