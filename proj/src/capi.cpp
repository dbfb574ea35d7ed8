#include "nlgames.h"

#include <cstring>
#include <new>
#include <string>

#include "nlgames/bell.hpp"
#include "nlgames/builtins.hpp"
#include "nlgames/classical.hpp"
#include "nlgames/errors.hpp"
#include "nlgames/game.hpp"
#include "nlgames/io.hpp"
#include "nlgames/polytope.hpp"
#include "nlgames/quantum.hpp"

struct nlg_game {
  nlg::GameRelation impl;
};

struct nlg_expression {
  nlg::BellExpression impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::uint64_t effective_budget(uint64_t budget) {
  return budget == 0 ? nlg::kDefaultEnumerationBudget : budget;
}

// Runs the body and translates exceptions into status codes.
template <typename Fn>
nlg_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlg::ParseError& e) {
    set_error(e.what());
    return NLG_ERR_PARSE;
  } catch (const nlg::BudgetExceededError& e) {
    set_error(e.what());
    return NLG_ERR_BUDGET_EXCEEDED;
  } catch (const nlg::PreconditionError& e) {
    set_error(e.what());
    return NLG_ERR_PRECONDITION;
  } catch (const nlg::ExtractionError& e) {
    set_error(e.what());
    return NLG_ERR_PRECONDITION;
  } catch (const nlg::DegenerateExpressionError& e) {
    set_error(e.what());
    return NLG_ERR_DEGENERATE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return NLG_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return NLG_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return NLG_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return NLG_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return NLG_ERR_INTERNAL;
  }
}

nlg_status require(bool condition, const char* message) {
  if (condition) return NLG_OK;
  set_error(message);
  return NLG_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* nlg_version(void) { return nlg::kArtifactVersion; }

const char* nlg_status_name(nlg_status status) {
  switch (status) {
    case NLG_OK: return "ok";
    case NLG_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case NLG_ERR_PARSE: return "parse-error";
    case NLG_ERR_BUDGET_EXCEEDED: return "budget-exceeded";
    case NLG_ERR_PRECONDITION: return "precondition-failed";
    case NLG_ERR_DEGENERATE: return "degenerate-expression";
    case NLG_ERR_UNKNOWN_ID: return "unknown-id";
    case NLG_ERR_INTERNAL: return "internal-error";
  }
  return "unrecognized-status";
}

const char* nlg_last_error(void) { return g_last_error.c_str(); }

void nlg_string_free(char* text) { delete[] text; }

nlg_status nlg_game_builtin(const char* id, nlg_game** out) {
  if (nlg_status s = require(id && out, "id and out must not be NULL")) return s;
  return guarded([&] {
    auto game = nlg::builtin_game(id);
    if (!game) {
      set_error("unknown built-in game '" + std::string(id) + "'");
      return NLG_ERR_UNKNOWN_ID;
    }
    *out = new nlg_game{std::move(*game)};
    return NLG_OK;
  });
}

nlg_status nlg_game_parse(const char* text, nlg_game** out) {
  if (nlg_status s = require(text && out, "text and out must not be NULL")) return s;
  return guarded([&] {
    *out = new nlg_game{nlg::parse_game(text)};
    return NLG_OK;
  });
}

nlg_status nlg_game_serialize(const nlg_game* game, char** out) {
  if (nlg_status s = require(game && out, "game and out must not be NULL")) return s;
  return guarded([&] {
    *out = copy_string(nlg::serialize_game(game->impl));
    return NLG_OK;
  });
}

void nlg_game_free(nlg_game* game) { delete game; }

nlg_status nlg_game_shape(const nlg_game* game, int32_t* m_a, int32_t* m_b, int32_t* n_a,
                          int32_t* n_b) {
  if (nlg_status s = require(game != nullptr, "game must not be NULL")) return s;
  if (m_a) *m_a = game->impl.m_a();
  if (m_b) *m_b = game->impl.m_b();
  if (n_a) *n_a = game->impl.n_a();
  if (n_b) *n_b = game->impl.n_b();
  return NLG_OK;
}

nlg_status nlg_game_wins(const nlg_game* game, int32_t x, int32_t y, int32_t a, int32_t b,
                         int* out) {
  if (nlg_status s = require(game && out, "game and out must not be NULL")) return s;
  return guarded([&] {
    *out = game->impl.wins(x, y, a, b) ? 1 : 0;
    return NLG_OK;
  });
}

nlg_status nlg_game_restrict_alice(const nlg_game* game, const int32_t* inputs, int32_t count,
                                   nlg_game** out) {
  if (nlg_status s = require(game && inputs && out && count > 0,
                             "game, inputs and out must not be NULL, count must be positive"))
    return s;
  return guarded([&] {
    std::vector<int> selected(inputs, inputs + count);
    *out = new nlg_game{nlg::subgame_alice_inputs(game->impl, selected)};
    return NLG_OK;
  });
}

nlg_status nlg_count_deterministic(int32_t m_a, int32_t m_b, int32_t n_a, int32_t n_b,
                                   char** out) {
  if (nlg_status s = require(out != nullptr, "out must not be NULL")) return s;
  return guarded([&] {
    *out = copy_string(nlg::count_deterministic(m_a, m_b, n_a, n_b).get_str());
    return NLG_OK;
  });
}

nlg_status nlg_classical_value(const nlg_game* game, uint64_t budget, char** value,
                               int32_t* witness_alice, int32_t* witness_bob) {
  if (nlg_status s = require(game && value, "game and value must not be NULL")) return s;
  return guarded([&] {
    const nlg::ClassicalValueResult result =
        nlg::classical_value(game->impl, effective_budget(budget));
    *value = copy_string(nlg::to_fraction_string(result.value));
    if (witness_alice) {
      for (std::size_t i = 0; i < result.witness.alice.size(); ++i)
        witness_alice[i] = result.witness.alice[i];
    }
    if (witness_bob) {
      for (std::size_t i = 0; i < result.witness.bob.size(); ++i)
        witness_bob[i] = result.witness.bob[i];
    }
    return NLG_OK;
  });
}

nlg_status nlg_classically_winnable(const nlg_game* game, uint64_t budget, int* out) {
  if (nlg_status s = require(game && out, "game and out must not be NULL")) return s;
  return guarded([&] {
    *out = nlg::is_classically_winnable(game->impl, effective_budget(budget)) ? 1 : 0;
    return NLG_OK;
  });
}

nlg_status nlg_winnable_2xn(const nlg_game* game, int* out, int32_t* witness_alice,
                            int32_t* witness_bob) {
  if (nlg_status s = require(game && out, "game and out must not be NULL")) return s;
  return guarded([&] {
    nlg::PairCompatibilityWitness witness;
    const bool winnable = nlg::winnable_2xn(game->impl, &witness);
    *out = winnable ? 1 : 0;
    if (winnable && witness_alice) {
      witness_alice[0] = witness.a0;
      witness_alice[1] = witness.a1;
    }
    if (winnable && witness_bob) {
      for (std::size_t i = 0; i < witness.bob.size(); ++i) witness_bob[i] = witness.bob[i];
    }
    return NLG_OK;
  });
}

nlg_status nlg_strategy_winning_count(const nlg_game* game, const int32_t* alice,
                                      const int32_t* bob, int32_t* out) {
  if (nlg_status s = require(game && alice && bob && out, "arguments must not be NULL"))
    return s;
  return guarded([&] {
    nlg::DeterministicStrategy strategy{
        std::vector<int>(alice, alice + game->impl.m_a()),
        std::vector<int>(bob, bob + game->impl.m_b())};
    *out = nlg::strategy_winning_count(game->impl, strategy);
    return NLG_OK;
  });
}

nlg_status nlg_expression_builtin(const char* id, nlg_expression** out) {
  if (nlg_status s = require(id && out, "id and out must not be NULL")) return s;
  return guarded([&] {
    auto expression = nlg::builtin_expression(id);
    if (!expression) {
      set_error("unknown built-in expression '" + std::string(id) + "'");
      return NLG_ERR_UNKNOWN_ID;
    }
    *out = new nlg_expression{std::move(*expression)};
    return NLG_OK;
  });
}

nlg_status nlg_expression_parse(const char* text, nlg_expression** out) {
  if (nlg_status s = require(text && out, "text and out must not be NULL")) return s;
  return guarded([&] {
    *out = new nlg_expression{nlg::parse_expression(text)};
    return NLG_OK;
  });
}

nlg_status nlg_expression_serialize(const nlg_expression* expression, char** out) {
  if (nlg_status s = require(expression && out, "expression and out must not be NULL")) return s;
  return guarded([&] {
    *out = copy_string(nlg::serialize_expression(expression->impl));
    return NLG_OK;
  });
}

void nlg_expression_free(nlg_expression* expression) { delete expression; }

nlg_status nlg_expression_shape(const nlg_expression* expression, int32_t* m_a, int32_t* m_b,
                                int32_t* n_a, int32_t* n_b) {
  if (nlg_status s = require(expression != nullptr, "expression must not be NULL")) return s;
  if (m_a) *m_a = expression->impl.params.m_a;
  if (m_b) *m_b = expression->impl.params.m_b;
  if (n_a) *n_a = expression->impl.params.n_a;
  if (n_b) *n_b = expression->impl.params.n_b;
  return NLG_OK;
}

nlg_status nlg_expression_bound(const nlg_expression* expression, char** out) {
  if (nlg_status s = require(expression && out, "expression and out must not be NULL")) return s;
  return guarded([&] {
    *out = copy_string(nlg::to_fraction_string(expression->impl.local_bound));
    return NLG_OK;
  });
}

nlg_status nlg_expression_pad_outputs(const nlg_expression* expression, int32_t n_a, int32_t n_b,
                                      nlg_expression** out) {
  if (nlg_status s = require(expression && out, "expression and out must not be NULL")) return s;
  return guarded([&] {
    *out = new nlg_expression{nlg::padded_to_outputs(expression->impl, n_a, n_b)};
    return NLG_OK;
  });
}

nlg_status nlg_cg_dimension(int32_t m_a, int32_t m_b, int32_t n_a, int32_t n_b, int64_t* out) {
  if (nlg_status s = require(out != nullptr, "out must not be NULL")) return s;
  return guarded([&] {
    *out = nlg::cg_dimension(nlg::PolytopeParams{m_a, m_b, n_a, n_b});
    return NLG_OK;
  });
}

nlg_status nlg_facet_check(const nlg_expression* expression, uint64_t budget,
                           int enforce_proper_face, nlg_facet_report* out) {
  if (nlg_status s = require(expression && out, "expression and out must not be NULL")) return s;
  return guarded([&] {
    const nlg::FacetCertificate certificate =
        nlg::is_facet(expression->impl, effective_budget(budget), enforce_proper_face != 0);
    out->is_facet = certificate.facet ? 1 : 0;
    out->vertex_count = certificate.vertex_count;
    out->rank = certificate.rank;
    out->dimension = certificate.dimension;
    return NLG_OK;
  });
}

nlg_status nlg_facet_matrix(const nlg_expression* expression, uint64_t budget, char** out) {
  if (nlg_status s = require(expression && out, "expression and out must not be NULL")) return s;
  return guarded([&] {
    const auto vertices =
        nlg::saturating_vertices(expression->impl, effective_budget(budget));
    std::vector<std::vector<nlg::BigInt>> matrix;
    matrix.reserve(vertices.size());
    for (const auto& vertex : vertices) {
      const nlg::CollinsGisinVector cg = nlg::strategy_to_cg(vertex, expression->impl.params);
      std::vector<nlg::BigInt> row;
      row.reserve(cg.entries.size());
      for (const nlg::Rational& entry : cg.entries) row.push_back(entry.get_num());
      matrix.push_back(std::move(row));
    }
    *out = copy_string(nlg::matrix_to_text(matrix));
    return NLG_OK;
  });
}

nlg_status nlg_uniform_noise_value(const nlg_expression* expression, char** out) {
  if (nlg_status s = require(expression && out, "expression and out must not be NULL")) return s;
  return guarded([&] {
    *out = copy_string(nlg::to_fraction_string(nlg::uniform_noise_value(expression->impl)));
    return NLG_OK;
  });
}

nlg_status nlg_quantum_value(const char* game_id, int debug_flip_sign, double* probability,
                             double* terms, int32_t terms_length) {
  if (nlg_status s = require(game_id && probability, "game_id and probability must not be NULL"))
    return s;
  return guarded([&] {
    auto setup = nlg::builtin_quantum(game_id, debug_flip_sign != 0);
    if (!setup) {
      set_error("unknown built-in quantum strategy '" + std::string(game_id) + "'");
      return NLG_ERR_UNKNOWN_ID;
    }
    const std::vector<double> term_values =
        nlg::winning_probability_terms(setup->strategy, setup->game);
    double total = 0;
    for (double term : term_values) total += term;
    *probability = total / static_cast<double>(term_values.size());
    if (terms) {
      if (terms_length != static_cast<int32_t>(term_values.size())) {
        set_error("terms buffer must hold " + std::to_string(term_values.size()) + " doubles");
        return NLG_ERR_INVALID_ARGUMENT;
      }
      for (std::size_t i = 0; i < term_values.size(); ++i) terms[i] = term_values[i];
    }
    return NLG_OK;
  });
}

nlg_status nlg_quantum_behavior(const char* game_id, int debug_flip_sign, double* table,
                                int32_t table_length) {
  if (nlg_status s = require(game_id && table, "game_id and table must not be NULL")) return s;
  return guarded([&] {
    auto setup = nlg::builtin_quantum(game_id, debug_flip_sign != 0);
    if (!setup) {
      set_error("unknown built-in quantum strategy '" + std::string(game_id) + "'");
      return NLG_ERR_UNKNOWN_ID;
    }
    const std::vector<double> behavior = nlg::behavior_table(setup->strategy, setup->game);
    if (table_length != static_cast<int32_t>(behavior.size())) {
      set_error("table buffer must hold " + std::to_string(behavior.size()) + " doubles");
      return NLG_ERR_INVALID_ARGUMENT;
    }
    for (std::size_t i = 0; i < behavior.size(); ++i) table[i] = behavior[i];
    return NLG_OK;
  });
}

nlg_status nlg_quantum_export(const char* game_id, char** out) {
  if (nlg_status s = require(game_id && out, "game_id and out must not be NULL")) return s;
  return guarded([&] {
    auto setup = nlg::builtin_quantum(game_id, false);
    if (!setup) {
      set_error("unknown built-in quantum strategy '" + std::string(game_id) + "'");
      return NLG_ERR_UNKNOWN_ID;
    }
    *out = copy_string(nlg::serialize_quantum_strategy(setup->strategy));
    return NLG_OK;
  });
}

nlg_status nlg_quantum_square_check(int debug_flip_sign, nlg_square_report* out) {
  if (nlg_status s = require(out != nullptr, "out must not be NULL")) return s;
  return guarded([&] {
    nlg::MerminPeresSquare square = nlg::mermin_peres_square();
    if (debug_flip_sign) square[0][0].sign = -square[0][0].sign;
    const nlg::SquareInvariantReport report = nlg::check_square_invariants(square);
    out->row_product_residual = report.row_product_residual;
    out->col_product_residual = report.col_product_residual;
    out->commutation_residual = report.commutation_residual;
    out->transpose_residual = report.transpose_residual;
    return NLG_OK;
  });
}

nlg_status nlg_quantum_extract_2xn(const char* game_id, int enforce_winning,
                                   int32_t* witness_alice, int32_t* witness_bob) {
  if (nlg_status s = require(game_id && witness_alice && witness_bob,
                             "game_id and witness buffers must not be NULL"))
    return s;
  return guarded([&] {
    auto setup = nlg::builtin_quantum(game_id, false);
    if (!setup) {
      set_error("unknown built-in quantum strategy '" + std::string(game_id) + "'");
      return NLG_ERR_UNKNOWN_ID;
    }
    nlg::ExtractionOptions options;
    options.require_winning = enforce_winning != 0;
    const nlg::DeterministicStrategy strategy =
        nlg::extract_classical_strategy(setup->strategy, setup->game, options);
    witness_alice[0] = strategy.alice[0];
    witness_alice[1] = strategy.alice[1];
    for (std::size_t i = 0; i < strategy.bob.size(); ++i) witness_bob[i] = strategy.bob[i];
    return NLG_OK;
  });
}

nlg_status nlg_noise_resistance_exact(const char* i_qm, const char* i_lv, const char* i_noise,
                                      char** out) {
  if (nlg_status s = require(i_qm && i_lv && i_noise && out, "arguments must not be NULL"))
    return s;
  return guarded([&] {
    const nlg::Rational result = nlg::noise_resistance(
        nlg::parse_fraction(i_qm), nlg::parse_fraction(i_lv), nlg::parse_fraction(i_noise));
    *out = copy_string(nlg::to_fraction_string(result));
    return NLG_OK;
  });
}

nlg_status nlg_noise_resistance(double i_qm, const char* i_lv, const char* i_noise, double* out) {
  if (nlg_status s = require(i_lv && i_noise && out, "arguments must not be NULL")) return s;
  return guarded([&] {
    *out = nlg::noise_resistance(i_qm, nlg::parse_fraction(i_lv), nlg::parse_fraction(i_noise));
    return NLG_OK;
  });
}

}  // extern "C"
