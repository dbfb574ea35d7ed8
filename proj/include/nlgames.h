/* nlgames C API: exact analysis of bipartite nonlocal games.
 *
 * All functions return NLG_OK on success; on failure they return an error
 * code and leave a thread-local description readable via nlg_last_error().
 * Strings returned through char** parameters are heap-allocated and must be
 * released with nlg_string_free(). Handles are opaque and freed with their
 * matching *_free function. Handles are immutable after creation and may be
 * shared across threads.
 */

#ifndef NLGAMES_H
#define NLGAMES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NLG_API __declspec(dllexport)
#else
#define NLG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nlg_status {
  NLG_OK = 0,
  NLG_ERR_INVALID_ARGUMENT = 1,
  NLG_ERR_PARSE = 2,
  NLG_ERR_BUDGET_EXCEEDED = 3,
  NLG_ERR_PRECONDITION = 4,
  NLG_ERR_DEGENERATE = 5,
  NLG_ERR_UNKNOWN_ID = 6,
  NLG_ERR_INTERNAL = 7
} nlg_status;

typedef struct nlg_game nlg_game;
typedef struct nlg_expression nlg_expression;

/* 0 picks the library default of 100000000 enumerated strategies. */
#define NLG_DEFAULT_BUDGET 0u

NLG_API const char* nlg_version(void);
NLG_API const char* nlg_status_name(nlg_status status);
NLG_API const char* nlg_last_error(void);
NLG_API void nlg_string_free(char* text);

/* ---- games ---------------------------------------------------------- */

NLG_API nlg_status nlg_game_builtin(const char* id, nlg_game** out);
NLG_API nlg_status nlg_game_parse(const char* text, nlg_game** out);
NLG_API nlg_status nlg_game_serialize(const nlg_game* game, char** out);
NLG_API void nlg_game_free(nlg_game* game);
NLG_API nlg_status nlg_game_shape(const nlg_game* game, int32_t* m_a, int32_t* m_b,
                                  int32_t* n_a, int32_t* n_b);
NLG_API nlg_status nlg_game_wins(const nlg_game* game, int32_t x, int32_t y, int32_t a,
                                 int32_t b, int* out);
NLG_API nlg_status nlg_game_restrict_alice(const nlg_game* game, const int32_t* inputs,
                                           int32_t count, nlg_game** out);

/* n_A^m_A * n_B^m_B as a decimal string. */
NLG_API nlg_status nlg_count_deterministic(int32_t m_a, int32_t m_b, int32_t n_a, int32_t n_b,
                                           char** out);

/* ---- classical analysis --------------------------------------------- */

/* Exact game value as "p/q". witness_alice (length m_A) and witness_bob
 * (length m_B) receive the first maximizing strategy; either may be NULL. */
NLG_API nlg_status nlg_classical_value(const nlg_game* game, uint64_t budget, char** value,
                                       int32_t* witness_alice, int32_t* witness_bob);
NLG_API nlg_status nlg_classically_winnable(const nlg_game* game, uint64_t budget, int* out);

/* Pair-compatibility decision for games with two Alice inputs. On a winnable
 * game, witness_alice (length 2) and witness_bob (length m_B) receive the
 * winning assignment; either may be NULL. */
NLG_API nlg_status nlg_winnable_2xn(const nlg_game* game, int* out, int32_t* witness_alice,
                                    int32_t* witness_bob);

/* Input pairs won by the given deterministic strategy. */
NLG_API nlg_status nlg_strategy_winning_count(const nlg_game* game, const int32_t* alice,
                                              const int32_t* bob, int32_t* out);

/* ---- expressions and the local polytope ------------------------------ */

NLG_API nlg_status nlg_expression_builtin(const char* id, nlg_expression** out);
NLG_API nlg_status nlg_expression_parse(const char* text, nlg_expression** out);
NLG_API nlg_status nlg_expression_serialize(const nlg_expression* expression, char** out);
NLG_API void nlg_expression_free(nlg_expression* expression);
NLG_API nlg_status nlg_expression_shape(const nlg_expression* expression, int32_t* m_a,
                                        int32_t* m_b, int32_t* n_a, int32_t* n_b);
NLG_API nlg_status nlg_expression_bound(const nlg_expression* expression, char** out);
NLG_API nlg_status nlg_expression_pad_outputs(const nlg_expression* expression, int32_t n_a,
                                              int32_t n_b, nlg_expression** out);

NLG_API nlg_status nlg_cg_dimension(int32_t m_a, int32_t m_b, int32_t n_a, int32_t n_b,
                                    int64_t* out);

typedef struct nlg_facet_report {
  int is_facet;
  int64_t vertex_count; /* saturating vertices */
  int64_t rank;         /* -1 when the rank step was not reached */
  int64_t dimension;    /* no-signalling dimension d */
} nlg_facet_report;

/* enforce_proper_face = 0 disables the improper-face guard (negative-control
 * debugging only). */
NLG_API nlg_status nlg_facet_check(const nlg_expression* expression, uint64_t budget,
                                   int enforce_proper_face, nlg_facet_report* out);

/* The saturating-vertex matrix, one row of 0/1 coordinates per line. */
NLG_API nlg_status nlg_facet_matrix(const nlg_expression* expression, uint64_t budget,
                                    char** out);

/* Exact "p/q" value of the expression on uniform noise Pr = 1/(n_A n_B). */
NLG_API nlg_status nlg_uniform_noise_value(const nlg_expression* expression, char** out);

/* ---- quantum strategies ---------------------------------------------- */

/* Winning probability of the built-in strategy for a built-in game id.
 * terms, when non-NULL, must hold m_A * m_B doubles (x-major). */
NLG_API nlg_status nlg_quantum_value(const char* game_id, int debug_flip_sign,
                                     double* probability, double* terms, int32_t terms_length);

/* Behavior table Pr[a,b|x,y] of the built-in strategy, (x, y, a, b) order,
 * length m_A * m_B * n_A * n_B. */
NLG_API nlg_status nlg_quantum_behavior(const char* game_id, int debug_flip_sign,
                                        double* table, int32_t table_length);

/* Strategy document: amplitudes and projectors at 17 significant digits. */
NLG_API nlg_status nlg_quantum_export(const char* game_id, char** out);

/* Residuals of the observable-table identities; all should be ~0 unless
 * debug_flip_sign breaks them. */
typedef struct nlg_square_report {
  double row_product_residual;
  double col_product_residual;
  double commutation_residual;
  double transpose_residual;
} nlg_square_report;

NLG_API nlg_status nlg_quantum_square_check(int debug_flip_sign, nlg_square_report* out);

/* Classical strategy extracted from the built-in quantum strategy of a
 * two-Alice-input game id. witness_alice needs length 2, witness_bob length
 * m_B. enforce_winning = 0 skips the winning-probability precondition. */
NLG_API nlg_status nlg_quantum_extract_2xn(const char* game_id, int enforce_winning,
                                           int32_t* witness_alice, int32_t* witness_bob);

/* ---- noise ------------------------------------------------------------ */

/* Exact p_n = (I_QM - I_LV) / (I_QM - I_noise); arguments are "p/q". */
NLG_API nlg_status nlg_noise_resistance_exact(const char* i_qm, const char* i_lv,
                                              const char* i_noise, char** out);
NLG_API nlg_status nlg_noise_resistance(double i_qm, const char* i_lv, const char* i_noise,
                                        double* out);

#ifdef __cplusplus
}
#endif

#endif /* NLGAMES_H */
