#pragma once

#include <span>
#include <vector>

#include "nlgames/game.hpp"
#include "nlgames/polytope.hpp"
#include "nlgames/rational.hpp"

namespace nlg {

/// A Bell expression: rational coefficients over (x, y, a, b) plus the bound
/// its value cannot exceed on local strategies.
struct BellExpression {
  PolytopeParams params;
  std::vector<Rational> coefficients;  // dense, (x, y, a, b) lexicographic
  Rational local_bound;

  std::size_t index(int x, int y, int a, int b) const;
  const Rational& coefficient(int x, int y, int a, int b) const;
  Rational& coefficient(int x, int y, int a, int b);
};

BellExpression zero_expression(const PolytopeParams& params, Rational bound = Rational(0));

enum class MsqInequalityForm {
  kFull8,        // all three game requirements over 8x8 outcomes
  kRestricted4,  // intersection agreement over the parity-completed 4x4 codes
  kAbstract4,    // same facet, rebuilt from modular arithmetic on 0..3 outputs
};

/// The Magic Square inequality with local bound 8, in the requested form.
/// Restricted4 and Abstract4 have identical coefficient tables.
BellExpression magic_square_inequality(MsqInequalityForm form);

/// The same expression embedded in a scenario with more outputs per party;
/// added coefficients are zero.
BellExpression padded_to_outputs(const BellExpression& expression, int n_a, int n_b);

/// Sum of coefficient(x, y, a(x), b(y)) over all input pairs, exactly.
Rational evaluate_on_strategy(const BellExpression& expression,
                              const DeterministicStrategy& strategy);

/// Sum of coefficient * Pr[a,b|x,y] over the whole table. The distribution
/// must be normalized per input pair within 1e-10.
double evaluate_on_distribution(const BellExpression& expression,
                                std::span<const double> distribution);

/// Value on the maximally mixed behavior Pr = 1/(n_A n_B), exactly.
Rational uniform_noise_value(const BellExpression& expression);

/// The fraction of unstructured noise that kills the violation:
/// (I_QM - I_LV) / (I_QM - I_noise). Throws std::domain_error when
/// I_QM == I_noise.
Rational noise_resistance(const Rational& i_qm, const Rational& i_lv, const Rational& i_noise);
double noise_resistance(double i_qm, const Rational& i_lv, const Rational& i_noise);

struct NoiseFigures {
  double i_qm = 0;
  Rational i_lv;
  Rational i_noise;
  double p_n = 0;
};

NoiseFigures noise_figures(double i_qm, const Rational& i_lv, const Rational& i_noise);

}  // namespace nlg
