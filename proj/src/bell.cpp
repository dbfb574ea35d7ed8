#include "nlgames/bell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlg {

std::size_t BellExpression::index(int x, int y, int a, int b) const {
  if (x < 0 || x >= params.m_a || y < 0 || y >= params.m_b || a < 0 || a >= params.n_a ||
      b < 0 || b >= params.n_b) {
    throw std::out_of_range("expression index out of range");
  }
  return ((static_cast<std::size_t>(x) * params.m_b + y) * params.n_a + a) * params.n_b + b;
}

const Rational& BellExpression::coefficient(int x, int y, int a, int b) const {
  return coefficients[index(x, y, a, b)];
}

Rational& BellExpression::coefficient(int x, int y, int a, int b) {
  return coefficients[index(x, y, a, b)];
}

BellExpression zero_expression(const PolytopeParams& params, Rational bound) {
  const std::size_t size =
      static_cast<std::size_t>(params.m_a) * params.m_b * params.n_a * params.n_b;
  return BellExpression{params, std::vector<Rational>(size, Rational(0)), std::move(bound)};
}

namespace {

BellExpression indicator_expression(const GameRelation& game, Rational bound) {
  BellExpression expression = zero_expression(PolytopeParams::from_game(game), std::move(bound));
  for (int x = 0; x < game.m_a(); ++x)
    for (int y = 0; y < game.m_b(); ++y)
      for (int a = 0; a < game.n_a(); ++a)
        for (int b = 0; b < game.n_b(); ++b)
          if (game.wins(x, y, a, b)) expression.coefficient(x, y, a, b) = 1;
  return expression;
}

// Bit extractions on quaternary outputs, written with integer arithmetic only:
// bit 0 is ((v - v mod 2) / 2) mod 2, bit 1 is v mod 2, bit 2 is
// ((v + v mod 2) / 2 + offset) mod 2 with offset 0 for Alice and 1 for Bob.
int abstract_bit(int value, int position, int completion_offset) {
  switch (position) {
    case 0: return ((value - value % 2) / 2) % 2;
    case 1: return value % 2;
    case 2: return ((value + value % 2) / 2 + completion_offset) % 2;
    default: throw std::invalid_argument("bit position must be 0, 1 or 2");
  }
}

BellExpression abstract_form() {
  BellExpression expression = zero_expression(PolytopeParams{3, 3, 4, 4}, Rational(8));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          if (abstract_bit(a, y, 0) == abstract_bit(b, x, 1))
            expression.coefficient(x, y, a, b) = 1;
  return expression;
}

}  // namespace

BellExpression magic_square_inequality(MsqInequalityForm form) {
  switch (form) {
    case MsqInequalityForm::kFull8:
      return indicator_expression(magic_square_game(MsqEncoding::kFull8), Rational(8));
    case MsqInequalityForm::kRestricted4:
      return indicator_expression(magic_square_game(MsqEncoding::kRestricted4), Rational(8));
    case MsqInequalityForm::kAbstract4:
      return abstract_form();
  }
  throw std::invalid_argument("unknown inequality form");
}

BellExpression padded_to_outputs(const BellExpression& expression, int n_a, int n_b) {
  if (n_a < expression.params.n_a || n_b < expression.params.n_b) {
    throw std::invalid_argument("padding cannot shrink the output sets");
  }
  BellExpression padded = zero_expression(
      PolytopeParams{expression.params.m_a, expression.params.m_b, n_a, n_b},
      expression.local_bound);
  for (int x = 0; x < expression.params.m_a; ++x)
    for (int y = 0; y < expression.params.m_b; ++y)
      for (int a = 0; a < expression.params.n_a; ++a)
        for (int b = 0; b < expression.params.n_b; ++b)
          padded.coefficient(x, y, a, b) = expression.coefficient(x, y, a, b);
  return padded;
}

Rational evaluate_on_strategy(const BellExpression& expression,
                              const DeterministicStrategy& strategy) {
  if (static_cast<int>(strategy.alice.size()) != expression.params.m_a ||
      static_cast<int>(strategy.bob.size()) != expression.params.m_b) {
    throw std::invalid_argument("strategy shape does not match expression inputs");
  }
  Rational total(0);
  for (int x = 0; x < expression.params.m_a; ++x)
    for (int y = 0; y < expression.params.m_b; ++y)
      total += expression.coefficient(x, y, strategy.alice[x], strategy.bob[y]);
  return total;
}

double evaluate_on_distribution(const BellExpression& expression,
                                std::span<const double> distribution) {
  const auto& p = expression.params;
  const std::size_t size = static_cast<std::size_t>(p.m_a) * p.m_b * p.n_a * p.n_b;
  if (distribution.size() != size) {
    throw std::invalid_argument("distribution has " + std::to_string(distribution.size()) +
                                " entries, expected " + std::to_string(size));
  }
  for (int x = 0; x < p.m_a; ++x) {
    for (int y = 0; y < p.m_b; ++y) {
      double sum = 0;
      for (int a = 0; a < p.n_a; ++a)
        for (int b = 0; b < p.n_b; ++b)
          sum += distribution[expression.index(x, y, a, b)];
      if (std::abs(sum - 1.0) > 1e-10) {
        throw std::invalid_argument("distribution not normalized at inputs (" +
                                    std::to_string(x) + ", " + std::to_string(y) +
                                    "): sums to " + std::to_string(sum));
      }
    }
  }
  double total = 0;
  for (int x = 0; x < p.m_a; ++x)
    for (int y = 0; y < p.m_b; ++y)
      for (int a = 0; a < p.n_a; ++a)
        for (int b = 0; b < p.n_b; ++b)
          total += expression.coefficient(x, y, a, b).get_d() *
                   distribution[expression.index(x, y, a, b)];
  return total;
}

Rational uniform_noise_value(const BellExpression& expression) {
  Rational total(0);
  for (const Rational& coefficient : expression.coefficients) total += coefficient;
  Rational cell(1, static_cast<unsigned long>(expression.params.n_a) * expression.params.n_b);
  cell.canonicalize();
  return total * cell;
}

Rational noise_resistance(const Rational& i_qm, const Rational& i_lv, const Rational& i_noise) {
  if (i_qm == i_noise) {
    throw std::domain_error("noise resistance undefined when I_QM equals I_noise");
  }
  return Rational(i_qm - i_lv) / Rational(i_qm - i_noise);
}

double noise_resistance(double i_qm, const Rational& i_lv, const Rational& i_noise) {
  if (i_qm == i_noise.get_d()) {
    throw std::domain_error("noise resistance undefined when I_QM equals I_noise");
  }
  return (i_qm - i_lv.get_d()) / (i_qm - i_noise.get_d());
}

NoiseFigures noise_figures(double i_qm, const Rational& i_lv, const Rational& i_noise) {
  return NoiseFigures{i_qm, i_lv, i_noise, noise_resistance(i_qm, i_lv, i_noise)};
}

}  // namespace nlg
