#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nlgames/bell.hpp"
#include "nlgames/builtins.hpp"
#include "nlgames/errors.hpp"
#include "nlgames/quantum.hpp"

using namespace nlg;

namespace {

CMatrix reshaped(const StateVector& state) {
  CMatrix m(state.dim_a, state.dim_b);
  for (int a = 0; a < state.dim_a; ++a)
    for (int b = 0; b < state.dim_b; ++b)
      m(a, b) = state.amplitudes(static_cast<Eigen::Index>(a) * state.dim_b + b);
  return m;
}

CMatrix random_unitary(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = Cplx(gauss(rng), gauss(rng));
  return Eigen::HouseholderQR<CMatrix>(m).householderQ();
}

CMatrix random_symmetric_involution(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = gauss(rng);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
  Eigen::VectorXd signs(dim);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < dim; ++i) signs(i) = coin(rng) ? 1.0 : -1.0;
  return (q * signs.asDiagonal() * q.transpose()).cast<Cplx>();
}

}  // namespace

TEST_CASE("observable table identities hold exactly") {
  const SquareInvariantReport report = check_square_invariants(mermin_peres_square());
  CHECK(report.row_product_residual <= 1e-12);
  CHECK(report.col_product_residual <= 1e-12);
  CHECK(report.commutation_residual <= 1e-12);
  CHECK(report.transpose_residual <= 1e-12);
}

TEST_CASE("a flipped sign breaks the product identities") {
  MerminPeresSquare square = mermin_peres_square();
  square[0][0].sign = -square[0][0].sign;
  const SquareInvariantReport report = check_square_invariants(square);
  CHECK(report.row_product_residual > 1.0);
  CHECK(report.col_product_residual > 1.0);
  CHECK(report.commutation_residual <= 1e-12);
}

TEST_CASE("joint measurement of a row keeps even-parity outcomes only") {
  const MerminPeresSquare square = mermin_peres_square();
  const ProjectiveMeasurement row0 = joint_measurement(square[0]);
  CHECK(row0.outcomes().size() == 4);
  for (const auto& outcome : row0.outcomes()) {
    const int t0 = (outcome.label >> 2) & 1, t1 = (outcome.label >> 1) & 1,
              t2 = outcome.label & 1;
    CHECK((t0 ^ t1 ^ t2) == 0);
  }
}

TEST_CASE("joint measurement of a column keeps odd-parity outcomes only") {
  const MerminPeresSquare square = mermin_peres_square();
  const std::array<SignedPauliString, 3> column{square[0][1], square[1][1], square[2][1]};
  const ProjectiveMeasurement col1 = joint_measurement(column);
  CHECK(col1.outcomes().size() == 4);
  for (const auto& outcome : col1.outcomes()) {
    const int t0 = (outcome.label >> 2) & 1, t1 = (outcome.label >> 1) & 1,
              t2 = outcome.label & 1;
    CHECK((t0 ^ t1 ^ t2) == 1);
  }
}

TEST_CASE("a single observable splits into two rank-2 projectors") {
  const SignedPauliString z_first{1, {Pauli::kZ, Pauli::kI}};
  const ProjectiveMeasurement measurement = joint_measurement(std::array{z_first});
  REQUIRE(measurement.outcomes().size() == 2);
  for (const auto& outcome : measurement.outcomes()) {
    CHECK(outcome.projector.trace().real() == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("non-commuting observables are rejected") {
  const std::array<SignedPauliString, 2> pair{SignedPauliString{1, {Pauli::kZ, Pauli::kI}},
                                              SignedPauliString{1, {Pauli::kX, Pauli::kI}}};
  CHECK_THROWS_AS(joint_measurement(pair), std::invalid_argument);
}

TEST_CASE("projective measurement validation") {
  const CMatrix identity = CMatrix::Identity(2, 2);
  SUBCASE("non-idempotent") {
    CHECK_THROWS_AS(ProjectiveMeasurement({{0, 0.5 * identity}, {1, 0.5 * identity}}),
                    std::invalid_argument);
  }
  SUBCASE("incomplete") {
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    CHECK_THROWS_AS(ProjectiveMeasurement({{0, p0}}), std::invalid_argument);
  }
  SUBCASE("overlapping") {
    CMatrix p0 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    CHECK_THROWS_AS(ProjectiveMeasurement({{0, p0}, {1, identity}}), std::invalid_argument);
  }
  SUBCASE("duplicate labels") {
    CMatrix p0 = CMatrix::Zero(2, 2), p1 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    CHECK_THROWS_AS(ProjectiveMeasurement({{0, p0}, {0, p1}}), std::invalid_argument);
  }
  SUBCASE("valid computational measurement") {
    CMatrix p0 = CMatrix::Zero(2, 2), p1 = CMatrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    CHECK_NOTHROW(ProjectiveMeasurement({{0, p0}, {1, p1}}));
  }
}

TEST_CASE("state vectors must be normalized") {
  CVector bad = CVector::Zero(4);
  bad(0) = 0.5;
  CHECK_THROWS_AS(StateVector(bad, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(CVector::Ones(4) * 0.5, 3, 2), std::invalid_argument);
}

TEST_CASE("magic square strategy wins every input pair") {
  const QuantumStrategy strategy = magic_square_quantum_strategy();
  const GameRelation game = magic_square_game(MsqEncoding::kRestricted4);
  CHECK(strategy.state.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> terms = winning_probability_terms(strategy, game);
  REQUIRE(terms.size() == 9);
  for (double term : terms) CHECK(term == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(winning_probability(strategy, game) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("full-encoding strategy wins the full game too") {
  const QuantumStrategy strategy = magic_square_quantum_strategy(MsqEncoding::kFull8);
  const GameRelation game = magic_square_game(MsqEncoding::kFull8);
  CHECK(winning_probability(strategy, game) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("flipped sign spoils the winning probability") {
  const QuantumStrategy strategy =
      magic_square_quantum_strategy(MsqEncoding::kRestricted4, true);
  const GameRelation game = magic_square_game(MsqEncoding::kRestricted4);
  CHECK(winning_probability(strategy, game) < 0.999);
}

TEST_CASE("alice outcomes are uniform on the entangled state") {
  const QuantumStrategy strategy = magic_square_quantum_strategy();
  const GameRelation game = magic_square_game(MsqEncoding::kRestricted4);
  const std::vector<double> behavior = behavior_table(strategy, game);
  for (int a = 0; a < 4; ++a) {
    double marginal = 0;
    for (int b = 0; b < 4; ++b) marginal += behavior[static_cast<std::size_t>(a) * 4 + b];
    CHECK(marginal == doctest::Approx(0.25).epsilon(1e-9));
  }
}

TEST_CASE("the quantum behavior reaches the algebraic maximum 9") {
  const QuantumStrategy strategy = magic_square_quantum_strategy();
  const GameRelation game = magic_square_game(MsqEncoding::kRestricted4);
  const BellExpression expression = magic_square_inequality(MsqInequalityForm::kRestricted4);
  const double value = evaluate_on_distribution(expression, behavior_table(strategy, game));
  CHECK(value == doctest::Approx(9.0).epsilon(1e-9));
}

TEST_CASE("chsh strategy reaches (2 + sqrt 2) / 4") {
  const QuantumStrategy strategy = chsh_quantum_strategy();
  const GameRelation game = chsh_game();
  const double expected = (2.0 + std::sqrt(2.0)) / 4.0;
  const std::vector<double> terms = winning_probability_terms(strategy, game);
  for (double term : terms) CHECK(term == doctest::Approx(expected).epsilon(1e-9));
  CHECK(winning_probability(strategy, game) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("identity-only measurements win nothing on an empty relation") {
  const GameRelation empty =
      GameRelation::from_predicate(1, 1, 2, 2, [](int, int, int, int) { return false; });
  CVector amps = CVector::Zero(4);
  amps(0) = 1.0;
  StateVector state(amps, 2, 2);
  const CMatrix identity = CMatrix::Identity(2, 2);
  std::vector<ProjectiveMeasurement> alice{ProjectiveMeasurement({{0, identity}})};
  std::vector<ProjectiveMeasurement> bob{ProjectiveMeasurement({{0, identity}})};
  const QuantumStrategy strategy{state, alice, bob};
  CHECK(winning_probability(strategy, empty) == 0.0);
}

TEST_CASE("dimension and label mismatches are rejected") {
  const QuantumStrategy strategy = magic_square_quantum_strategy();
  CHECK_THROWS_AS(winning_probability(strategy, chsh_game()), std::invalid_argument);
  const GameRelation small_outputs =
      GameRelation::from_predicate(3, 3, 2, 2, [](int, int, int, int) { return true; });
  CHECK_THROWS_AS(winning_probability(strategy, small_outputs), std::invalid_argument);
}

TEST_CASE("winning probability is invariant under local unitaries") {
  std::mt19937 rng(31415);
  // The sign-flipped strategy gives a value strictly inside (0, 1), which
  // makes the invariance check non-trivial.
  const QuantumStrategy strategy =
      magic_square_quantum_strategy(MsqEncoding::kRestricted4, true);
  const GameRelation game = magic_square_game(MsqEncoding::kRestricted4);
  const double reference = winning_probability(strategy, game);
  CHECK(reference > 0.5);
  CHECK(reference < 0.999);

  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix u_a = random_unitary(4, rng);
    const CMatrix u_b = random_unitary(4, rng);
    const CMatrix joint = kron(u_a, u_b);
    StateVector rotated(joint * strategy.state.amplitudes, 4, 4);

    std::vector<ProjectiveMeasurement> alice;
    for (const auto& measurement : strategy.alice) {
      std::vector<ProjectiveMeasurement::Outcome> outcomes;
      for (const auto& o : measurement.outcomes())
        outcomes.push_back({o.label, u_a * o.projector * u_a.adjoint()});
      alice.emplace_back(std::move(outcomes));
    }
    std::vector<ProjectiveMeasurement> bob;
    for (const auto& measurement : strategy.bob) {
      std::vector<ProjectiveMeasurement::Outcome> outcomes;
      for (const auto& o : measurement.outcomes())
        outcomes.push_back({o.label, u_b * o.projector * u_b.adjoint()});
      bob.emplace_back(std::move(outcomes));
    }
    const QuantumStrategy conjugated{rotated, std::move(alice), std::move(bob)};
    CHECK(winning_probability(conjugated, game) == doctest::Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("transposed-observable correlation on the paired state") {
  std::mt19937 rng(2718);
  const GameRelation equality =
      GameRelation::from_predicate(1, 1, 2, 2, [](int, int, int a, int b) { return a == b; });
  CVector amps = CVector::Zero(16);
  for (int i = 0; i < 4; ++i) amps(i * 4 + i) = 0.5;
  const StateVector state(amps, 4, 4);

  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix observable = random_symmetric_involution(4, rng);
    const ProjectiveMeasurement measurement = measurement_from_involution(observable);
    if (measurement.outcomes().size() != 2) continue;  // degenerate sign draw
    const QuantumStrategy strategy{state, {measurement}, {measurement}};
    CHECK(winning_probability(strategy, equality) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("alice residual norms resolve the state") {
  const QuantumStrategy strategy = magic_square_quantum_strategy();
  const CMatrix psi = reshaped(strategy.state);
  for (const auto& measurement : strategy.alice) {
    double total = 0;
    for (const auto& outcome : measurement.outcomes()) {
      total += (outcome.projector * psi).squaredNorm();
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("extraction recovers a perfect classical strategy for the 2x3 sub-game") {
  const auto setup = builtin_quantum("magic-square-r4-2x3");
  REQUIRE(setup.has_value());
  CHECK(winning_probability(setup->strategy, setup->game) == doctest::Approx(1.0).epsilon(1e-9));

  const DeterministicStrategy extracted =
      extract_classical_strategy(setup->strategy, setup->game);
  CHECK(strategy_winning_count(setup->game, extracted) == 6);
}

TEST_CASE("extraction on a deterministic product strategy reproduces its outputs") {
  const GameRelation game = GameRelation::from_predicate(
      2, 1, 2, 2, [](int, int, int a, int b) { return a == 0 && b == 0; });
  CVector amps = CVector::Zero(4);
  amps(0) = 1.0;
  const StateVector state(amps, 2, 2);
  CMatrix p0 = CMatrix::Zero(2, 2), p1 = CMatrix::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  const ProjectiveMeasurement computational({{0, p0}, {1, p1}});
  const QuantumStrategy strategy{state, {computational, computational}, {computational}};
  REQUIRE(winning_probability(strategy, game) == doctest::Approx(1.0).epsilon(1e-12));

  const DeterministicStrategy extracted = extract_classical_strategy(strategy, game);
  CHECK(extracted.alice == std::vector<int>{0, 0});
  CHECK(extracted.bob == std::vector<int>{0});
}

TEST_CASE("extraction enforces the winning precondition") {
  const QuantumStrategy strategy = chsh_quantum_strategy();
  const GameRelation game = chsh_game();
  CHECK_THROWS_AS(extract_classical_strategy(strategy, game), PreconditionError);

  ExtractionOptions bypass;
  bypass.require_winning = false;
  const DeterministicStrategy extracted = extract_classical_strategy(strategy, game, bypass);
  CHECK(strategy_winning_count(game, extracted) <= 3);
}

TEST_CASE("an absurd overlap threshold trips the extraction error") {
  const auto setup = builtin_quantum("magic-square-r4-2x3");
  REQUIRE(setup.has_value());
  ExtractionOptions options;
  options.epsilon = 0.6;
  CHECK_THROWS_AS(extract_classical_strategy(setup->strategy, setup->game, options),
                  ExtractionError);
}

TEST_CASE("extraction requires two alice inputs") {
  const QuantumStrategy strategy = magic_square_quantum_strategy();
  const GameRelation game = magic_square_game(MsqEncoding::kRestricted4);
  CHECK_THROWS_AS(extract_classical_strategy(strategy, game), std::invalid_argument);
}
