#include "nlgames/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nlgames/errors.hpp"

namespace nlg {

namespace {

constexpr double kProjectorTolerance = 1e-10;
constexpr double kCommutationTolerance = 1e-10;
constexpr double kNormTolerance = 1e-12;
constexpr double kImaginaryResidueTolerance = 1e-10;
constexpr double kZeroProjectorThreshold = 1e-9;

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// The state viewed as a dim_a x dim_b coefficient matrix, Alice's index on rows.
CMatrix state_matrix(const StateVector& state) {
  CMatrix m(state.dim_a, state.dim_b);
  for (int a = 0; a < state.dim_a; ++a)
    for (int b = 0; b < state.dim_b; ++b)
      m(a, b) = state.amplitudes(static_cast<Eigen::Index>(a) * state.dim_b + b);
  return m;
}

// <psi| P (x) Q |psi> for the reshaped state.
Cplx pair_expectation(const CMatrix& psi, const CMatrix& p, const CMatrix& q) {
  return (psi.conjugate().cwiseProduct(p * psi * q.transpose())).sum();
}

double real_expectation(const CMatrix& psi, const CMatrix& p, const CMatrix& q) {
  const Cplx value = pair_expectation(psi, p, q);
  if (std::abs(value.imag()) > kImaginaryResidueTolerance) {
    throw std::logic_error("expectation has imaginary residue " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

void validate_strategy_against_game(const QuantumStrategy& strategy, const GameRelation& game) {
  if (static_cast<int>(strategy.alice.size()) != game.m_a() ||
      static_cast<int>(strategy.bob.size()) != game.m_b()) {
    throw std::invalid_argument("measurement counts do not match game inputs");
  }
  for (const auto& measurement : strategy.alice) {
    if (measurement.dimension() != strategy.state.dim_a) {
      throw std::invalid_argument("alice measurement dimension mismatch");
    }
    for (const auto& outcome : measurement.outcomes()) {
      if (outcome.label < 0 || outcome.label >= game.n_a()) {
        throw std::invalid_argument("alice outcome label " + std::to_string(outcome.label) +
                                    " outside the game's output set");
      }
    }
  }
  for (const auto& measurement : strategy.bob) {
    if (measurement.dimension() != strategy.state.dim_b) {
      throw std::invalid_argument("bob measurement dimension mismatch");
    }
    for (const auto& outcome : measurement.outcomes()) {
      if (outcome.label < 0 || outcome.label >= game.n_b()) {
        throw std::invalid_argument("bob outcome label " + std::to_string(outcome.label) +
                                    " outside the game's output set");
      }
    }
  }
}

}  // namespace

CMatrix kron(const CMatrix& left, const CMatrix& right) {
  CMatrix out(left.rows() * right.rows(), left.cols() * right.cols());
  for (Eigen::Index i = 0; i < left.rows(); ++i)
    for (Eigen::Index j = 0; j < left.cols(); ++j)
      out.block(i * right.rows(), j * right.cols(), right.rows(), right.cols()) =
          left(i, j) * right;
  return out;
}

CMatrix pauli_matrix(Pauli letter) {
  CMatrix m(2, 2);
  const Cplx i(0, 1);
  switch (letter) {
    case Pauli::kI: m << 1, 0, 0, 1; break;
    case Pauli::kX: m << 0, 1, 1, 0; break;
    case Pauli::kY: m << 0, -i, i, 0; break;
    case Pauli::kZ: m << 1, 0, 0, -1; break;
  }
  return m;
}

CMatrix SignedPauliString::realize() const {
  return static_cast<double>(sign) * kron(pauli_matrix(letters[0]), pauli_matrix(letters[1]));
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Outcome> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw std::invalid_argument("measurement needs at least one outcome");
  const Eigen::Index dim = outcomes_.front().projector.rows();
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < outcomes_.size(); ++i) {
    const CMatrix& p = outcomes_[i].projector;
    if (p.rows() != dim || p.cols() != dim) {
      throw std::invalid_argument("projectors must be square and share one dimension");
    }
    if (max_abs(p - p.adjoint()) > kProjectorTolerance) {
      throw std::invalid_argument("projector is not Hermitian");
    }
    if (max_abs(p * p - p) > kProjectorTolerance) {
      throw std::invalid_argument("projector is not idempotent");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (outcomes_[i].label == outcomes_[j].label) {
        throw std::invalid_argument("duplicate outcome label " +
                                    std::to_string(outcomes_[i].label));
      }
      if (max_abs(p * outcomes_[j].projector) > kProjectorTolerance) {
        throw std::invalid_argument("projectors are not mutually orthogonal");
      }
    }
    sum += p;
  }
  if (max_abs(sum - CMatrix::Identity(dim, dim)) > kProjectorTolerance) {
    throw std::invalid_argument("projectors do not resolve the identity");
  }
}

ProjectiveMeasurement ProjectiveMeasurement::relabeled(
    const std::function<int(int)>& map) const {
  std::vector<Outcome> mapped;
  mapped.reserve(outcomes_.size());
  for (const auto& outcome : outcomes_) {
    mapped.push_back(Outcome{map(outcome.label), outcome.projector});
  }
  return ProjectiveMeasurement(std::move(mapped));
}

StateVector::StateVector(CVector amps, int da, int db)
    : amplitudes(std::move(amps)), dim_a(da), dim_b(db) {
  if (dim_a < 1 || dim_b < 1 ||
      amplitudes.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw std::invalid_argument("state length must equal dim_a * dim_b");
  }
  if (std::abs(amplitudes.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

MerminPeresSquare mermin_peres_square() {
  using P = Pauli;
  return MerminPeresSquare{{
      {{{1, {P::kI, P::kZ}}, {1, {P::kZ, P::kI}}, {1, {P::kZ, P::kZ}}}},
      {{{1, {P::kX, P::kI}}, {1, {P::kI, P::kX}}, {1, {P::kX, P::kX}}}},
      {{{-1, {P::kX, P::kZ}}, {-1, {P::kZ, P::kX}}, {1, {P::kY, P::kY}}}},
  }};
}

SquareInvariantReport check_square_invariants(const MerminPeresSquare& square) {
  SquareInvariantReport report;
  const CMatrix identity = CMatrix::Identity(4, 4);
  std::array<std::array<CMatrix, 3>, 3> realized;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) realized[x][y] = square[x][y].realize();

  for (int x = 0; x < 3; ++x) {
    const CMatrix product = realized[x][0] * realized[x][1] * realized[x][2];
    report.row_product_residual =
        std::max(report.row_product_residual, max_abs(product - identity));
    for (int y = 0; y < 3; ++y)
      for (int y2 = y + 1; y2 < 3; ++y2)
        report.commutation_residual =
            std::max(report.commutation_residual,
                     max_abs(realized[x][y] * realized[x][y2] - realized[x][y2] * realized[x][y]));
  }
  for (int y = 0; y < 3; ++y) {
    const CMatrix product = realized[0][y] * realized[1][y] * realized[2][y];
    report.col_product_residual =
        std::max(report.col_product_residual, max_abs(product + identity));
    for (int x = 0; x < 3; ++x)
      for (int x2 = x + 1; x2 < 3; ++x2)
        report.commutation_residual =
            std::max(report.commutation_residual,
                     max_abs(realized[x][y] * realized[x2][y] - realized[x2][y] * realized[x][y]));
  }
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      report.transpose_residual = std::max(
          report.transpose_residual, max_abs(realized[x][y] - realized[x][y].transpose()));
  return report;
}

ProjectiveMeasurement joint_measurement(std::span<const SignedPauliString> observables) {
  if (observables.empty()) throw std::invalid_argument("need at least one observable");
  std::vector<CMatrix> realized;
  realized.reserve(observables.size());
  for (const auto& observable : observables) realized.push_back(observable.realize());
  const Eigen::Index dim = realized.front().rows();
  for (std::size_t i = 0; i < realized.size(); ++i) {
    for (std::size_t j = i + 1; j < realized.size(); ++j) {
      if (max_abs(realized[i] * realized[j] - realized[j] * realized[i]) >
          kCommutationTolerance) {
        throw std::invalid_argument("observables " + std::to_string(i) + " and " +
                                    std::to_string(j) + " do not commute");
      }
    }
  }
  const CMatrix identity = CMatrix::Identity(dim, dim);
  const int k = static_cast<int>(realized.size());
  std::vector<ProjectiveMeasurement::Outcome> outcomes;
  for (int pattern = 0; pattern < (1 << k); ++pattern) {
    CMatrix projector = identity;
    for (int i = 0; i < k; ++i) {
      const int bit = (pattern >> (k - 1 - i)) & 1;  // t0 is the top bit
      const double sign = bit == 0 ? 1.0 : -1.0;
      projector = projector * ((identity + sign * realized[i]) / 2.0);
    }
    if (max_abs(projector) < kZeroProjectorThreshold) continue;
    outcomes.push_back(ProjectiveMeasurement::Outcome{pattern, projector});
  }
  return ProjectiveMeasurement(std::move(outcomes));
}

ProjectiveMeasurement measurement_from_involution(const CMatrix& observable) {
  if (observable.rows() != observable.cols()) {
    throw std::invalid_argument("observable must be square");
  }
  const Eigen::Index dim = observable.rows();
  const CMatrix identity = CMatrix::Identity(dim, dim);
  if (max_abs(observable - observable.adjoint()) > kProjectorTolerance ||
      max_abs(observable * observable - identity) > kProjectorTolerance) {
    throw std::invalid_argument("observable must be a Hermitian involution");
  }
  std::vector<ProjectiveMeasurement::Outcome> outcomes;
  const CMatrix plus = (identity + observable) / 2.0;
  const CMatrix minus = (identity - observable) / 2.0;
  if (max_abs(plus) >= kZeroProjectorThreshold) outcomes.push_back({0, plus});
  if (max_abs(minus) >= kZeroProjectorThreshold) outcomes.push_back({1, minus});
  return ProjectiveMeasurement(std::move(outcomes));
}

QuantumStrategy magic_square_quantum_strategy(MsqEncoding encoding, bool debug_flip_sign) {
  MerminPeresSquare square = mermin_peres_square();
  if (debug_flip_sign) square[0][0].sign = -square[0][0].sign;

  // |Phi+> (x) |Phi+> with pairing A1-B1, A2-B2 is maximally entangled across
  // the Alice/Bob cut: amplitude 1/2 exactly where both four-dimensional
  // indices coincide.
  CVector amplitudes = CVector::Zero(16);
  for (int a = 0; a < 4; ++a) amplitudes(a * 4 + a) = 0.5;
  StateVector state(std::move(amplitudes), 4, 4);

  const auto to_game_label = [encoding](int pattern) {
    return encoding == MsqEncoding::kRestricted4 ? pattern >> 1 : pattern;
  };

  std::vector<ProjectiveMeasurement> alice;
  std::vector<ProjectiveMeasurement> bob;
  for (int x = 0; x < 3; ++x) {
    alice.push_back(joint_measurement(square[x]).relabeled(to_game_label));
  }
  for (int y = 0; y < 3; ++y) {
    const std::array<SignedPauliString, 3> column{square[0][y], square[1][y], square[2][y]};
    bob.push_back(joint_measurement(column).relabeled(to_game_label));
  }
  return QuantumStrategy{std::move(state), std::move(alice), std::move(bob)};
}

QuantumStrategy chsh_quantum_strategy() {
  CVector amplitudes = CVector::Zero(4);
  amplitudes(0) = amplitudes(3) = 1.0 / std::sqrt(2.0);
  StateVector state(std::move(amplitudes), 2, 2);

  const CMatrix z = pauli_matrix(Pauli::kZ);
  const CMatrix x = pauli_matrix(Pauli::kX);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<ProjectiveMeasurement> alice;
  alice.push_back(measurement_from_involution(z));
  alice.push_back(measurement_from_involution(x));
  std::vector<ProjectiveMeasurement> bob;
  bob.push_back(measurement_from_involution((z + x) * inv_sqrt2));
  bob.push_back(measurement_from_involution((z - x) * inv_sqrt2));
  return QuantumStrategy{std::move(state), std::move(alice), std::move(bob)};
}

QuantumStrategy restrict_alice_inputs(const QuantumStrategy& strategy,
                                      std::span<const int> inputs) {
  if (inputs.empty()) throw std::invalid_argument("need at least one Alice input");
  std::vector<ProjectiveMeasurement> alice;
  for (int x : inputs) {
    if (x < 0 || x >= static_cast<int>(strategy.alice.size())) {
      throw std::invalid_argument("alice input " + std::to_string(x) + " out of range");
    }
    alice.push_back(strategy.alice[x]);
  }
  return QuantumStrategy{strategy.state, std::move(alice), strategy.bob};
}

std::vector<double> winning_probability_terms(const QuantumStrategy& strategy,
                                              const GameRelation& game) {
  validate_strategy_against_game(strategy, game);
  const CMatrix psi = state_matrix(strategy.state);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(game.m_a()) * game.m_b());
  for (int x = 0; x < game.m_a(); ++x) {
    for (int y = 0; y < game.m_b(); ++y) {
      double term = 0;
      for (const auto& pa : strategy.alice[x].outcomes()) {
        for (const auto& pb : strategy.bob[y].outcomes()) {
          if (game.wins(x, y, pa.label, pb.label)) {
            term += real_expectation(psi, pa.projector, pb.projector);
          }
        }
      }
      terms.push_back(term);
    }
  }
  return terms;
}

double winning_probability(const QuantumStrategy& strategy, const GameRelation& game) {
  const std::vector<double> terms = winning_probability_terms(strategy, game);
  double total = 0;
  for (double term : terms) total += term;
  return total / static_cast<double>(terms.size());
}

std::vector<double> behavior_table(const QuantumStrategy& strategy, const GameRelation& game) {
  validate_strategy_against_game(strategy, game);
  const CMatrix psi = state_matrix(strategy.state);
  std::vector<double> table(game.table_size(), 0.0);
  const auto index = [&game](int x, int y, int a, int b) {
    return ((static_cast<std::size_t>(x) * game.m_b() + y) * game.n_a() + a) * game.n_b() + b;
  };
  for (int x = 0; x < game.m_a(); ++x)
    for (int y = 0; y < game.m_b(); ++y)
      for (const auto& pa : strategy.alice[x].outcomes())
        for (const auto& pb : strategy.bob[y].outcomes())
          table[index(x, y, pa.label, pb.label)] =
              real_expectation(psi, pa.projector, pb.projector);
  return table;
}

DeterministicStrategy extract_classical_strategy(const QuantumStrategy& strategy,
                                                 const GameRelation& game,
                                                 const ExtractionOptions& options) {
  if (game.m_a() != 2) {
    throw std::invalid_argument("extraction needs exactly two Alice inputs, got " +
                                std::to_string(game.m_a()));
  }
  validate_strategy_against_game(strategy, game);
  if (options.require_winning) {
    const double p = winning_probability(strategy, game);
    if (p < 1.0 - options.winning_tolerance) {
      throw PreconditionError("quantum strategy wins with probability " + std::to_string(p) +
                              ", not 1; extraction postcondition is void");
    }
  }

  const CMatrix psi = state_matrix(strategy.state);
  // Residual of the state after Alice's projector, still a dim_a x dim_b
  // coefficient matrix; inner products contract both indices.
  const auto residual = [&psi](const CMatrix& projector) { return CMatrix(projector * psi); };
  const auto overlap = [](const CMatrix& f, const CMatrix& g) {
    return (f.conjugate().cwiseProduct(g)).sum();
  };
  const auto bob_weight = [](const CMatrix& f, const CMatrix& projector) {
    return (f.conjugate().cwiseProduct(f * projector.transpose())).sum().real();
  };

  for (const auto& first : strategy.alice[0].outcomes()) {
    const CMatrix phi0 = residual(first.projector);
    for (const auto& second : strategy.alice[1].outcomes()) {
      const CMatrix phi1 = residual(second.projector);
      if (std::abs(overlap(phi0, phi1)) <= options.epsilon) continue;
      std::vector<int> bob(game.m_b(), -1);
      bool complete = true;
      for (int y = 0; y < game.m_b() && complete; ++y) {
        for (const auto& outcome : strategy.bob[y].outcomes()) {
          if (bob_weight(phi0, outcome.projector) > options.epsilon &&
              bob_weight(phi1, outcome.projector) > options.epsilon) {
            bob[y] = outcome.label;
            break;
          }
        }
        complete = bob[y] >= 0;
      }
      if (complete) {
        return DeterministicStrategy{{first.label, second.label}, std::move(bob)};
      }
    }
  }
  throw ExtractionError(
      "no outcome pair with overlap above threshold admits a compatible Bob outcome for "
      "every input; the quantum strategy cannot have been winning");
}

}  // namespace nlg
