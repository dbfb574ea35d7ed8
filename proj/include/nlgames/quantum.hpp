#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "nlgames/game.hpp"

namespace nlg {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

CMatrix kron(const CMatrix& left, const CMatrix& right);

enum class Pauli { kI, kX, kY, kZ };

CMatrix pauli_matrix(Pauli letter);

/// A signed two-qubit Pauli product, e.g. -X(x)Z. Realizes to a Hermitian
/// 4x4 matrix squaring to the identity.
struct SignedPauliString {
  int sign = 1;  // +1 or -1
  std::array<Pauli, 2> letters{Pauli::kI, Pauli::kI};

  CMatrix realize() const;
};

/// A labeled resolution of the identity into mutually orthogonal Hermitian
/// idempotents. Construction validates idempotence, Hermiticity, pairwise
/// orthogonality and completeness to 1e-10.
class ProjectiveMeasurement {
 public:
  struct Outcome {
    int label = 0;
    CMatrix projector;
  };

  explicit ProjectiveMeasurement(std::vector<Outcome> outcomes);

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  int dimension() const { return static_cast<int>(outcomes_.front().projector.rows()); }

  ProjectiveMeasurement relabeled(const std::function<int(int)>& map) const;

 private:
  std::vector<Outcome> outcomes_;
};

/// A shared pure state split between the parties; dim_a * dim_b amplitudes
/// with Alice's index major. Norm must be 1 within 1e-12.
struct StateVector {
  CVector amplitudes;
  int dim_a = 1;
  int dim_b = 1;

  StateVector(CVector amps, int da, int db);
};

struct QuantumStrategy {
  StateVector state;
  std::vector<ProjectiveMeasurement> alice;
  std::vector<ProjectiveMeasurement> bob;
};

using MerminPeresSquare = std::array<std::array<SignedPauliString, 3>, 3>;

/// The 3x3 table of two-qubit observables whose rows multiply to +identity,
/// columns to -identity, with every entry transpose-invariant:
///   row 0:  I(x)Z   Z(x)I   Z(x)Z
///   row 1:  X(x)I   I(x)X   X(x)X
///   row 2: -X(x)Z  -Z(x)X   Y(x)Y
MerminPeresSquare mermin_peres_square();

struct SquareInvariantReport {
  double row_product_residual = 0;   // max |prod(row) - I|
  double col_product_residual = 0;   // max |prod(col) + I|
  double commutation_residual = 0;   // max |[O, O']| over row and column pairs
  double transpose_residual = 0;     // max |O - O^T|
};

SquareInvariantReport check_square_invariants(const MerminPeresSquare& square);

/// Simultaneous measurement of pairwise commuting +-1 observables. Outcome
/// labels are the sign-bit lists packed big-endian (t0 first); projectors are
/// the products of (I + (-1)^t O)/2 with zero products dropped.
/// Throws std::invalid_argument when the observables do not commute (1e-10).
ProjectiveMeasurement joint_measurement(std::span<const SignedPauliString> observables);

/// Two-outcome measurement of a Hermitian involution: label 0 for the +1
/// eigenspace, label 1 for the -1 eigenspace.
ProjectiveMeasurement measurement_from_involution(const CMatrix& observable);

/// The entangled strategy for the Magic Square game: two maximally entangled
/// qubit pairs (A1-B1, A2-B2, tensor index A1*8 + A2*4 + B1*2 + B2), Alice
/// measuring row x of the square and Bob column y, labels mapped to the
/// requested encoding. debug_flip_sign negates one square entry to break the
/// construction on purpose.
QuantumStrategy magic_square_quantum_strategy(MsqEncoding encoding = MsqEncoding::kRestricted4,
                                              bool debug_flip_sign = false);

/// The optimal strategy for chsh_game(): a maximally entangled qubit pair,
/// Alice measuring Z or X, Bob the diagonal combinations (Z+-X)/sqrt(2).
QuantumStrategy chsh_quantum_strategy();

QuantumStrategy restrict_alice_inputs(const QuantumStrategy& strategy,
                                      std::span<const int> inputs);

/// Per-(x, y) success probabilities, x-major.
std::vector<double> winning_probability_terms(const QuantumStrategy& strategy,
                                              const GameRelation& game);

/// Mean success probability over uniformly weighted input pairs.
double winning_probability(const QuantumStrategy& strategy, const GameRelation& game);

/// The behavior Pr[a, b | x, y] as a dense table indexed like the game's
/// winning relation.
std::vector<double> behavior_table(const QuantumStrategy& strategy, const GameRelation& game);

struct ExtractionOptions {
  double epsilon = 1e-9;            // overlap threshold
  bool require_winning = true;      // verify the precondition before extracting
  double winning_tolerance = 1e-9;  // how close to 1 the quantum value must be
};

/// Constructive extraction of a classical strategy from a quantum one on a
/// game with two Alice inputs: fix the residual Bob-side vectors left by
/// Alice's two measurements, pick an outcome pair with overlap above epsilon,
/// and for every y pick a Bob outcome supported on both residuals. For a
/// strategy that wins with probability 1 the result is a winning classical
/// strategy.
DeterministicStrategy extract_classical_strategy(const QuantumStrategy& strategy,
                                                 const GameRelation& game,
                                                 const ExtractionOptions& options = {});

}  // namespace nlg
