#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nlgames/classical.hpp"
#include "nlgames/game.hpp"
#include "nlgames/rational.hpp"

namespace nlg {

struct BellExpression;

struct PolytopeParams {
  int m_a = 1;
  int m_b = 1;
  int n_a = 1;
  int n_b = 1;

  static PolytopeParams from_game(const GameRelation& game) {
    return PolytopeParams{game.m_a(), game.m_b(), game.n_a(), game.n_b()};
  }

  bool operator==(const PolytopeParams&) const = default;
};

/// Dimension of the no-signalling probability space:
/// m_A m_B (n_A - 1)(n_B - 1) + m_A (n_A - 1) + m_B (n_B - 1).
long cg_dimension(const PolytopeParams& params);

/// A behavior in the minimal no-signalling coordinates: Alice marginals
/// Pr[a|x] for a < n_A - 1 (x-major), then Bob marginals, then joints
/// Pr[a,b|x,y] for a < n_A - 1, b < n_B - 1 in (x, y, a, b) order.
struct CollinsGisinVector {
  std::vector<Rational> entries;
};

CollinsGisinVector strategy_to_cg(const DeterministicStrategy& strategy,
                                  const PolytopeParams& params);

/// Rank over the rationals of an integer matrix, by fraction-free elimination.
/// No floating point is involved. An empty matrix has rank 0.
int rank_exact(std::vector<std::vector<BigInt>> matrix);

/// Every deterministic strategy whose expression value equals the local bound
/// exactly, in enumeration order.
std::vector<DeterministicStrategy> saturating_vertices(
    const BellExpression& expression, std::uint64_t budget = kDefaultEnumerationBudget);

struct FacetCertificate {
  bool facet = false;
  long vertex_count = 0;  // saturating vertices found
  long rank = -1;         // -1 when the rank step was not reached
  long dimension = 0;     // cg_dimension of the scenario
  std::string reason;     // empty when facet, otherwise why not
};

/// Facet test: stack the saturating vertices' Collins-Gisin coordinates into
/// an integer matrix and demand full rank d. Valid because the bounding
/// hyperplane does not pass through the coordinate origin for a proper face.
/// Throws DegenerateExpressionError when nothing saturates; a saturating set
/// equal to the whole vertex list is rejected as an improper face unless the
/// guard is disabled (debugging only).
FacetCertificate is_facet(const BellExpression& expression,
                          std::uint64_t budget = kDefaultEnumerationBudget,
                          bool proper_face_guard = true);

}  // namespace nlg
