#include "nlgames/polytope.hpp"

#include <stdexcept>
#include <string>

#include "nlgames/bell.hpp"
#include "nlgames/errors.hpp"

namespace nlg {

long cg_dimension(const PolytopeParams& params) {
  if (params.m_a < 1 || params.m_b < 1 || params.n_a < 1 || params.n_b < 1) {
    throw std::invalid_argument("scenario counts must be at least 1");
  }
  const long ma = params.m_a, mb = params.m_b, na = params.n_a, nb = params.n_b;
  return ma * mb * (na - 1) * (nb - 1) + ma * (na - 1) + mb * (nb - 1);
}

CollinsGisinVector strategy_to_cg(const DeterministicStrategy& strategy,
                                  const PolytopeParams& params) {
  if (static_cast<int>(strategy.alice.size()) != params.m_a ||
      static_cast<int>(strategy.bob.size()) != params.m_b) {
    throw std::invalid_argument("strategy shape does not match scenario");
  }
  for (int a : strategy.alice) {
    if (a < 0 || a >= params.n_a) throw std::invalid_argument("alice output out of range");
  }
  for (int b : strategy.bob) {
    if (b < 0 || b >= params.n_b) throw std::invalid_argument("bob output out of range");
  }
  CollinsGisinVector vector;
  vector.entries.reserve(static_cast<std::size_t>(cg_dimension(params)));
  for (int x = 0; x < params.m_a; ++x)
    for (int a = 0; a < params.n_a - 1; ++a)
      vector.entries.emplace_back(strategy.alice[x] == a ? 1 : 0);
  for (int y = 0; y < params.m_b; ++y)
    for (int b = 0; b < params.n_b - 1; ++b)
      vector.entries.emplace_back(strategy.bob[y] == b ? 1 : 0);
  for (int x = 0; x < params.m_a; ++x)
    for (int y = 0; y < params.m_b; ++y)
      for (int a = 0; a < params.n_a - 1; ++a)
        for (int b = 0; b < params.n_b - 1; ++b)
          vector.entries.emplace_back(strategy.alice[x] == a && strategy.bob[y] == b ? 1 : 0);
  return vector;
}

int rank_exact(std::vector<std::vector<BigInt>> matrix) {
  if (matrix.empty()) return 0;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols) throw std::invalid_argument("matrix rows have unequal lengths");
  }
  if (cols == 0) return 0;

  // Bareiss fraction-free elimination; every division below is exact.
  BigInt previous_pivot(1);
  BigInt product, quotient, remainder;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && matrix[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[rank], matrix[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        product = matrix[rank][c] * matrix[i][j] - matrix[i][c] * matrix[rank][j];
        mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), product.get_mpz_t(),
                    previous_pivot.get_mpz_t());
        if (remainder != 0) {
          throw std::logic_error("fraction-free elimination produced an inexact division");
        }
        matrix[i][j] = quotient;
      }
      matrix[i][c] = 0;
    }
    previous_pivot = matrix[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

struct SaturationScan {
  std::vector<DeterministicStrategy> saturating;
  bool bound_exceeded = false;
  BigInt total;
};

SaturationScan scan_vertices(const BellExpression& expression, std::uint64_t budget) {
  const auto& p = expression.params;
  const BigInt required = count_deterministic(p.m_a, p.m_b, p.n_a, p.n_b);
  if (mpz_cmp_ui(required.get_mpz_t(), static_cast<unsigned long>(budget)) > 0) {
    throw BudgetExceededError(required, static_cast<unsigned long>(budget));
  }
  SaturationScan scan;
  scan.total = required;
  DeterministicStrategy strategy{std::vector<int>(p.m_a, 0), std::vector<int>(p.m_b, 0)};
  for (;;) {
    const Rational value = evaluate_on_strategy(expression, strategy);
    if (value == expression.local_bound) {
      scan.saturating.push_back(strategy);
    } else if (value > expression.local_bound) {
      scan.bound_exceeded = true;
    }
    int i = p.m_a + p.m_b - 1;
    for (; i >= 0; --i) {
      int& digit = i < p.m_a ? strategy.alice[i] : strategy.bob[i - p.m_a];
      const int radix = i < p.m_a ? p.n_a : p.n_b;
      if (++digit < radix) break;
      digit = 0;
    }
    if (i < 0) break;
  }
  return scan;
}

}  // namespace

std::vector<DeterministicStrategy> saturating_vertices(const BellExpression& expression,
                                                       std::uint64_t budget) {
  return scan_vertices(expression, budget).saturating;
}

FacetCertificate is_facet(const BellExpression& expression, std::uint64_t budget,
                          bool proper_face_guard) {
  SaturationScan scan = scan_vertices(expression, budget);
  FacetCertificate certificate;
  certificate.dimension = cg_dimension(expression.params);
  certificate.vertex_count = static_cast<long>(scan.saturating.size());

  if (scan.saturating.empty()) {
    throw DegenerateExpressionError("no deterministic strategy saturates the bound " +
                                    to_fraction_string(expression.local_bound));
  }
  if (scan.bound_exceeded) {
    certificate.reason = "some deterministic strategy exceeds the bound; not a valid inequality";
    return certificate;
  }
  if (proper_face_guard && BigInt(certificate.vertex_count) == scan.total) {
    certificate.reason = "every deterministic strategy saturates the bound; improper face";
    return certificate;
  }

  std::vector<std::vector<BigInt>> matrix;
  matrix.reserve(scan.saturating.size());
  for (const auto& strategy : scan.saturating) {
    const CollinsGisinVector cg = strategy_to_cg(strategy, expression.params);
    std::vector<BigInt> row;
    row.reserve(cg.entries.size());
    for (const Rational& entry : cg.entries) {
      if (entry.get_den() != 1) throw std::logic_error("deterministic CG entry not integral");
      row.push_back(entry.get_num());
    }
    matrix.push_back(std::move(row));
  }
  certificate.rank = rank_exact(std::move(matrix));
  certificate.facet = certificate.rank == certificate.dimension;
  if (!certificate.facet) {
    certificate.reason = "saturating set spans rank " + std::to_string(certificate.rank) +
                         " of " + std::to_string(certificate.dimension);
  }
  return certificate;
}

}  // namespace nlg
