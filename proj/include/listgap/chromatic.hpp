#pragma once

#include "listgap/budget.hpp"
#include "listgap/graph.hpp"
#include "listgap/nbc.hpp"
#include "listgap/polynomial.hpp"

#include <cstdint>

namespace listgap {

inline constexpr std::size_t default_deletion_contraction_edges = 24;

/// P(G,x) from P(G) = P(G-e) - P(G/e), memoised on canonical edge lists within
/// the call. Throws BudgetExceeded when m > max_edges.
IntPolynomial chromatic_deletion_contraction(const Graph &g,
                                             std::size_t max_edges = default_deletion_contraction_edges);

/// Number of proper colourings with colours 1..k, by backtracking.
/// Refuses (BudgetExceeded) when k^n > budget.
BigInt count_proper_colorings(const Graph &g, long k, std::uint64_t budget = default_budget);

/// Third route: interpolate P(G,x) through brute-force counts at k = 0..n.
IntPolynomial chromatic_by_interpolation(const Graph &g, std::uint64_t budget = default_budget);

/// Q(G,e,x): odd sizes contribute |NBC_i(G,e)|/i x^(n-i), even sizes
/// subtract |NBC_i(G,e)| x^(n-i).
RatPolynomial q_poly(const Graph &g, const EdgeOrdering &eta, EdgeRef e);
RatPolynomial q_poly(const Graph &g, const NbcProfile &profile, EdgeRef e);

Rational q_eval(const Graph &g, const EdgeOrdering &eta, EdgeRef e, const Rational &x);
Rational q_eval(const Graph &g, const NbcProfile &profile, EdgeRef e, const Rational &x);

} // namespace listgap
