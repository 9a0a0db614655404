#pragma once

#include "listgap/budget.hpp"
#include "listgap/graph.hpp"
#include "listgap/nbc.hpp"
#include "listgap/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace listgap {

using Color = long;

/// Per-vertex colour lists (sorted, duplicate-free). Uniformity is only
/// enforced where a k-assignment is required (gap, bounds).
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    /// The same list on all n vertices.
    static ListAssignment constant(int n, std::vector<Color> colours);
    /// Each vertex gets an independent uniform k-subset of {1..universe}.
    static ListAssignment random(int n, int k, int universe, std::uint64_t seed);

    std::size_t vertex_count() const noexcept { return lists_.size(); }
    const std::vector<Color> &list(Vertex v) const { return lists_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::vector<Color>> &lists() const noexcept { return lists_; }

    bool is_uniform(std::size_t k) const;
    /// Throws std::invalid_argument unless every list has exactly k colours.
    void require_uniform(std::size_t k) const;

    bool operator==(const ListAssignment &) const = default;
    auto operator<=>(const ListAssignment &) const = default;

private:
    std::vector<std::vector<Color>> lists_;
};

/// Visits one k-assignment from each orbit of {1..universe}^n-assignments under
/// permutations of the colours. Both P(G,L) and edge-constancy are invariant
/// on an orbit. Stops early when the visitor returns false.
void for_each_assignment_orbit(int n, std::size_t k, std::size_t universe,
                               const std::function<bool(const ListAssignment &)> &visit);

/// "v: c1 c2 ..." per vertex; every vertex 0..n-1 must appear exactly once.
ListAssignment read_lists(std::string_view text, int n);
std::string write_lists(const ListAssignment &la);

/// |L(u) \ L(v)| for e = uv.
std::size_t alpha(const ListAssignment &la, const Graph &g, EdgeRef e);
/// |intersection of L(v) over the vertex set|; throws on an empty set.
std::size_t beta(const ListAssignment &la, std::span<const Vertex> vertices);

/// P(G,L) by backtracking (descending-degree vertex order, forward checking,
/// independent components multiplied). Refuses when prod |L(v)| > budget.
BigInt count_list_colorings(const Graph &g, const ListAssignment &la, std::uint64_t budget = default_budget);

/// P(G,L) = sum_i (-1)^i sum over NBC forests with i edges of prod_j beta(T_j).
BigInt count_list_colorings_nbc(const Graph &g, const EdgeOrdering &eta, const ListAssignment &la);
/// Same sum over a pre-enumerated forest list (all sizes).
BigInt count_list_colorings_nbc(std::span<const NbcForest> forests, const ListAssignment &la);

struct GapResult {
    BigInt list_count;      ///< P(G,L), backtracking
    BigInt chromatic_value; ///< P(G,k), chromatic polynomial
    BigInt gap;             ///< difference of the two
};

/// P(G,L) - P(G,k); `la` must be a k-assignment.
GapResult gap(const Graph &g, const ListAssignment &la, std::size_t k, std::uint64_t budget = default_budget);
/// Variant that reuses a known chromatic polynomial.
GapResult gap(const Graph &g, const ListAssignment &la, std::size_t k, const IntPolynomial &chromatic,
              std::uint64_t budget = default_budget);

} // namespace listgap
