#pragma once

#include "listgap/graph.hpp"
#include "listgap/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace listgap {

/// Bijection from edge indices to labels 1..m.
class EdgeOrdering {
public:
    EdgeOrdering() = default;

    /// Labels edges 1..m in canonical (lexicographic) edge order.
    static EdgeOrdering canonical(std::size_t m);
    /// labels[i] is the label of edge i; must be a permutation of 1..m.
    static EdgeOrdering from_labels(std::vector<int> labels);
    static EdgeOrdering random(std::size_t m, std::uint64_t seed);

    std::size_t size() const noexcept { return labels_.size(); }
    int label(EdgeRef e) const { return labels_.at(e.index); }
    EdgeRef edge_with_label(int label) const { return EdgeRef{by_label_.at(static_cast<std::size_t>(label - 1))}; }
    const std::vector<int> &labels() const noexcept { return labels_; }

    bool operator==(const EdgeOrdering &o) const { return labels_ == o.labels_; }

private:
    std::vector<int> labels_;
    std::vector<std::size_t> by_label_;
};

/// m whitespace-separated labels, the label of each edge in canonical edge order.
EdgeOrdering read_ordering(std::string_view text, std::size_t m);
std::string write_ordering(const EdgeOrdering &eta);

/// Edge subsets are kept sorted by edge index.
using EdgeSet = std::vector<EdgeRef>;

struct NbcProfile {
    /// counts_total[i] = |NBC_i(G)| for 0 <= i <= n-1.
    std::vector<std::uint64_t> counts_total;
    /// counts_per_edge[e][i] = |NBC_i(G,e)|; column 0 is always zero.
    std::vector<std::vector<std::uint64_t>> counts_per_edge;

    std::uint64_t total(std::size_t i) const { return i < counts_total.size() ? counts_total[i] : 0; }
    std::uint64_t per_edge(EdgeRef e, std::size_t i) const
    {
        const auto &row = counts_per_edge.at(e.index);
        return i < row.size() ? row[i] : 0;
    }
};

/// Spanning forest (V, A) of an NBC set A.
struct NbcForest {
    EdgeSet edges;
    /// component[v] in 0..component_count-1, numbered by smallest vertex.
    std::vector<int> component;
    int component_count = 0;

    std::vector<std::vector<Vertex>> components() const;
};

/// Each cycle minus its lowest-labelled edge, sorted and deduplicated.
std::vector<EdgeSet> broken_cycles(const Graph &g, const EdgeOrdering &eta);

/// True iff `a` contains no broken cycle. Checked as: `a` is acyclic and no
/// edge f outside `a` has its endpoints joined by an `a`-path whose labels all
/// exceed the label of f.
bool is_nbc(const Graph &g, const EdgeOrdering &eta, std::span<const EdgeRef> a);

NbcProfile nbc_profile(const Graph &g, const EdgeOrdering &eta);

/// Streams every NBC forest (all sizes, or only `size` when given). Sets are
/// generated by extending in increasing label order; the visitor sees a
/// reference that is only valid during the call.
void for_each_nbc_forest(const Graph &g, const EdgeOrdering &eta, std::optional<std::size_t> size,
                         const std::function<void(const NbcForest &)> &visit);

std::vector<NbcForest> nbc_forests(const Graph &g, const EdgeOrdering &eta, std::size_t size);

/// Which label a surviving edge of G/e inherits when two edges merge.
enum class ParallelRule { keep_smaller, keep_larger };

struct InducedOrdering {
    Contraction contraction;
    EdgeOrdering ordering;
    /// The preimage in G whose label each surviving edge inherited.
    std::vector<EdgeRef> retained;
};

/// Ordering on G/e keeping the relative order of the retained preimages,
/// compressed to 1..|E(G/e)|.
InducedOrdering induced_ordering(const Graph &g, const EdgeOrdering &eta, EdgeRef e,
                                 ParallelRule rule = ParallelRule::keep_smaller);

/// P(G,x) = sum_i (-1)^i |NBC_i(G)| x^(n-i).
IntPolynomial chromatic_via_whitney(const Graph &g, const EdgeOrdering &eta);
IntPolynomial chromatic_from_profile(const Graph &g, const NbcProfile &profile);

} // namespace listgap
