#pragma once

#include "listgap/graph.hpp"
#include "listgap/listcolor.hpp"
#include "listgap/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace listgap {

enum class SearchMethod { exhaustive, local_search };

std::string to_string(SearchMethod m);

struct SearchResult {
    ListAssignment assignment;
    BigInt value;
    SearchMethod method = SearchMethod::exhaustive;
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0;
    /// True when value is the minimum of P(G,L) over every k-assignment drawn from {1..universe}.
    bool exhaustive = false;
    std::size_t universe = 0;
    /// Number of P(G,L) evaluations (full or on a vertex prefix).
    std::uint64_t evaluations = 0;
};

/// min(n k, k + n).
std::size_t default_universe(int n, std::size_t k);

struct ExactOptions {
    /// Evaluate one assignment per orbit under permutations of the universe.
    bool canonicalize = true;
    /// Cut subtrees whose prefix lower bound cannot beat the best value.
    bool prune = true;
    std::uint64_t budget = 10'000'000;
};

/// Exhaustive minimum of P(G,L) over k-subsets of {1..universe} per vertex.
/// Throws BudgetExceeded once more than options.budget evaluations would be needed.
SearchResult exact_pl(const Graph &g, std::size_t k, std::size_t universe, const ExactOptions &options = {});

/// Steepest descent over single-colour swaps with random restarts, starting
/// from the constant assignment {1..k}. One iteration is one descent step or
/// one restart. Never returns more than P(G,k).
SearchResult heuristic_min(const Graph &g, std::size_t k, std::size_t universe, std::uint64_t iters,
                           std::uint64_t seed);

/// Relabels colours in order of first appearance (vertex order, then list order).
ListAssignment canonical_relabel(const ListAssignment &la);

struct ScanRow {
    std::size_t k = 0;
    std::size_t universe = 0;
    BigInt min_found;
    BigInt chromatic_value;
    bool equal = false;
    SearchMethod method = SearchMethod::exhaustive;
    ListAssignment witness;
};

struct ScanOptions {
    /// Universe per k; default_universe when absent.
    std::optional<std::size_t> universe;
    std::uint64_t budget = 10'000'000;
    /// Local search fallback when the exhaustive search refuses.
    std::uint64_t iters = 200;
    std::uint64_t seed = 1;
};

/// Rows for k = 2..k_max comparing the smallest P(G,L) found with P(G,k).
std::vector<ScanRow> threshold_scan(const Graph &g, std::size_t k_max, const ScanOptions &options = {});

} // namespace listgap
