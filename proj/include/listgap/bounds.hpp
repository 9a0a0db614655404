#pragma once

#include "listgap/budget.hpp"
#include "listgap/graph.hpp"
#include "listgap/listcolor.hpp"
#include "listgap/nbc.hpp"
#include "listgap/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace listgap {

enum class Verdict { holds, violated, not_applicable };

std::string to_string(Verdict v);

/// One verified inequality (possibly aggregated over many instances, in
/// which case lhs/rhs/witness describe the tightest or first violating one).
struct BoundRecord {
    std::string id;
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::not_applicable;
    std::string witness;
    bool preconditions_met = false;
    /// What was required, or which requirement failed.
    std::string preconditions;
    std::uint64_t instances = 0;
    /// Only for the gap bound: the constant used and where it came from.
    std::string c_used;
    std::string c_source;
};

struct BoundReport {
    std::vector<BoundRecord> records;

    bool any_violated() const;
    const BoundRecord *find(const std::string &id) const;
};

// Triangle bounds. Radicals are cleared so every decision is integer arithmetic.

/// triangles <= edges (sqrt(8 edges + 1) - 3) / 6.
bool fisher_bound_holds(std::uint64_t triangles, std::uint64_t edges);
double fisher_bound_value(std::uint64_t edges);

/// For a graph whose maximum degree is at least t:
/// triangles <= (edges - t)/6 (3 + sqrt(8 (edges - t) + 1)).
bool maxdeg_triangle_bound_holds(std::uint64_t triangles, std::uint64_t edges, std::uint64_t t);
double maxdeg_triangle_bound_value(std::uint64_t edges, std::uint64_t t);

/// |NBC_2(H)| = C(|E(H)|, 2) - triangles(H).
std::uint64_t nbc2_closed_form(const Graph &h);

/// (m-1)(m-3)/8, defined for m >= 4.
std::optional<Rational> nbc2_lower_general(std::size_t m);

struct K3FreeBound {
    /// C(m-1, 2) - c4(G); the value used in verdicts.
    BigInt exact;
    /// C(m-2, 2) + 2 sqrt(m) - 3, for display only.
    double closed_form = 0;
    /// exact >= closed_form, decided as (m + 1 - c4)^2 >= 4m with m + 1 >= c4.
    bool chain_holds = false;
};

/// Requires a triangle-free graph with m >= 3.
std::optional<K3FreeBound> nbc2_lower_k3free(const Graph &g);

/// Q(G,e,x) >= (2c/3) x^(n-4) for x >= m - 1 >= 3.
BoundRecord q_lower_bound(const Graph &g, const NbcProfile &profile, EdgeRef e, const Rational &x, const Rational &c);
BoundRecord q_lower_bound(const Graph &g, const EdgeOrdering &eta, EdgeRef e, const Rational &x, const Rational &c);

/// (1/k) sum_e alpha(e) Q(G,e,k).
Rational gap_lower_via_q(const Graph &g, const NbcProfile &profile, const ListAssignment &la, std::size_t k);
Rational gap_lower_via_q(const Graph &g, const EdgeOrdering &eta, const ListAssignment &la, std::size_t k);

/// prod (x - d_i) <= x^r - x^(r-1) sum q_i d_i / sum q_i, for d_i >= 0,
/// q_i > 0 and x >= max d_i. Returns nullopt when the hypotheses fail.
std::optional<bool> product_mean_bound_holds(std::span<const Rational> d, std::span<const Rational> q,
                                             const Rational &x);

/// P(G,L) - P(G,k) >= c (2/3) k^(n-5) sum_e alpha(e) for m >= 4, k >= m - 1.
/// Always checks c = (m-1)(m-3)/8; triangle-free graphs also get
/// c = C(m-1,2) - c4(G). Returns the general record first.
std::vector<BoundRecord> verify_gap_bound(const Graph &g, const EdgeOrdering &eta, const ListAssignment &la,
                                          std::size_t k, std::uint64_t budget = default_budget);

struct PositivityResult {
    BoundRecord record;
    /// Assignments checked, one per orbit under colour permutations.
    std::uint64_t assignments = 0;
    std::uint64_t edge_constant = 0;
    /// Smallest gap over assignments that differ across some edge.
    std::optional<BigInt> min_positive_gap;
};

/// Exhaustive over all k-subsets of {1..universe} per vertex (up to colour
/// permutation): the gap is zero exactly for assignments equal across every
/// edge, and positive otherwise. The budget caps the number of orbits.
PositivityResult verify_list_gap_positivity(const Graph &g, std::size_t k, std::size_t universe,
                                            std::uint64_t budget = 10'000'000);

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Per-size cap on forests checked individually.
    std::size_t forest_sample_cap = 10'000;
    std::uint64_t budget = default_budget;
};

/// Every inequality, each tagged applicable or not.
/// `la` and `k` may be absent, which makes the list-colouring items not applicable.
BoundReport verify_all(const Graph &g, const EdgeOrdering &eta, const std::optional<ListAssignment> &la,
                       std::optional<std::size_t> k, const VerifyOptions &options = {});

/// Checks that A -> A + {e} maps NBC(G/e) (under the induced ordering for
/// `rule`) into NBC(G, e). Returns the number of sets where it fails.
std::uint64_t contraction_injection_failures(const Graph &g, const EdgeOrdering &eta, EdgeRef e, ParallelRule rule);

} // namespace listgap
