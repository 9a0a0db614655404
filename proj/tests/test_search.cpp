#include "listgap/chromatic.hpp"
#include "listgap/search.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace listgap;

TEST_CASE("known minima")
{
    const SearchResult k24 = exact_pl(generators::complete_bipartite(2, 4), 2, 4);
    CHECK(k24.value == 0);
    CHECK(k24.exhaustive);
    CHECK(count_list_colorings(generators::complete_bipartite(2, 4), k24.assignment) == 0);

    const SearchResult edge = exact_pl(generators::complete(2), 2, 2);
    CHECK(edge.value == 2);

    const Graph e3 = generators::empty(3);
    CHECK(exact_pl(e3, 2, 6).value == 8);
    CHECK_THROWS_AS(exact_pl(generators::complete(2), 3, 2), std::invalid_argument);
}

TEST_CASE("pruning and canonicalisation do not change the minimum")
{
    const auto lines = oracle::read_lines(LISTGAP_TEST_DATA "/connected_n6.g6");
    int compared = 0;
    for (const auto &line : lines) {
        const Graph g = from_graph6(line);
        if (g.order() > 4)
            continue;
        for (std::size_t k = 1; k <= 2; ++k) {
            const std::size_t u = k + 2;
            ExactOptions plain;
            plain.canonicalize = false;
            plain.prune = false;
            const BigInt reference = exact_pl(g, k, u, plain).value;
            for (bool canon : {false, true})
                for (bool prune : {false, true}) {
                    ExactOptions o;
                    o.canonicalize = canon;
                    o.prune = prune;
                    CHECK(exact_pl(g, k, u, o).value == reference);
                }
            ++compared;
        }
    }
    CHECK(compared > 10);
    ExactOptions tiny;
    tiny.canonicalize = false;
    tiny.prune = false;
    tiny.budget = 100;
    CHECK_THROWS_AS(exact_pl(generators::path(4), 2, 5, tiny), BudgetExceeded);
}

TEST_CASE("chordal graphs reach the chromatic value")
{
    for (const auto &line : oracle::read_lines(LISTGAP_TEST_DATA "/connected_n6.g6")) {
        const Graph g = from_graph6(line);
        if (g.order() > 4 || !is_chordal(g))
            continue;
        const IntPolynomial p = chromatic_deletion_contraction(g);
        for (std::size_t k = 1; k <= 3; ++k)
            CHECK(exact_pl(g, k, static_cast<std::size_t>(g.order()) * k).value == p.evaluate(Rational(static_cast<long>(k))));
    }
}

TEST_CASE("local search")
{
    const Graph k24 = generators::complete_bipartite(2, 4);
    const SearchResult none = heuristic_min(k24, 2, 4, 0, 3);
    CHECK(none.value == 2);
    CHECK(none.assignment == ListAssignment::constant(6, {1, 2}));

    const SearchResult a = heuristic_min(k24, 2, 4, 60, 3);
    const SearchResult b = heuristic_min(k24, 2, 4, 60, 3);
    CHECK(a.value == b.value);
    CHECK(a.assignment == b.assignment);
    CHECK(a.value >= exact_pl(k24, 2, 4).value);
    CHECK(a.value <= 2);

    const Graph c5 = generators::cycle(5);
    const SearchResult h = heuristic_min(c5, 2, 4, 40, 1);
    CHECK(h.value >= exact_pl(c5, 2, 4).value);
}

TEST_CASE("threshold scan")
{
    const auto rows = threshold_scan(generators::complete_bipartite(2, 4), 4);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].k == 2);
    CHECK(rows[0].min_found == 0);
    CHECK(rows[0].chromatic_value == 2);
    CHECK_FALSE(rows[0].equal);

    for (const auto &row : threshold_scan(generators::empty(3), 4))
        CHECK(row.equal);
    for (const auto &row : threshold_scan(generators::paw(), 4))
        if (row.k >= 3)
            CHECK(row.equal);
    CHECK(default_universe(6, 2) == 8);
    CHECK(default_universe(2, 3) == 5);
}

TEST_CASE("canonical relabelling")
{
    const ListAssignment la({{5, 9}, {2, 9}});
    CHECK(canonical_relabel(la) == ListAssignment({{1, 2}, {2, 3}}));
}
