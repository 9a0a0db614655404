#include "listgap/chromatic.hpp"
#include "listgap/listcolor.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace listgap;

TEST_CASE("list assignments")
{
    const ListAssignment la({{3, 1, 1}, {2, 1}});
    CHECK(la.list(0) == std::vector<Color>{1, 3});
    CHECK(la.is_uniform(2));
    CHECK_FALSE(la.is_uniform(3));
    CHECK_THROWS_AS(la.require_uniform(3), std::invalid_argument);
    CHECK_THROWS_AS(ListAssignment(std::vector<std::vector<Color>>{{-1}}), std::invalid_argument);

    const auto r = ListAssignment::random(5, 3, 7, 42);
    CHECK(r == ListAssignment::random(5, 3, 7, 42));
    CHECK(r.is_uniform(3));
    for (std::size_t v = 0; v < 5; ++v)
        for (Color c : r.lists()[v])
            CHECK((c >= 1 && c <= 7));
    CHECK(ListAssignment::random(2, 2, 2, 9) == ListAssignment::constant(2, {1, 2}));
}

TEST_CASE("lists file format")
{
    const ListAssignment la = read_lists("# lists\n1: 2 3\n0: 1 2\n", 2);
    CHECK(la == ListAssignment({{1, 2}, {2, 3}}));
    CHECK(read_lists(write_lists(la), 2) == la);

    auto line_of = [](const std::string &text, int n) {
        try {
            read_lists(text, n);
        } catch (const ParseError &e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(line_of("0: 1 2\n", 2) >= 0);        // missing vertex 1
    CHECK(line_of("0: 1\n0: 2\n", 1) == 2);    // duplicate
    CHECK(line_of("0: 1\n5: 2\n", 2) == 2);    // out of range
    CHECK(line_of("0: 1 x\n", 1) == 1);        // bad colour
    CHECK(line_of("0 1 2\n", 1) == 1);         // no colon
}

TEST_CASE("alpha and beta")
{
    const Graph g = generators::path(3);
    const ListAssignment la({{1, 2, 3}, {2, 3, 4}, {2, 3, 4}});
    CHECK(alpha(la, g, EdgeRef{0}) == 1);
    CHECK(alpha(la, g, EdgeRef{1}) == 0);
    const std::vector<Vertex> all{0, 1, 2}, one{1};
    CHECK(beta(la, all) == 2);
    CHECK(beta(la, one) == 3);
    CHECK_THROWS(beta(la, std::span<const Vertex>{}));
}

TEST_CASE("list colouring counts agree with brute force and the forest sum")
{
    std::mt19937_64 rng(2024);
    const auto lines = oracle::read_lines(LISTGAP_TEST_DATA "/connected_n6.g6");
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = from_graph6(lines[rng() % lines.size()]);
        const int k = 2 + static_cast<int>(rng() % 3);
        const ListAssignment la = ListAssignment::random(g.order(), k, k + 2, rng());
        const BigInt expect(static_cast<unsigned long>(oracle::list_colorings(g, la)));
        CHECK(count_list_colorings(g, la) == expect);
        CHECK(count_list_colorings_nbc(g, EdgeOrdering::random(g.size(), rng()), la) == expect);
    }
    // Lists of unequal sizes and a disconnected graph.
    const Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {3, 4}});
    const ListAssignment la({{1}, {1, 2, 5}, {2}, {7, 8}, {7}});
    CHECK(count_list_colorings(g, la) == oracle::list_colorings(g, la));
    CHECK(count_list_colorings_nbc(g, EdgeOrdering::canonical(3), la) == oracle::list_colorings(g, la));
    CHECK_THROWS_AS(count_list_colorings(generators::complete(6), ListAssignment::constant(6, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}), 1000),
                    BudgetExceeded);
}

TEST_CASE("constant lists recover the chromatic polynomial")
{
    const Graph p = generators::petersen();
    CHECK(count_list_colorings(p, ListAssignment::constant(10, {4, 5, 6})) == 120);
    CHECK(count_list_colorings(generators::complete(4), ListAssignment::constant(4, {1, 2, 3})) == 0);
}

TEST_CASE("gap")
{
    // Single edge with disjoint singleton lists: P(G,L) = 1, P(G,1) = 0.
    const GapResult r = gap(generators::complete(2), ListAssignment({{1}, {2}}), 1);
    CHECK(r.list_count == 1);
    CHECK(r.chromatic_value == 0);
    CHECK(r.gap == 1);

    const Graph k24 = generators::complete_bipartite(2, 4);
    const ListAssignment bad({{1, 2}, {3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const GapResult z = gap(k24, bad, 2);
    CHECK(z.list_count == 0);
    CHECK(z.chromatic_value == 2);
    CHECK(z.gap == -2);
    CHECK_THROWS_AS(gap(k24, bad, 3), std::invalid_argument);
}
