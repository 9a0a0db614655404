#include "listgap/chromatic.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace listgap;

TEST_CASE("known chromatic polynomials")
{
    CHECK(chromatic_deletion_contraction(generators::complete(4)).pretty() == "x^4 - 6x^3 + 11x^2 - 6x");
    CHECK(chromatic_deletion_contraction(generators::cycle(4)).pretty() == "x^4 - 4x^3 + 6x^2 - 3x");
    CHECK(chromatic_deletion_contraction(generators::path(3)).pretty() == "x^3 - 2x^2 + x");
    CHECK(chromatic_deletion_contraction(generators::empty(2)).pretty() == "x^2");
    const IntPolynomial c5 = chromatic_deletion_contraction(generators::cycle(5));
    CHECK(c5.evaluate(Rational(3)) == 30);
    CHECK(chromatic_deletion_contraction(generators::petersen()).evaluate(Rational(3)) == 120);
    CHECK(chromatic_deletion_contraction(generators::complete_bipartite(2, 4)).evaluate(Rational(2)) == 2);
    CHECK_THROWS_AS(chromatic_deletion_contraction(generators::complete(8), 20), BudgetExceeded);
}

TEST_CASE("point counts and interpolation agree with brute force")
{
    for (const auto &line : oracle::read_lines(LISTGAP_TEST_DATA "/connected_n6.g6")) {
        const Graph g = from_graph6(line);
        const IntPolynomial p = chromatic_deletion_contraction(g);
        for (int k = 0; k <= 3; ++k) {
            const BigInt brute(static_cast<unsigned long>(oracle::colorings(g, k)));
            CHECK(count_proper_colorings(g, k) == brute);
            CHECK(p.evaluate(Rational(k)) == brute);
        }
        if (g.order() <= 5)
            CHECK(chromatic_by_interpolation(g) == p);
    }
    CHECK(count_proper_colorings(generators::empty(0), 3) == 1);
    CHECK_THROWS_AS(count_proper_colorings(generators::complete(6), 10, 1000), BudgetExceeded);
    CHECK_THROWS_AS(count_proper_colorings(generators::complete(2), -1), std::invalid_argument);
}

TEST_CASE("per-edge polynomial Q from definitional counts")
{
    const Graph k3 = generators::complete(3);
    const EdgeOrdering eta = EdgeOrdering::canonical(3);
    CHECK(q_poly(k3, eta, EdgeRef{0}).pretty() == "x^2 - 2x");
    CHECK(q_poly(k3, eta, EdgeRef{1}).pretty() == "x^2 - x");

    for (const auto &line : oracle::read_lines(LISTGAP_TEST_DATA "/connected_n6.g6")) {
        const Graph g = from_graph6(line);
        if (g.size() > 10)
            continue;
        const EdgeOrdering eta = EdgeOrdering::random(g.size(), 4);
        const auto broken = oracle::broken_cycles(g, eta);
        const int n = g.order();
        for (std::size_t e = 0; e < g.size(); ++e) {
            std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(n, 1)), Rational(0));
            for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
                if (!(mask >> e & 1) || !oracle::is_nbc(broken, mask))
                    continue;
                const int i = __builtin_popcount(mask);
                // odd i: +1/i each; even i: -1 each
                coeffs[static_cast<std::size_t>(n - i)] += i % 2 ? Rational(1, i) : Rational(-1);
            }
            CHECK(q_poly(g, eta, EdgeRef{e}) == RatPolynomial(coeffs));
        }
    }
}
