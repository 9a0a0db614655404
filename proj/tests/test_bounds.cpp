#include "listgap/bounds.hpp"
#include "listgap/chromatic.hpp"
#include "listgap/report.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace listgap;

TEST_CASE("triangle bounds decided without radicals")
{
    // Equality cases: K3 (3 edges, 1 triangle) and K4 (6 edges, 4 triangles).
    CHECK(fisher_bound_holds(1, 3));
    CHECK_FALSE(fisher_bound_holds(2, 3));
    CHECK(fisher_bound_holds(4, 6));
    CHECK_FALSE(fisher_bound_holds(5, 6));
    CHECK(fisher_bound_holds(0, 0));
    CHECK_FALSE(fisher_bound_holds(1, 0));
    CHECK(fisher_bound_value(6) == doctest::Approx(4));

    // K4 with t = 3: d = 3 and 6*4 = 3 (3 + 5).
    CHECK(maxdeg_triangle_bound_holds(4, 6, 3));
    CHECK_FALSE(maxdeg_triangle_bound_holds(5, 6, 3));
    CHECK(maxdeg_triangle_bound_holds(0, 2, 2));
    CHECK(maxdeg_triangle_bound_value(6, 3) == doctest::Approx(4));
    CHECK_THROWS(maxdeg_triangle_bound_holds(0, 2, 3));

    // Compare with floating point away from the boundary.
    for (std::uint64_t m = 1; m < 60; ++m)
        for (std::uint64_t t = 0; t < 80; ++t) {
            const double bound = fisher_bound_value(m);
            if (std::abs(static_cast<double>(t) - bound) > 1e-6)
                CHECK(fisher_bound_holds(t, m) == (static_cast<double>(t) < bound));
        }
}

TEST_CASE("second NBC level")
{
    CHECK(nbc2_closed_form(generators::complete(4)) == 11);
    CHECK(nbc_profile(generators::complete(4), EdgeOrdering::random(6, 2)).total(2) == 11);
    CHECK(*nbc2_lower_general(4) == Rational(3, 8));
    CHECK(*nbc2_lower_general(7) == 3);
    CHECK_FALSE(nbc2_lower_general(3));

    const auto c4b = nbc2_lower_k3free(generators::cycle(4));
    REQUIRE(c4b);
    CHECK(c4b->exact == 2);
    CHECK(c4b->chain_holds);
    CHECK(c4b->closed_form == doctest::Approx(2));
    // Contracting any C4 edge gives a triangle: C(3,2) - 1 = 2 pairs.
    CHECK(nbc_profile(contract(generators::cycle(4), EdgeRef{0}).graph, EdgeOrdering::canonical(3)).total(2) == 2);

    const auto pb = nbc2_lower_k3free(generators::petersen());
    REQUIRE(pb);
    CHECK(pb->exact == 91);
    CHECK_FALSE(nbc2_lower_k3free(generators::complete(3)));
}

TEST_CASE("product against weighted mean")
{
    const std::vector<Rational> d{Rational(1)}, q{Rational(1)};
    CHECK(*product_mean_bound_holds(d, q, Rational(3)));
    const std::vector<Rational> d2{Rational(1), Rational(2)}, q2{Rational(2), Rational(1)};
    // (5-1)(5-2) = 12 <= 25 - 5*4/3
    CHECK(*product_mean_bound_holds(d2, q2, Rational(5)));
    const std::vector<Rational> neg{Rational(-1)};
    CHECK_FALSE(product_mean_bound_holds(neg, q, Rational(3)));
    CHECK_FALSE(product_mean_bound_holds(d, q2, Rational(3)));
    CHECK_FALSE(product_mean_bound_holds(d2, q2, Rational(1)));
}

TEST_CASE("Q lower bound and gap lower bound")
{
    const Graph c4 = generators::cycle(4);
    const NbcProfile p = nbc_profile(c4, EdgeOrdering::canonical(4));
    const BoundRecord r = q_lower_bound(c4, p, EdgeRef{0}, Rational(3), *nbc2_lower_general(4));
    CHECK(r.verdict == Verdict::holds);
    CHECK(q_lower_bound(c4, p, EdgeRef{0}, Rational(2), Rational(1)).verdict == Verdict::not_applicable);
    CHECK(q_lower_bound(generators::complete(3), EdgeOrdering::canonical(3), EdgeRef{0}, Rational(5), Rational(1)).verdict ==
          Verdict::not_applicable);

    const ListAssignment la = ListAssignment::random(4, 3, 6, 1);
    const Rational lower = gap_lower_via_q(c4, p, la, 3);
    const GapResult gr = gap(c4, la, 3);
    CHECK(Rational(gr.gap) >= lower);
    CHECK(gap_lower_via_q(c4, p, ListAssignment::constant(4, {1, 2, 3}), 3) == 0);
}

TEST_CASE("gap bound records")
{
    const Graph c4 = generators::cycle(4);
    const auto eta = EdgeOrdering::canonical(4);
    const auto records = verify_gap_bound(c4, eta, ListAssignment::random(4, 3, 5, 7), 3);
    REQUIRE(records.size() == 2);
    CHECK(records[0].id == "gap_bound");
    CHECK(records[0].verdict == Verdict::holds);
    CHECK(records[0].c_used == "3/8");
    CHECK(records[1].verdict == Verdict::holds);
    CHECK(records[1].c_used == "2");

    // Preconditions: too few edges, k too small, lists not uniform.
    CHECK(verify_gap_bound(generators::complete(3), EdgeOrdering::canonical(3), ListAssignment::constant(3, {1, 2}), 2)[0]
              .verdict == Verdict::not_applicable);
    CHECK(verify_gap_bound(c4, eta, ListAssignment::random(4, 2, 5, 7), 2)[0].verdict == Verdict::not_applicable);
    CHECK(verify_gap_bound(c4, eta, ListAssignment({{1, 2, 3}, {1, 2}, {1, 2, 3}, {1, 2, 3}}), 3)[0].verdict ==
          Verdict::not_applicable);
    // K4 has a triangle, so only the general constant applies.
    const auto k4 = verify_gap_bound(generators::complete(4), EdgeOrdering::canonical(6), ListAssignment::random(4, 5, 8, 3), 5);
    CHECK(k4[0].verdict == Verdict::holds);
    CHECK(k4[1].verdict == Verdict::not_applicable);
}

TEST_CASE("full verification over the small catalog")
{
    std::mt19937_64 rng(5);
    std::map<std::string, std::uint64_t> holds;
    for (const auto &line : oracle::read_lines(LISTGAP_TEST_DATA "/connected_n6.g6")) {
        const Graph g = from_graph6(line);
        const auto eta = EdgeOrdering::random(g.size(), rng());
        const std::size_t k = std::max<std::size_t>(2, g.size() ? g.size() - 1 : 0);
        const auto la = ListAssignment::random(g.order(), static_cast<int>(k), static_cast<int>(2 * k), rng());
        const BoundReport report = verify_all(g, eta, la, k);
        for (const auto &r : report.records) {
            CHECK_MESSAGE(r.verdict != Verdict::violated, r.id << " " << line << " " << r.witness);
            holds[r.id] += r.verdict == Verdict::holds;
        }
    }
    // Every item was exercised somewhere.
    for (const auto &[id, count] : holds)
        CHECK_MESSAGE(count > 0, id);
    CHECK(holds.size() == 24);
}

TEST_CASE("verification without lists marks list items not applicable")
{
    const BoundReport report = verify_all(generators::cycle(5), EdgeOrdering::canonical(5), std::nullopt, std::nullopt);
    REQUIRE(report.find("gap_bound"));
    CHECK(report.find("gap_bound")->verdict == Verdict::not_applicable);
    CHECK(report.find("forest_product_lower")->verdict == Verdict::not_applicable);
    CHECK(report.find("whitney_expansion")->verdict == Verdict::holds);
    CHECK_FALSE(report.any_violated());
}

TEST_CASE("forest sampling caps the per-size work")
{
    const Graph g = generators::complete(5);
    const auto la = ListAssignment::random(5, 9, 14, 3);
    VerifyOptions small;
    small.forest_sample_cap = 5;
    const BoundReport capped = verify_all(g, EdgeOrdering::canonical(10), la, 9, small);
    const BoundReport full = verify_all(g, EdgeOrdering::canonical(10), la, 9);
    // The empty forest plus four sizes of at most five forests each.
    CHECK(capped.find("forest_product_lower")->instances <= 21);
    CHECK(full.find("forest_product_lower")->instances > 21);
    CHECK_FALSE(capped.any_violated());
    // Same seed, same sample.
    CHECK(record_json(capped.records[17]).dump() == record_json(verify_all(g, EdgeOrdering::canonical(10), la, 9, small).records[17]).dump());
}

TEST_CASE("contraction injection depends on which merged label survives")
{
    const Graph k3 = generators::complete(3);
    const EdgeOrdering eta = EdgeOrdering::canonical(3);
    std::uint64_t smaller = 0, larger = 0;
    for (std::size_t e = 0; e < 3; ++e) {
        smaller += contraction_injection_failures(k3, eta, EdgeRef{e}, ParallelRule::keep_smaller);
        larger += contraction_injection_failures(k3, eta, EdgeRef{e}, ParallelRule::keep_larger);
    }
    CHECK(smaller == 0);
    // Contracting label 1 and keeping label 3 maps {3} to {1,3}, which is NBC,
    // but contracting label 2 and keeping 3 gives {2,3}, a broken cycle.
    CHECK(larger > 0);
}

TEST_CASE("gap positivity")
{
    const PositivityResult k3 = verify_list_gap_positivity(generators::complete(3), 2, 4);
    CHECK(k3.record.verdict == Verdict::holds);
    CHECK(k3.edge_constant > 0);
    CHECK(k3.assignments > k3.edge_constant);

    // k = 1 on a path with two edges: lists {1},{1},{2} give no colouring at
    // all, so the gap is 0 although the lists differ across an edge.
    const PositivityResult p3 = verify_list_gap_positivity(generators::path(3), 1, 3);
    CHECK(p3.record.verdict == Verdict::violated);
    CHECK(p3.record.lhs == "0");

    CHECK(verify_list_gap_positivity(generators::path(4), 1, 3).record.verdict == Verdict::not_applicable);
    CHECK_THROWS_AS(verify_list_gap_positivity(generators::path(4), 3, 9, 10), BudgetExceeded);
}

TEST_CASE("assignment orbits")
{
    // Two vertices, one colour each from three: same or different.
    std::uint64_t count = 0;
    for_each_assignment_orbit(2, 1, 3, [&](const ListAssignment &) {
        ++count;
        return true;
    });
    CHECK(count == 2);

    // Compare with brute-force orbit counting (minimum image over all colour permutations).
    for (auto [n, k, u] : {std::tuple{3, 2, 4}, std::tuple{2, 2, 5}, std::tuple{4, 1, 4}, std::tuple{3, 3, 5}}) {
        std::set<std::vector<std::vector<Color>>> reps, images;
        for_each_assignment_orbit(n, static_cast<std::size_t>(k), static_cast<std::size_t>(u), [&](const ListAssignment &la) {
            reps.insert(la.lists());
            return true;
        });
        std::vector<std::vector<Color>> subsets;
        for (int mask = 0; mask < (1 << u); ++mask)
            if (__builtin_popcount(static_cast<unsigned>(mask)) == k) {
                std::vector<Color> s;
                for (int c = 0; c < u; ++c)
                    if (mask >> c & 1)
                        s.push_back(c + 1);
                subsets.push_back(s);
            }
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<std::vector<Color>> lists;
            for (int v = 0; v < n; ++v)
                lists.push_back(subsets[static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])]);
            std::vector<Color> perm(static_cast<std::size_t>(u));
            std::iota(perm.begin(), perm.end(), 1);
            std::vector<std::vector<Color>> best;
            do {
                std::vector<std::vector<Color>> img;
                for (const auto &l : lists) {
                    std::vector<Color> x;
                    for (Color c : l)
                        x.push_back(perm[static_cast<std::size_t>(c - 1)]);
                    std::sort(x.begin(), x.end());
                    img.push_back(x);
                }
                if (best.empty() || img < best)
                    best = img;
            } while (std::next_permutation(perm.begin(), perm.end()));
            images.insert(best);
            int v = 0;
            while (v < n && ++idx[static_cast<std::size_t>(v)] == static_cast<int>(subsets.size()))
                idx[static_cast<std::size_t>(v++)] = 0;
            if (v == n)
                break;
        }
        CHECK(reps.size() == images.size());
    }
}
