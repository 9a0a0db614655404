#include "listgap/catalog.hpp"
#include "listgap/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace listgap;

TEST_CASE("graph construction normalises and rejects bad edges")
{
    Graph g = Graph::from_edge_list(4, {{2, 1}, {0, 3}, {1, 2}, {0, 1}});
    CHECK(g.size() == 3);
    CHECK(g.edge(EdgeRef{0}) == Edge{0, 1});
    CHECK(g.edge(EdgeRef{1}) == Edge{0, 3});
    CHECK(g.edge(EdgeRef{2}) == Edge{1, 2});
    CHECK(g.find_edge(2, 1)->index == 2);
    CHECK_FALSE(g.find_edge(2, 3));
    CHECK(g.max_degree() == 2);
    CHECK(g.is_connected());
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), GraphError);
}

TEST_CASE("contraction merges parallel edges and records preimages")
{
    // K4 / e has 3 vertices and 3 edges (two merged pairs).
    const Graph k4 = generators::complete(4);
    const Contraction c = contract(k4, EdgeRef{0});
    CHECK(c.graph.order() == 3);
    CHECK(c.graph.size() == 3);
    std::size_t merged = 0;
    for (const auto &pre : c.preimages)
        merged += pre.size() == 2;
    CHECK(merged == 2);
    CHECK(c.vertex_map[0] == c.vertex_map[1]);

    // C5 / e is C4.
    const Contraction c5 = contract(generators::cycle(5), EdgeRef{2});
    CHECK(c5.graph.size() == 4);
    CHECK(catalog::canonical_key(c5.graph) == catalog::canonical_key(generators::cycle(4)));

    // Triangle-free contraction keeps m - 1 edges.
    const Graph p = generators::petersen();
    for (std::size_t i = 0; i < p.size(); ++i)
        CHECK(contract(p, EdgeRef{i}).graph.size() == p.size() - 1);
    CHECK(delete_edge(p, EdgeRef{3}).size() == 14);
}

TEST_CASE("triangles and 4-cycles agree with brute force")
{
    const Graph k4 = generators::complete(4);
    CHECK(triangle_count(k4) == 4);
    for (std::size_t i = 0; i < k4.size(); ++i) {
        CHECK(triangles_through(k4, EdgeRef{i}) == 2);
        CHECK(four_cycles_through(k4, EdgeRef{i}) == 2);
    }
    CHECK(c4(k4) == 2);
    CHECK(c4(generators::cycle(4)) == 1);
    CHECK(c4(generators::path(5)) == 0);
    CHECK(c4(generators::empty(3)) == 0);

    const Graph p = generators::petersen();
    CHECK(triangle_count(p) == 0);
    CHECK(c4(p) == 0);

    for (const auto &line : oracle::read_lines(LISTGAP_TEST_DATA "/connected_n6.g6")) {
        const Graph g = from_graph6(line);
        CHECK(triangle_count(g) == oracle::triangles(g));
        for (std::size_t i = 0; i < g.size(); ++i)
            CHECK(four_cycles_through(g, EdgeRef{i}) == oracle::four_cycles_through(g, EdgeRef{i}));
    }
}

TEST_CASE("graph6 decoding")
{
    // 'B' is n = 3; '_' = 32 = 100000 sets only x(0,1).
    CHECK(from_graph6("B_") == Graph::from_edge_list(3, {{0, 1}}));
    // 'w' = 56 = 111000 sets all three upper-triangle bits.
    CHECK(from_graph6("Bw") == generators::complete(3));
    CHECK(from_graph6(">>graph6<<Bw") == generators::complete(3));
    CHECK(from_graph6("?") == generators::empty(0));
    CHECK(to_graph6(generators::complete(4)) == "C~");

    const Graph p = generators::petersen();
    CHECK(from_graph6(to_graph6(p)) == p);
    // Four-byte size form.
    const Graph big = generators::path(70);
    const std::string text = to_graph6(big);
    CHECK(text[0] == '~');
    CHECK(from_graph6(text) == big);
}

TEST_CASE("graph6 errors carry offsets")
{
    auto offset_of = [](const std::string &text) {
        try {
            from_graph6(text);
        } catch (const ParseError &e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("C") >= 1);          // truncated
    CHECK(offset_of("B\x01") == 1);      // byte below 63
    CHECK(offset_of("Bww") == 2);        // trailing byte
    CHECK(offset_of("Bx") == 1);         // nonzero padding bits
}

TEST_CASE("edge-list files")
{
    const Graph g = read_edge_list("# a path\n3 2\n0 1\n\n1 2  # second\n");
    CHECK(g == generators::path(3));
    CHECK(read_edge_list(write_edge_list(generators::petersen())) == generators::petersen());

    auto line_of = [](const std::string &text) {
        try {
            read_edge_list(text);
        } catch (const ParseError &e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(line_of("3 2\n0 1\n") > 0);       // too few edges
    CHECK(line_of("3 1\n0 x\n") == 2);
    CHECK(line_of("3 1\n0 5\n") == 2);
    CHECK(line_of("") >= 0);
}

TEST_CASE("generators and chordality")
{
    CHECK(generators::from_name("K2,4") == generators::complete_bipartite(2, 4));
    CHECK(generators::from_name("S3").size() == 3);
    CHECK(generators::from_name("E4").size() == 0);
    CHECK(generators::paw().size() == 4);
    CHECK_THROWS(generators::from_name("Q7"));

    CHECK(is_chordal(generators::complete(5)));
    CHECK(is_chordal(generators::paw()));
    CHECK(is_chordal(generators::path(6)));
    CHECK_FALSE(is_chordal(generators::cycle(4)));
    CHECK_FALSE(is_chordal(generators::complete_bipartite(2, 3)));
    // Diamond: K4 minus an edge.
    CHECK(is_chordal(Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("catalog matches the networkx reference")
{
    std::set<std::string> reference, ours;
    for (const auto &line : oracle::read_lines(LISTGAP_TEST_DATA "/connected_n6.g6"))
        reference.insert(catalog::canonical_key(from_graph6(line)));
    const auto graphs = catalog::connected_graphs(6, 0, 15);
    for (const auto &g : graphs)
        ours.insert(catalog::canonical_key(g));
    CHECK(reference.size() == 143);
    CHECK(graphs.size() == 143);
    CHECK(ours == reference);

    std::set<std::string> ref_m, ours_m;
    for (const auto &line : oracle::read_lines(LISTGAP_TEST_DATA "/connected_m4_7.g6"))
        ref_m.insert(catalog::canonical_key(from_graph6(line)));
    for (const auto &g : catalog::connected_graphs(8, 4, 7))
        ours_m.insert(catalog::canonical_key(g));
    CHECK(ref_m.size() == 126);
    CHECK(ours_m == ref_m);
}

TEST_CASE("canonical keys are relabelling invariant")
{
    const Graph a = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    const Graph b = Graph::from_edge_list(5, {{4, 3}, {3, 2}, {2, 1}, {1, 4}, {1, 0}});
    const Graph c = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}});
    CHECK(catalog::canonical_key(a) == catalog::canonical_key(b));
    CHECK(catalog::canonical_key(a) == catalog::canonical_key(c));
    CHECK(catalog::canonical_key(a) != catalog::canonical_key(generators::cycle(5)));
}
