#include "listgap/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace listgap::catalog {

namespace {

constexpr int max_canonical_order = 11;

/// Stable colour refinement starting from degrees.
std::vector<int> refine(const Graph &g)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        colour[static_cast<std::size_t>(v)] = static_cast<int>(g.degree(v));

    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> signature(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            auto &sig = signature[static_cast<std::size_t>(v)];
            sig.first = colour[static_cast<std::size_t>(v)];
            for (Vertex w : g.neighbors(v))
                sig.second.push_back(colour[static_cast<std::size_t>(w)]);
            std::sort(sig.second.begin(), sig.second.end());
        }
        std::map<std::pair<int, std::vector<int>>, int> rank;
        for (const auto &s : signature)
            rank.emplace(s, 0);
        int next = 0;
        for (auto &[key, value] : rank)
            value = next++;
        for (Vertex v = 0; v < n; ++v)
            colour[static_cast<std::size_t>(v)] = rank[signature[static_cast<std::size_t>(v)]];
        if (rank.size() == classes)
            break;
        classes = rank.size();
    }
    return colour;
}

} // namespace

Graph canonical_form(const Graph &g)
{
    const int n = g.order();
    if (n > max_canonical_order)
        throw GraphError("canonical_form: order above " + std::to_string(max_canonical_order));

    const auto colour = refine(g);
    std::vector<std::vector<Vertex>> cells;
    {
        std::map<int, std::vector<Vertex>> by_colour;
        for (Vertex v = 0; v < n; ++v)
            by_colour[colour[static_cast<std::size_t>(v)]].push_back(v);
        for (auto &[c, cell] : by_colour)
            cells.push_back(std::move(cell));
    }

    // label[v] = new position. Positions are assigned cell by cell.
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    std::uint64_t best = 0;
    std::vector<Vertex> best_label;

    auto score = [&]() {
        // Upper-triangle bit string in graph6 order under `label`.
        std::uint64_t bits = 0;
        std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (const auto &e : g.edges()) {
            auto a = static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)]);
            auto b = static_cast<std::size_t>(label[static_cast<std::size_t>(e.v)]);
            adj[a][b] = adj[b][a] = 1;
        }
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits = (bits << 1) | static_cast<std::uint64_t>(adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        return bits;
    };

    std::vector<std::vector<Vertex>> perms = cells;
    for (auto &p : perms)
        std::sort(p.begin(), p.end());

    // Odometer over the product of per-cell permutations.
    while (true) {
        Vertex pos = 0;
        for (const auto &p : perms)
            for (Vertex v : p)
                label[static_cast<std::size_t>(v)] = pos++;
        std::uint64_t s = score();
        if (best_label.empty() || s > best) {
            best = s;
            best_label = label;
        }
        std::size_t c = 0;
        for (; c < perms.size(); ++c) {
            if (std::next_permutation(perms[c].begin(), perms[c].end()))
                break;
        }
        if (c == perms.size())
            break;
    }

    std::vector<std::pair<int, int>> pairs;
    for (const auto &e : g.edges())
        pairs.emplace_back(best_label[static_cast<std::size_t>(e.u)], best_label[static_cast<std::size_t>(e.v)]);
    return Graph::from_edge_list(n, pairs);
}

std::string canonical_key(const Graph &g) { return to_graph6(canonical_form(g)); }

std::vector<Graph> connected_graphs(int max_n, int min_m, int max_m)
{
    // Every connected graph with m >= 1 edges arises from a connected graph
    // with m - 1 edges by adding an edge between existing vertices (drop a
    // cycle edge) or a pendant edge to a new vertex (drop a leaf).
    std::vector<std::tuple<int, std::size_t, std::string, Graph>> out;
    std::map<std::string, Graph> level;
    if (max_n >= 1) {
        Graph k1 = generators::empty(1);
        level.emplace(canonical_key(k1), k1);
    }
    for (int m = 0; m <= max_m && !level.empty(); ++m) {
        if (m >= min_m)
            for (const auto &[key, g] : level)
                out.emplace_back(g.order(), g.size(), key, g);
        if (m == max_m)
            break;
        std::map<std::string, Graph> next;
        for (const auto &[key, g] : level) {
            const int n = g.order();
            std::vector<std::pair<int, int>> base;
            for (const auto &e : g.edges())
                base.emplace_back(e.u, e.v);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (!g.adjacent(a, b)) {
                        auto pairs = base;
                        pairs.emplace_back(a, b);
                        Graph h = Graph::from_edge_list(n, pairs);
                        next.emplace(canonical_key(h), h);
                    }
            if (n + 1 <= max_n)
                for (int a = 0; a < n; ++a) {
                    auto pairs = base;
                    pairs.emplace_back(a, n);
                    Graph h = Graph::from_edge_list(n + 1, pairs);
                    next.emplace(canonical_key(h), h);
                }
        }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
        return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x)) <
               std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y));
    });
    std::vector<Graph> graphs;
    graphs.reserve(out.size());
    for (auto &t : out)
        graphs.push_back(std::move(std::get<3>(t)));
    return graphs;
}

std::vector<Graph> read_graph6_stream(const std::string &text)
{
    std::vector<Graph> graphs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        graphs.push_back(from_graph6(line));
    }
    return graphs;
}

} // namespace listgap::catalog
