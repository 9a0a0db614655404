#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace listgap {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Stable handle for an edge: its position in the canonical edge list.
struct EdgeRef {
    std::size_t index = 0;

    auto operator<=>(const EdgeRef &) const = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte (graph6) or line (edge list)
/// where decoding stopped.
class ParseError : public GraphError {
public:
    ParseError(const std::string &what, std::size_t offset)
        : GraphError(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Simple undirected graph on vertices 0..n-1 with a lexicographically sorted
/// edge list. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Duplicate pairs (in either orientation) collapse to one edge.
    /// Throws GraphError on loops or out-of-range endpoints.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge> &edges() const noexcept { return edges_; }
    const Edge &edge(EdgeRef e) const { return edges_.at(e.index); }
    const std::vector<Vertex> &neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    std::size_t max_degree() const noexcept;

    bool adjacent(Vertex a, Vertex b) const;
    std::optional<EdgeRef> find_edge(Vertex a, Vertex b) const;

    bool is_connected() const;

    bool operator==(const Graph &other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// G/e with parallel edges merged. `preimages[j]` lists the edges of the
/// original graph that map onto surviving edge j (one or two of them).
struct Contraction {
    Graph graph;
    std::vector<std::vector<EdgeRef>> preimages;
    /// New index of each original vertex; both endpoints of e map to the same vertex.
    std::vector<Vertex> vertex_map;
};

/// Contracts e = uv, merging v into u and renumbering densely.
Contraction contract(const Graph &g, EdgeRef e);

/// Graph with the edge removed (same vertex set).
Graph delete_edge(const Graph &g, EdgeRef e);

/// |N(u) ∩ N(v)| for e = uv.
std::size_t triangles_through(const Graph &g, EdgeRef e);
std::size_t triangle_count(const Graph &g);

/// Number of distinct 4-cycles containing e.
std::size_t four_cycles_through(const Graph &g, EdgeRef e);
/// Maximum over edges of four_cycles_through; 0 for edgeless graphs.
std::size_t c4(const Graph &g);

bool is_chordal(const Graph &g);

// graph6 (short form and the 4-byte '~' header form).
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph &g);

// Edge-list text: "n m" then m lines "u v"; '#' starts a comment.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph &g);

namespace generators {
Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen();
/// Triangle with one pendant vertex.
Graph paw();
/// Parses names such as "K4", "C5", "P3", "K2,4", "S3", "E4", "petersen", "paw".
Graph from_name(std::string_view name);
} // namespace generators

} // namespace listgap
