#pragma once

#include "listgap/graph.hpp"

#include <string>
#include <vector>

namespace listgap::catalog {

/// Relabels g into a canonical representative of its isomorphism class.
/// Brute force over colour-refined cells, so only for n <= 11.
Graph canonical_form(const Graph &g);

/// graph6 text of canonical_form(g); equal strings iff isomorphic.
std::string canonical_key(const Graph &g);

/// All connected graphs (up to isomorphism) with at most max_n vertices and
/// min_m <= m <= max_m edges, ordered by (n, m, canonical key).
std::vector<Graph> connected_graphs(int max_n, int min_m, int max_m);

/// Reads one graph per non-empty line.
std::vector<Graph> read_graph6_stream(const std::string &text);

} // namespace listgap::catalog
