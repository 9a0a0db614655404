#include "listgap/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace listgap {

namespace {

Graph build(int n, std::vector<Edge> edges)
{
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const auto &e : edges)
        pairs.emplace_back(e.u, e.v);
    return Graph::from_edge_list(n, pairs);
}

} // namespace

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw GraphError("vertex out of range in pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b)
            throw GraphError("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto &e : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto &nb : g.adjacency_)
        std::sort(nb.begin(), nb.end());
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs)
{
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

std::size_t Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto &nb : adjacency_)
        best = std::max(best, nb.size());
    return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const
{
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        return false;
    const auto &nb = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<EdgeRef> Graph::find_edge(Vertex a, Vertex b) const
{
    Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return std::nullopt;
    return EdgeRef{static_cast<std::size_t>(it - edges_.begin())};
}

bool Graph::is_connected() const
{
    if (n_ <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : neighbors(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

Contraction contract(const Graph &g, EdgeRef e)
{
    const Edge ce = g.edge(e);
    const Vertex keep = ce.u, gone = ce.v;

    Contraction out;
    out.vertex_map.resize(static_cast<std::size_t>(g.order()));
    for (Vertex w = 0; w < g.order(); ++w) {
        Vertex target = (w == gone) ? keep : w;
        out.vertex_map[static_cast<std::size_t>(w)] = target > gone ? target - 1 : target;
    }

    // Map every other edge to its image and group by image.
    std::vector<std::pair<Edge, EdgeRef>> images;
    images.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == e.index)
            continue;
        const Edge &f = g.edges()[i];
        Vertex a = out.vertex_map[static_cast<std::size_t>(f.u)];
        Vertex b = out.vertex_map[static_cast<std::size_t>(f.v)];
        images.push_back({Edge{std::min(a, b), std::max(a, b)}, EdgeRef{i}});
    }
    std::sort(images.begin(), images.end());

    std::vector<std::pair<int, int>> pairs;
    for (const auto &[img, ref] : images) {
        if (pairs.empty() || pairs.back() != std::pair{img.u, img.v}) {
            pairs.emplace_back(img.u, img.v);
            out.preimages.push_back({ref});
        } else {
            out.preimages.back().push_back(ref);
        }
    }
    out.graph = Graph::from_edge_list(std::max(g.order() - 1, 0), pairs);
    return out;
}

Graph delete_edge(const Graph &g, EdgeRef e)
{
    std::vector<Edge> kept;
    kept.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != e.index)
            kept.push_back(g.edges()[i]);
    return build(g.order(), std::move(kept));
}

std::size_t triangles_through(const Graph &g, EdgeRef e)
{
    const Edge &ed = g.edge(e);
    const auto &a = g.neighbors(ed.u);
    const auto &b = g.neighbors(ed.v);
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::size_t triangle_count(const Graph &g)
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        total += triangles_through(g, EdgeRef{i});
    return total / 3;
}

std::size_t four_cycles_through(const Graph &g, EdgeRef e)
{
    // A 4-cycle u-v-x-y-u is fixed by the pair (x, y) with x ~ v, y ~ u, x ~ y.
    const Edge &ed = g.edge(e);
    std::size_t count = 0;
    for (Vertex x : g.neighbors(ed.v)) {
        if (x == ed.u)
            continue;
        for (Vertex y : g.neighbors(ed.u)) {
            if (y == ed.v || y == x)
                continue;
            if (g.adjacent(x, y))
                ++count;
        }
    }
    return count;
}

std::size_t c4(const Graph &g)
{
    std::size_t best = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        best = std::max(best, four_cycles_through(g, EdgeRef{i}));
    return best;
}

bool is_chordal(const Graph &g)
{
    // Maximum cardinality search, then check the reverse order is a perfect
    // elimination ordering.
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> numbered(static_cast<std::size_t>(n), 0);
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int step = n - 1; step >= 0; --step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered[static_cast<std::size_t>(v)] &&
                (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
                pick = v;
        numbered[static_cast<std::size_t>(pick)] = 1;
        position[static_cast<std::size_t>(pick)] = step;
        for (Vertex w : g.neighbors(pick))
            if (!numbered[static_cast<std::size_t>(w)])
                ++weight[static_cast<std::size_t>(w)];
    }
    // Elimination goes by increasing position.
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v))
            if (position[static_cast<std::size_t>(w)] > position[static_cast<std::size_t>(v)])
                later.push_back(w);
        if (later.empty())
            continue;
        Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
            return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
        });
        for (Vertex w : later)
            if (w != parent && !g.adjacent(parent, w))
                return false;
    }
    return true;
}

Graph from_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (line.substr(0, header.size()) == header)
        pos = header.size();

    auto sextet = [&](std::size_t at) -> int {
        if (at >= line.size())
            throw ParseError("graph6: truncated input", at);
        int c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte outside 63..126", at);
        return c - 63;
    };

    if (pos >= line.size())
        throw ParseError("graph6: empty line", pos);
    long n = 0;
    if (line[pos] == '~') {
        if (pos + 1 < line.size() && line[pos + 1] == '~')
            throw ParseError("graph6: 8-byte size form not supported", pos);
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | sextet(pos + i);
        pos += 4;
    } else {
        n = sextet(pos);
        pos += 1;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos < bytes)
        throw ParseError("graph6: truncated adjacency data", line.size());
    if (line.size() - pos > bytes)
        throw ParseError("graph6: trailing bytes", pos + bytes);

    std::vector<std::pair<int, int>> pairs;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = sextet(pos + k / 6);
            if (byte & (1 << (5 - static_cast<int>(k % 6))))
                pairs.emplace_back(i, j);
        }
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        int last = sextet(pos + bytes - 1);
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw ParseError("graph6: nonzero padding bits", pos + bytes - 1);
    }
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

std::string to_graph6(const Graph &g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw GraphError("graph6: order too large");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph read_edge_list(std::string_view text)
{
    std::vector<std::vector<long>> rows;
    std::vector<std::size_t> row_line;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<long> nums;
        std::size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p])))
                ++p;
            if (p >= line.size())
                break;
            long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + p, line.data() + line.size(), value);
            if (ec != std::errc() || (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
                throw ParseError("edge list: expected integer", line_no);
            nums.push_back(value);
            p = static_cast<std::size_t>(ptr - line.data());
        }
        if (!nums.empty()) {
            rows.push_back(std::move(nums));
            row_line.push_back(line_no);
        }
        if (end == text.size())
            break;
        start = end + 1;
    }
    if (rows.empty())
        throw ParseError("edge list: missing header line", 1);
    if (rows[0].size() != 2 || rows[0][0] < 0 || rows[0][1] < 0)
        throw ParseError("edge list: header must be \"n m\"", row_line[0]);
    const long n = rows[0][0];
    const long m = rows[0][1];
    if (static_cast<long>(rows.size()) - 1 != m)
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(rows.size() - 1),
                         row_line.back());
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != 2)
            throw ParseError("edge list: expected \"u v\"", row_line[r]);
        long a = rows[r][0], b = rows[r][1];
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError("edge list: vertex out of range", row_line[r]);
        if (a == b)
            throw ParseError("edge list: loop edge", row_line[r]);
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

std::string write_edge_list(const Graph &g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto &e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

namespace generators {

Graph empty(int n) { return Graph::from_edge_list(n, std::span<const std::pair<int, int>>{}); }

Graph complete(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return Graph::from_edge_list(n, pairs);
}

Graph path(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i)
        pairs.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, pairs);
}

Graph cycle(int n)
{
    if (n < 3)
        throw GraphError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        pairs.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, pairs);
}

Graph star(int leaves)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= leaves; ++i)
        pairs.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, pairs);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            pairs.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, pairs);
}

Graph petersen()
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);
        pairs.emplace_back(i, i + 5);
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(10, pairs);
}

Graph paw() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

Graph from_name(std::string_view name)
{
    auto number = [&](std::string_view s) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || value < 0)
            throw GraphError("generator: bad size in \"" + std::string(name) + "\"");
        return value;
    };
    if (name == "petersen")
        return petersen();
    if (name == "paw")
        return paw();
    if (name.size() < 2)
        throw GraphError("generator: unknown graph \"" + std::string(name) + "\"");
    std::string_view rest = name.substr(1);
    switch (name[0]) {
    case 'K':
        if (auto comma = rest.find(','); comma != std::string_view::npos)
            return complete_bipartite(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
        return complete(number(rest));
    case 'C':
        return cycle(number(rest));
    case 'P':
        return path(number(rest));
    case 'S':
        return star(number(rest));
    case 'E':
        return empty(number(rest));
    default:
        throw GraphError("generator: unknown graph \"" + std::string(name) + "\"");
    }
}

} // namespace generators

} // namespace listgap
