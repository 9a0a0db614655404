#include "listgap/nbc.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace listgap {

namespace {

/// Union-find with undo; no path compression so unions can be rolled back.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const
    {
        while (parent_[static_cast<std::size_t>(v)] != v)
            v = parent_[static_cast<std::size_t>(v)];
        return v;
    }

    /// Returns false (and records nothing) when already joined.
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        history_.push_back(b);
        return true;
    }

    void undo()
    {
        int b = history_.back();
        history_.pop_back();
        int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

void check_ordering(const Graph &g, const EdgeOrdering &eta)
{
    if (eta.size() != g.size())
        throw std::invalid_argument("edge ordering has " + std::to_string(eta.size()) + " labels for " +
                                    std::to_string(g.size()) + " edges");
}

/// Precomputed data for repeated NBC membership checks.
class NbcChecker {
public:
    NbcChecker(const Graph &g, const EdgeOrdering &eta) : g_(g), in_set_(g.size(), 0)
    {
        for (int label = static_cast<int>(g.size()); label >= 1; --label)
            descending_.push_back(eta.edge_with_label(label));
    }

    void add(EdgeRef e) { in_set_[e.index] = 1; }
    void remove(EdgeRef e) { in_set_[e.index] = 0; }

    bool current_is_nbc() const
    {
        RollbackUnionFind uf(g_.order());
        for (EdgeRef f : descending_) {
            const Edge &ed = g_.edge(f);
            bool joined = uf.find(ed.u) == uf.find(ed.v);
            if (joined)
                return false;
            if (in_set_[f.index])
                uf.unite(ed.u, ed.v);
        }
        return true;
    }

private:
    const Graph &g_;
    std::vector<EdgeRef> descending_;
    std::vector<char> in_set_;
};

} // namespace

EdgeOrdering EdgeOrdering::canonical(std::size_t m)
{
    std::vector<int> labels(m);
    std::iota(labels.begin(), labels.end(), 1);
    return from_labels(std::move(labels));
}

EdgeOrdering EdgeOrdering::from_labels(std::vector<int> labels)
{
    const std::size_t m = labels.size();
    EdgeOrdering out;
    out.by_label_.assign(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        int l = labels[i];
        if (l < 1 || static_cast<std::size_t>(l) > m || out.by_label_[static_cast<std::size_t>(l - 1)] != m)
            throw std::invalid_argument("edge ordering is not a permutation of 1.." + std::to_string(m));
        out.by_label_[static_cast<std::size_t>(l - 1)] = i;
    }
    out.labels_ = std::move(labels);
    return out;
}

EdgeOrdering read_ordering(std::string_view text, std::size_t m)
{
    std::vector<int> labels;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        std::string token(text.substr(pos, end - pos));
        if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9)
            throw ParseError("bad edge label '" + token + "'", pos);
        labels.push_back(std::stoi(token));
        pos = end;
    }
    if (labels.size() != m)
        throw ParseError("ordering has " + std::to_string(labels.size()) + " labels, graph has " + std::to_string(m) +
                             " edges",
                         text.size());
    try {
        return EdgeOrdering::from_labels(std::move(labels));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what(), 0);
    }
}

std::string write_ordering(const EdgeOrdering &eta)
{
    std::string out;
    for (std::size_t i = 0; i < eta.size(); ++i)
        out += (i ? " " : "") + std::to_string(eta.labels()[i]);
    return out + "\n";
}

EdgeOrdering EdgeOrdering::random(std::size_t m, std::uint64_t seed)
{
    std::vector<int> labels(m);
    std::iota(labels.begin(), labels.end(), 1);
    std::mt19937_64 rng(seed);
    // Explicit Fisher-Yates so the permutation does not depend on the
    // standard library's distribution implementation.
    for (std::size_t i = m; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(labels[i - 1], labels[j]);
    }
    return from_labels(std::move(labels));
}

std::vector<std::vector<Vertex>> NbcForest::components() const
{
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(component_count));
    for (std::size_t v = 0; v < component.size(); ++v)
        out[static_cast<std::size_t>(component[v])].push_back(static_cast<Vertex>(v));
    return out;
}

std::vector<EdgeSet> broken_cycles(const Graph &g, const EdgeOrdering &eta)
{
    check_ordering(g, eta);
    std::set<EdgeSet> found;
    const int n = g.order();
    std::vector<Vertex> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);

    // Each cycle is enumerated once: it starts at its smallest vertex s and the
    // second vertex is smaller than the last.
    auto emit = [&]() {
        EdgeSet cycle;
        for (std::size_t i = 0; i < path.size(); ++i)
            cycle.push_back(*g.find_edge(path[i], path[(i + 1) % path.size()]));
        auto lowest = std::min_element(cycle.begin(), cycle.end(),
                                       [&](EdgeRef a, EdgeRef b) { return eta.label(a) < eta.label(b); });
        cycle.erase(lowest);
        std::sort(cycle.begin(), cycle.end());
        found.insert(std::move(cycle));
    };

    std::function<void(Vertex)> extend = [&](Vertex v) {
        const Vertex s = path.front();
        for (Vertex w : g.neighbors(v)) {
            if (w == s && path.size() >= 3 && path[1] < path.back())
                emit();
            if (w <= s || on_path[static_cast<std::size_t>(w)])
                continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            extend(w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };

    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        on_path[static_cast<std::size_t>(s)] = 1;
        extend(s);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return {found.begin(), found.end()};
}

bool is_nbc(const Graph &g, const EdgeOrdering &eta, std::span<const EdgeRef> a)
{
    check_ordering(g, eta);
    NbcChecker checker(g, eta);
    for (EdgeRef e : a)
        checker.add(e);
    return checker.current_is_nbc();
}

void for_each_nbc_forest(const Graph &g, const EdgeOrdering &eta, std::optional<std::size_t> size,
                         const std::function<void(const NbcForest &)> &visit)
{
    check_ordering(g, eta);
    const int n = g.order();
    const std::size_t m = g.size();
    const std::size_t max_size = n > 0 ? static_cast<std::size_t>(n - 1) : 0;
    if (size && *size > max_size)
        return;

    NbcChecker checker(g, eta);
    RollbackUnionFind uf(n);
    NbcForest forest;
    forest.component.assign(static_cast<std::size_t>(n), 0);
    std::vector<EdgeRef> stack;

    auto emit = [&]() {
        forest.edges = stack;
        std::sort(forest.edges.begin(), forest.edges.end());
        std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
        int next = 0;
        for (Vertex v = 0; v < n; ++v) {
            int r = uf.find(v);
            if (id_of_root[static_cast<std::size_t>(r)] < 0)
                id_of_root[static_cast<std::size_t>(r)] = next++;
            forest.component[static_cast<std::size_t>(v)] = id_of_root[static_cast<std::size_t>(r)];
        }
        forest.component_count = next;
        visit(forest);
    };

    // Extend with edges of strictly increasing label; NBC is closed under
    // subsets, so every NBC set is reached exactly once.
    std::function<void(int)> extend = [&](int last_label) {
        if (!size || stack.size() == *size)
            emit();
        if (size && stack.size() == *size)
            return;
        for (int label = last_label + 1; label <= static_cast<int>(m); ++label) {
            EdgeRef e = eta.edge_with_label(label);
            const Edge &ed = g.edge(e);
            if (!uf.unite(ed.u, ed.v))
                continue;
            checker.add(e);
            if (checker.current_is_nbc()) {
                stack.push_back(e);
                extend(label);
                stack.pop_back();
            }
            checker.remove(e);
            uf.undo();
        }
    };
    extend(0);
}

std::vector<NbcForest> nbc_forests(const Graph &g, const EdgeOrdering &eta, std::size_t size)
{
    std::vector<NbcForest> out;
    for_each_nbc_forest(g, eta, size, [&](const NbcForest &f) { out.push_back(f); });
    return out;
}

NbcProfile nbc_profile(const Graph &g, const EdgeOrdering &eta)
{
    const int n = g.order();
    const std::size_t width = static_cast<std::size_t>(std::max(n, 1));
    NbcProfile p;
    p.counts_total.assign(width, 0);
    p.counts_per_edge.assign(g.size(), std::vector<std::uint64_t>(width, 0));
    for_each_nbc_forest(g, eta, std::nullopt, [&](const NbcForest &f) {
        const std::size_t i = f.edges.size();
        ++p.counts_total[i];
        for (EdgeRef e : f.edges)
            ++p.counts_per_edge[e.index][i];
    });
    return p;
}

InducedOrdering induced_ordering(const Graph &g, const EdgeOrdering &eta, EdgeRef e, ParallelRule rule)
{
    check_ordering(g, eta);
    InducedOrdering out;
    out.contraction = contract(g, e);
    const auto &pre = out.contraction.preimages;
    out.retained.reserve(pre.size());
    for (const auto &group : pre) {
        auto cmp = [&](EdgeRef a, EdgeRef b) { return eta.label(a) < eta.label(b); };
        out.retained.push_back(rule == ParallelRule::keep_smaller ? *std::min_element(group.begin(), group.end(), cmp)
                                                                  : *std::max_element(group.begin(), group.end(), cmp));
    }
    std::vector<std::size_t> idx(pre.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return eta.label(out.retained[a]) < eta.label(out.retained[b]); });
    std::vector<int> labels(pre.size());
    for (std::size_t rank = 0; rank < idx.size(); ++rank)
        labels[idx[rank]] = static_cast<int>(rank + 1);
    out.ordering = EdgeOrdering::from_labels(std::move(labels));
    return out;
}

IntPolynomial chromatic_from_profile(const Graph &g, const NbcProfile &profile)
{
    const int n = g.order();
    if (n == 0)
        return IntPolynomial({BigInt(1)});
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) {
        BigInt c = static_cast<unsigned long>(profile.total(static_cast<std::size_t>(i)));
        coeffs[static_cast<std::size_t>(n - i)] = (i % 2 == 0) ? c : BigInt(-c);
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial chromatic_via_whitney(const Graph &g, const EdgeOrdering &eta)
{
    return chromatic_from_profile(g, nbc_profile(g, eta));
}

} // namespace listgap
