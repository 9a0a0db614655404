#include "listgap/listcolor.hpp"

#include "listgap/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace listgap {

namespace {

void normalise(std::vector<Color> &list)
{
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

/// Backtracking counter over vertex bitmasks (n <= 64).
class ListCounter {
public:
    ListCounter(const Graph &g, const ListAssignment &la) : n_(g.order())
    {
        std::map<Color, int> dense;
        for (const auto &list : la.lists())
            for (Color c : list)
                dense.emplace(c, 0);
        int next = 0;
        for (auto &[c, id] : dense)
            id = next++;
        colours_ = next;

        lists_.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v)
            for (Color c : la.list(v))
                lists_[static_cast<std::size_t>(v)].push_back(dense[c]);

        neighbours_.assign(static_cast<std::size_t>(n_), 0);
        for (const auto &e : g.edges()) {
            neighbours_[static_cast<std::size_t>(e.u)] |= bit(e.v);
            neighbours_[static_cast<std::size_t>(e.v)] |= bit(e.u);
        }
        blocked_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(colours_, 1)), 0);

        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    std::uint64_t count()
    {
        std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        return count_mask(all);
    }

private:
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

    int &blocked(Vertex v, int c)
    {
        return blocked_[static_cast<std::size_t>(v) * static_cast<std::size_t>(colours_) + static_cast<std::size_t>(c)];
    }

    std::uint64_t available(Vertex v)
    {
        std::uint64_t free = 0;
        for (int c : lists_[static_cast<std::size_t>(v)])
            if (blocked(v, c) == 0)
                ++free;
        return free;
    }

    std::uint64_t component_of(Vertex start, std::uint64_t mask) const
    {
        std::uint64_t seen = bit(start), frontier = bit(start);
        while (frontier) {
            Vertex v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = neighbours_[static_cast<std::size_t>(v)] & mask & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        return seen;
    }

    std::uint64_t count_mask(std::uint64_t mask)
    {
        if (mask == 0)
            return 1;
        std::uint64_t first = component_of(std::countr_zero(mask), mask);
        if (first != mask) {
            std::uint64_t product = count_connected(first);
            std::uint64_t rest = mask & ~first;
            while (rest && product) {
                std::uint64_t comp = component_of(std::countr_zero(rest), rest);
                product *= count_connected(comp);
                rest &= ~comp;
            }
            return product;
        }
        return count_connected(mask);
    }

    std::uint64_t count_connected(std::uint64_t mask)
    {
        if (std::popcount(mask) == 1)
            return available(std::countr_zero(mask));

        Vertex v = -1;
        for (Vertex w : order_)
            if (mask & bit(w)) {
                v = w;
                break;
            }
        const std::uint64_t rest = mask & ~bit(v);
        const std::uint64_t touched = neighbours_[static_cast<std::size_t>(v)] & rest;

        std::uint64_t total = 0;
        for (int c : lists_[static_cast<std::size_t>(v)]) {
            if (blocked(v, c) != 0)
                continue;
            bool dead = false;
            for (std::uint64_t t = touched; t; t &= t - 1) {
                Vertex w = std::countr_zero(t);
                if (++blocked(w, c) == 1 && !dead && available(w) == 0)
                    dead = true;
            }
            if (!dead)
                total += count_mask(rest);
            for (std::uint64_t t = touched; t; t &= t - 1)
                --blocked(std::countr_zero(t), c);
        }
        return total;
    }

    int n_;
    int colours_ = 0;
    std::vector<std::vector<int>> lists_;
    std::vector<std::uint64_t> neighbours_;
    std::vector<int> blocked_;
    std::vector<Vertex> order_;
};

} // namespace

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists))
{
    for (auto &list : lists_) {
        for (Color c : list)
            if (c < 0)
                throw std::invalid_argument("negative colour id " + std::to_string(c));
        normalise(list);
    }
}

ListAssignment ListAssignment::constant(int n, std::vector<Color> colours)
{
    return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), std::move(colours)));
}

ListAssignment ListAssignment::random(int n, int k, int universe, std::uint64_t seed)
{
    if (k < 0 || k > universe)
        throw std::invalid_argument("random lists need 0 <= k <= universe");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Color>> lists(static_cast<std::size_t>(n));
    std::vector<Color> pool(static_cast<std::size_t>(universe));
    for (auto &list : lists) {
        std::iota(pool.begin(), pool.end(), Color{1});
        // Partial Fisher-Yates: the first k slots become a uniform k-subset.
        for (int i = 0; i < k; ++i) {
            auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(universe - i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        list.assign(pool.begin(), pool.begin() + k);
    }
    return ListAssignment(std::move(lists));
}

bool ListAssignment::is_uniform(std::size_t k) const
{
    return std::all_of(lists_.begin(), lists_.end(), [k](const auto &l) { return l.size() == k; });
}

void ListAssignment::require_uniform(std::size_t k) const
{
    for (std::size_t v = 0; v < lists_.size(); ++v)
        if (lists_[v].size() != k)
            throw std::invalid_argument("not a " + std::to_string(k) + "-assignment: vertex " + std::to_string(v) +
                                        " has " + std::to_string(lists_[v].size()) + " colours");
}

void for_each_assignment_orbit(int n, std::size_t k, std::size_t universe,
                               const std::function<bool(const ListAssignment &)> &visit)
{
    if (n < 0 || k > universe)
        throw std::invalid_argument("orbit enumeration needs 0 <= k <= universe");
    std::vector<std::vector<Color>> lists(static_cast<std::size_t>(n));
    bool stop = false;
    // Colours in one class are interchangeable given the lists so far, so a
    // list is determined by how many colours it takes from each class.
    auto place = [&](auto &&self, std::size_t v, const std::vector<std::vector<Color>> &classes) -> void {
        if (v == lists.size()) {
            stop = !visit(ListAssignment(lists));
            return;
        }
        std::vector<std::size_t> take(classes.size(), 0);
        auto choose = [&](auto &&chooser, std::size_t c, std::size_t left) -> void {
            if (stop)
                return;
            if (c == classes.size()) {
                if (left != 0)
                    return;
                std::vector<Color> list;
                std::vector<std::vector<Color>> next;
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    const auto split = classes[i].begin() + static_cast<long>(take[i]);
                    list.insert(list.end(), classes[i].begin(), split);
                    if (take[i] > 0)
                        next.emplace_back(classes[i].begin(), split);
                    if (split != classes[i].end())
                        next.emplace_back(split, classes[i].end());
                }
                std::sort(list.begin(), list.end());
                lists[v] = std::move(list);
                self(self, v + 1, next);
                return;
            }
            const std::size_t most = std::min(left, classes[c].size());
            for (std::size_t t = 0; t <= most; ++t) {
                take[c] = t;
                chooser(chooser, c + 1, left - t);
            }
        };
        choose(choose, 0, k);
    };
    std::vector<Color> all;
    for (std::size_t c = 1; c <= universe; ++c)
        all.push_back(static_cast<Color>(c));
    place(place, 0, {all});
}

ListAssignment read_lists(std::string_view text, int n)
{
    std::vector<std::optional<std::vector<Color>>> rows(static_cast<std::size_t>(n));
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        if (std::all_of(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }))
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("lists: expected \"v: c1 c2 ...\"", line_no);
        std::istringstream head(line.substr(0, colon));
        long v = -1;
        if (!(head >> v) || v < 0 || v >= n)
            throw ParseError("lists: bad vertex id", line_no);
        std::string extra;
        if (head >> extra)
            throw ParseError("lists: bad vertex id", line_no);
        if (rows[static_cast<std::size_t>(v)])
            throw ParseError("lists: vertex " + std::to_string(v) + " listed twice", line_no);
        std::istringstream body(line.substr(colon + 1));
        std::vector<Color> colours;
        std::string token;
        while (body >> token) {
            Color c = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), c);
            if (ec != std::errc() || ptr != token.data() + token.size() || c < 0)
                throw ParseError("lists: bad colour \"" + token + "\"", line_no);
            colours.push_back(c);
        }
        rows[static_cast<std::size_t>(v)] = std::move(colours);
    }
    std::vector<std::vector<Color>> lists;
    for (int v = 0; v < n; ++v) {
        if (!rows[static_cast<std::size_t>(v)])
            throw ParseError("lists: missing line for vertex " + std::to_string(v), line_no);
        lists.push_back(std::move(*rows[static_cast<std::size_t>(v)]));
    }
    return ListAssignment(std::move(lists));
}

std::string write_lists(const ListAssignment &la)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < la.vertex_count(); ++v) {
        out << v << ':';
        for (Color c : la.lists()[v])
            out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

std::size_t alpha(const ListAssignment &la, const Graph &g, EdgeRef e)
{
    const Edge &ed = g.edge(e);
    const auto &a = la.list(ed.u);
    const auto &b = la.list(ed.v);
    std::vector<Color> diff;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    return diff.size();
}

std::size_t beta(const ListAssignment &la, std::span<const Vertex> vertices)
{
    if (vertices.empty())
        throw std::invalid_argument("beta of an empty vertex set");
    std::vector<const std::vector<Color> *> lists;
    lists.reserve(vertices.size());
    for (Vertex v : vertices)
        lists.push_back(&la.list(v));
    std::sort(lists.begin(), lists.end(), [](auto *a, auto *b) { return a->size() < b->size(); });
    std::vector<Color> acc = *lists.front();
    std::vector<Color> next;
    for (std::size_t i = 1; i < lists.size() && !acc.empty(); ++i) {
        next.clear();
        std::set_intersection(acc.begin(), acc.end(), lists[i]->begin(), lists[i]->end(), std::back_inserter(next));
        acc.swap(next);
    }
    return acc.size();
}

BigInt count_list_colorings(const Graph &g, const ListAssignment &la, std::uint64_t budget)
{
    if (la.vertex_count() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("list assignment covers " + std::to_string(la.vertex_count()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    if (g.order() > 64)
        throw std::invalid_argument("backtracking counter supports at most 64 vertices");

    BigInt leaves = 1;
    for (const auto &list : la.lists())
        leaves *= static_cast<unsigned long>(list.size());
    if (leaves > BigInt(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("list colouring count", to_string(leaves) + " leaves", budget);

    ListCounter counter(g, la);
    return BigInt(static_cast<unsigned long>(counter.count()));
}

BigInt count_list_colorings_nbc(std::span<const NbcForest> forests, const ListAssignment &la)
{
    BigInt total = 0;
    for (const auto &forest : forests) {
        BigInt term = 1;
        for (const auto &comp : forest.components()) {
            term *= static_cast<unsigned long>(beta(la, comp));
            if (term == 0)
                break;
        }
        if (forest.edges.size() % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

BigInt count_list_colorings_nbc(const Graph &g, const EdgeOrdering &eta, const ListAssignment &la)
{
    if (la.vertex_count() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("list assignment does not match the graph");
    BigInt total = 0;
    for_each_nbc_forest(g, eta, std::nullopt, [&](const NbcForest &forest) {
        total += count_list_colorings_nbc(std::span<const NbcForest>(&forest, 1), la);
    });
    return total;
}

GapResult gap(const Graph &g, const ListAssignment &la, std::size_t k, const IntPolynomial &chromatic,
              std::uint64_t budget)
{
    la.require_uniform(k);
    GapResult r;
    r.list_count = count_list_colorings(g, la, budget);
    Rational pk = chromatic.evaluate(Rational(static_cast<unsigned long>(k)));
    r.chromatic_value = pk.get_num();
    r.gap = r.list_count - r.chromatic_value;
    return r;
}

GapResult gap(const Graph &g, const ListAssignment &la, std::size_t k, std::uint64_t budget)
{
    la.require_uniform(k);
    IntPolynomial chromatic = g.size() <= default_deletion_contraction_edges
                                  ? chromatic_deletion_contraction(g)
                                  : chromatic_via_whitney(g, EdgeOrdering::canonical(g.size()));
    return gap(g, la, k, chromatic, budget);
}

} // namespace listgap
