#include "listgap/search.hpp"

#include "listgap/chromatic.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace listgap {

namespace {

/// Maximum cardinality search, ties to the smallest index. For a chordal graph
/// the earlier neighbours of each vertex form a clique.
std::vector<Vertex> mcs_order(const Graph &g)
{
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!done[static_cast<std::size_t>(v)] &&
                (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
                pick = v;
        done[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
        for (Vertex w : g.neighbors(pick))
            ++weight[static_cast<std::size_t>(w)];
    }
    return order;
}

BigInt binomial(std::size_t a, std::size_t b)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

/// All k-subsets of {1..universe} in lexicographic order.
std::vector<std::vector<Color>> k_subsets(std::size_t universe, std::size_t k)
{
    std::vector<std::vector<Color>> out;
    std::vector<Color> cur;
    auto rec = [&](auto &&self, Color next) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (Color c = next; c <= static_cast<Color>(universe); ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<Color> first_colours(std::size_t k)
{
    std::vector<Color> c;
    for (std::size_t i = 1; i <= k; ++i)
        c.push_back(static_cast<Color>(i));
    return c;
}

class ExactSearch {
public:
    ExactSearch(const Graph &g, std::size_t k, std::size_t universe, const ExactOptions &options)
        : g_(g), k_(k), universe_(universe), options_(options), order_(mcs_order(g))
    {
        const int n = g.order();
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
        back_degree_.assign(static_cast<std::size_t>(n), 0);
        for (const Edge &e : g.edges()) {
            int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
            ++back_degree_[static_cast<std::size_t>(std::max(a, b))];
        }
        // prefix_[j] = subgraph induced on the first j vertices of the order.
        for (int j = 0; j <= n; ++j) {
            std::vector<std::pair<int, int>> edges;
            for (const Edge &e : g.edges()) {
                int a = pos[static_cast<std::size_t>(e.u)], b = pos[static_cast<std::size_t>(e.v)];
                if (a < j && b < j)
                    edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            prefix_.push_back(Graph::from_edge_list(j, edges));
        }
        lists_.assign(static_cast<std::size_t>(n), {});
        if (!options.canonicalize)
            subsets_ = k_subsets(universe, k);
    }

    SearchResult run()
    {
        const int n = g_.order();
        best_ = ListAssignment::constant(n, first_colours(k_));
        best_value_ = count_list_colorings(g_, best_, default_budget);
        ++evaluations_;

        std::vector<std::vector<Color>> classes{first_colours(universe_)};
        if (n > 0)
            place(0, classes);

        SearchResult r;
        r.assignment = best_;
        r.value = best_value_;
        r.method = SearchMethod::exhaustive;
        r.exhaustive = true;
        r.universe = universe_;
        r.evaluations = evaluations_;
        r.iterations = evaluations_;
        return r;
    }

private:
    void charge()
    {
        if (++evaluations_ > options_.budget)
            throw BudgetExceeded("exhaustive list search", "more than " + std::to_string(options_.budget) + " evaluations",
                                 options_.budget);
    }

    ListAssignment prefix_lists(std::size_t j) const
    {
        return ListAssignment(std::vector<std::vector<Color>>(lists_.begin(), lists_.begin() + static_cast<long>(j)));
    }

    ListAssignment full_lists() const
    {
        std::vector<std::vector<Color>> lists(lists_.size());
        for (std::size_t i = 0; i < lists_.size(); ++i)
            lists[static_cast<std::size_t>(order_[i])] = lists_[i];
        return ListAssignment(std::move(lists));
    }

    /// Called once lists_[j] is set. Returns false if the subtree is cut.
    bool visit(std::size_t j)
    {
        const std::size_t n = lists_.size();
        if (j + 1 == n) {
            charge();
            BigInt value = count_list_colorings(prefix_[n], prefix_lists(n), default_budget);
            if (value < best_value_) {
                best_value_ = value;
                best_ = full_lists();
            }
            return false;
        }
        if (options_.prune) {
            charge();
            BigInt bound = count_list_colorings(prefix_[j + 1], prefix_lists(j + 1), default_budget);
            for (std::size_t i = j + 1; i < n && bound > 0; ++i)
                bound *= back_degree_[i] >= static_cast<int>(k_) ? 0 : static_cast<long>(k_) - back_degree_[i];
            if (bound >= best_value_)
                return false;
        }
        return true;
    }

    void place(std::size_t j, const std::vector<std::vector<Color>> &classes)
    {
        if (!options_.canonicalize) {
            for (const auto &s : subsets_) {
                lists_[j] = s;
                if (visit(j))
                    place(j + 1, classes);
            }
            return;
        }
        // Colours within a class are interchangeable given the lists so far, so
        // only the number taken from each class matters.
        std::vector<std::size_t> take(classes.size(), 0);
        auto choose = [&](auto &&self, std::size_t c, std::size_t left) -> void {
            if (c == classes.size()) {
                if (left != 0)
                    return;
                std::vector<Color> list;
                std::vector<std::vector<Color>> next;
                for (std::size_t i = 0; i < classes.size(); ++i) {
                    const auto &cls = classes[i];
                    std::vector<Color> chosen(cls.begin(), cls.begin() + static_cast<long>(take[i]));
                    std::vector<Color> rest(cls.begin() + static_cast<long>(take[i]), cls.end());
                    list.insert(list.end(), chosen.begin(), chosen.end());
                    if (!chosen.empty())
                        next.push_back(std::move(chosen));
                    if (!rest.empty())
                        next.push_back(std::move(rest));
                }
                std::sort(list.begin(), list.end());
                lists_[j] = list;
                if (visit(j))
                    place(j + 1, next);
                return;
            }
            const std::size_t most = std::min(left, classes[c].size());
            for (std::size_t t = 0; t <= most; ++t) {
                take[c] = t;
                self(self, c + 1, left - t);
            }
            take[c] = 0;
        };
        choose(choose, 0, k_);
    }

    const Graph &g_;
    std::size_t k_;
    std::size_t universe_;
    ExactOptions options_;
    std::vector<Vertex> order_;
    std::vector<int> back_degree_;
    std::vector<Graph> prefix_;
    std::vector<std::vector<Color>> lists_;
    std::vector<std::vector<Color>> subsets_;
    ListAssignment best_;
    BigInt best_value_;
    std::uint64_t evaluations_ = 0;
};

void check_search_args(std::size_t k, std::size_t universe)
{
    if (k == 0)
        throw std::invalid_argument("list search needs k >= 1");
    if (universe < k)
        throw std::invalid_argument("universe smaller than k");
}

} // namespace

std::string to_string(SearchMethod m) { return m == SearchMethod::exhaustive ? "exhaustive" : "local-search"; }

std::size_t default_universe(int n, std::size_t k)
{
    const auto nn = static_cast<std::size_t>(std::max(n, 0));
    return std::max(k, std::min(nn * k, k + nn));
}

ListAssignment canonical_relabel(const ListAssignment &la)
{
    std::map<Color, Color> relabel;
    std::vector<std::vector<Color>> lists;
    for (const auto &list : la.lists()) {
        std::vector<Color> out;
        for (Color c : list) {
            auto [it, fresh] = relabel.emplace(c, static_cast<Color>(relabel.size() + 1));
            out.push_back(it->second);
        }
        lists.push_back(std::move(out));
    }
    return ListAssignment(std::move(lists));
}

SearchResult exact_pl(const Graph &g, std::size_t k, std::size_t universe, const ExactOptions &options)
{
    check_search_args(k, universe);
    if (!options.canonicalize && !options.prune) {
        BigInt total;
        mpz_pow_ui(total.get_mpz_t(), binomial(universe, k).get_mpz_t(), static_cast<unsigned long>(g.order()));
        if (total > BigInt(static_cast<unsigned long>(options.budget)))
            throw BudgetExceeded("exhaustive list search", to_string(total) + " assignments", options.budget);
    }
    ExactSearch search(g, k, universe, options);
    return search.run();
}

SearchResult heuristic_min(const Graph &g, std::size_t k, std::size_t universe, std::uint64_t iters,
                           std::uint64_t seed)
{
    check_search_args(k, universe);
    const int n = g.order();
    std::mt19937_64 rng(seed);

    SearchResult r;
    r.method = SearchMethod::local_search;
    r.seed = seed;
    r.universe = universe;

    auto evaluate = [&](const ListAssignment &la) {
        ++r.evaluations;
        return count_list_colorings(g, la, default_budget);
    };
    // Lower value first, then the lexicographically smaller canonical form.
    auto better = [](const BigInt &va, const ListAssignment &a, const BigInt &vb, const ListAssignment &b) {
        if (va != vb)
            return va < vb;
        return canonical_relabel(a) < canonical_relabel(b);
    };

    ListAssignment current = ListAssignment::constant(n, first_colours(k));
    BigInt value = evaluate(current);
    r.assignment = current;
    r.value = value;

    while (r.iterations < iters) {
        ++r.iterations;
        std::optional<ListAssignment> step;
        BigInt step_value;
        for (int v = 0; v < n; ++v) {
            const auto &list = current.list(v);
            for (std::size_t slot = 0; slot < list.size(); ++slot)
                for (Color c = 1; c <= static_cast<Color>(universe); ++c) {
                    if (std::binary_search(list.begin(), list.end(), c))
                        continue;
                    auto lists = current.lists();
                    lists[static_cast<std::size_t>(v)][slot] = c;
                    ListAssignment next(std::move(lists));
                    BigInt nv = evaluate(next);
                    if (!step || better(nv, next, step_value, *step)) {
                        step = std::move(next);
                        step_value = nv;
                    }
                }
        }
        if (step && step_value < value) {
            current = std::move(*step);
            value = step_value;
        } else {
            current = ListAssignment::random(n, static_cast<int>(k), static_cast<int>(universe), rng());
            value = evaluate(current);
        }
        if (better(value, current, r.value, r.assignment)) {
            r.assignment = current;
            r.value = value;
        }
    }
    return r;
}

std::vector<ScanRow> threshold_scan(const Graph &g, std::size_t k_max, const ScanOptions &options)
{
    const IntPolynomial chromatic = g.size() <= default_deletion_contraction_edges
                                        ? chromatic_deletion_contraction(g)
                                        : chromatic_via_whitney(g, EdgeOrdering::canonical(g.size()));
    std::vector<ScanRow> rows;
    for (std::size_t k = 2; k <= k_max; ++k) {
        ScanRow row;
        row.k = k;
        row.universe = std::max(k, options.universe.value_or(default_universe(g.order(), k)));
        row.chromatic_value = chromatic.evaluate(Rational(static_cast<unsigned long>(k))).get_num();
        SearchResult found;
        try {
            ExactOptions eo;
            eo.budget = options.budget;
            found = exact_pl(g, k, row.universe, eo);
        } catch (const BudgetExceeded &) {
            found = heuristic_min(g, k, row.universe, options.iters, options.seed);
        }
        row.min_found = found.value;
        row.method = found.method;
        row.witness = found.assignment;
        row.equal = row.min_found == row.chromatic_value;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace listgap
