#include "listgap/bounds.hpp"

#include "listgap/chromatic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

namespace listgap {

namespace {

Rational rat(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }
Rational rat(long v) { return Rational(v); }
Rational rat(const BigInt &v) { return Rational(v); }

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::string display(double v)
{
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

std::string edge_name(const Graph &g, EdgeRef e)
{
    const Edge &ed = g.edge(e);
    return "e" + std::to_string(e.index) + "=(" + std::to_string(ed.u) + "," + std::to_string(ed.v) + ")";
}

std::string edge_set_name(const EdgeSet &edges)
{
    std::string out = "[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(edges[i].index);
    }
    return out + "]";
}

std::string lists_inline(const ListAssignment &la)
{
    std::string out;
    for (std::size_t v = 0; v < la.vertex_count(); ++v) {
        if (v)
            out += "; ";
        out += std::to_string(v) + ":";
        for (Color c : la.lists()[v])
            out += " " + std::to_string(c);
    }
    return out;
}

/// Aggregates many instances of one inequality into a record. The reported
/// instance is the first violation, or otherwise the one with least slack.
class Tally {
public:
    enum class Relation { at_least, at_most, equal };

    Tally(std::string id, Relation relation, std::string preconditions)
        : relation_(relation)
    {
        record_.id = std::move(id);
        record_.preconditions = std::move(preconditions);
    }

    void add(const Rational &lhs, const Rational &rhs, const std::function<std::string()> &witness)
    {
        Rational slack = relation_ == Relation::at_most ? Rational(rhs - lhs) : Rational(lhs - rhs);
        bool ok = relation_ == Relation::equal ? lhs == rhs : slack >= 0;
        if (relation_ == Relation::equal)
            slack = 0;
        ++record_.instances;
        if (violated_)
            return;
        if (!ok || !have_best_ || slack < best_slack_) {
            have_best_ = true;
            best_slack_ = slack;
            record_.lhs = to_string(lhs);
            record_.rhs = to_string(rhs);
            record_.witness = witness();
            violated_ = !ok;
        }
    }

    /// For comparisons decided symbolically (radicals): keeps the first instance or first violation.
    void add_decision(bool ok, std::string lhs, std::string rhs, const std::function<std::string()> &witness)
    {
        ++record_.instances;
        if (violated_ || (have_best_ && ok))
            return;
        have_best_ = true;
        record_.lhs = std::move(lhs);
        record_.rhs = std::move(rhs);
        record_.witness = witness();
        violated_ = !ok;
    }

    void not_applicable(std::string why)
    {
        inapplicable_ = true;
        record_.preconditions = std::move(why);
    }

    BoundRecord record() const
    {
        BoundRecord r = record_;
        if (inapplicable_ || r.instances == 0) {
            r.verdict = Verdict::not_applicable;
            r.preconditions_met = false;
            if (!inapplicable_)
                r.preconditions = "no applicable instance (" + r.preconditions + ")";
            return r;
        }
        r.preconditions_met = true;
        r.verdict = violated_ ? Verdict::violated : Verdict::holds;
        return r;
    }

private:
    Relation relation_;
    BoundRecord record_;
    bool have_best_ = false;
    bool violated_ = false;
    bool inapplicable_ = false;
    Rational best_slack_;
};

using Rel = Tally::Relation;

std::uint64_t choose2(std::uint64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

struct EdgeData {
    InducedOrdering induced;
    NbcProfile profile;
    std::uint64_t nbc2 = 0;
    std::size_t triangles = 0;
};

std::vector<Rational> sample_points(std::size_t m)
{
    std::vector<Rational> xs;
    for (long x : {static_cast<long>(m) - 1, static_cast<long>(m), static_cast<long>(m) + 5})
        if (x >= 0)
            xs.emplace_back(x);
    return xs;
}

IntPolynomial reference_chromatic(const Graph &g, const NbcProfile &profile)
{
    return chromatic_from_profile(g, profile);
}

/// P(G,L) by backtracking, falling back to the forest expansion when the
/// backtracking budget refuses.
BigInt list_count(const Graph &g, const EdgeOrdering &eta, const ListAssignment &la, std::uint64_t budget,
                  bool *used_fallback)
{
    try {
        return count_list_colorings(g, la, budget);
    } catch (const BudgetExceeded &) {
        if (used_fallback)
            *used_fallback = true;
        return count_list_colorings_nbc(g, eta, la);
    }
}

std::vector<BoundRecord> gap_bound_records(const Graph &g, const ListAssignment &la, std::size_t k,
                                           const std::function<BigInt()> &gap_value)
{
    const std::size_t m = g.size();
    const int n = g.order();
    Tally general("gap_bound", Rel::at_least, "m >= 4, k >= m-1, k-assignment");
    Tally k3free("gap_bound_k3free", Rel::at_least, "triangle-free, m >= 4, k >= m-1, k-assignment");

    std::string failed;
    if (m < 4)
        failed = "m < 4";
    else if (k + 1 < m)
        failed = "k < m-1";
    else if (!la.is_uniform(k))
        failed = "lists are not a k-assignment";
    else if (la.vertex_count() != static_cast<std::size_t>(n))
        failed = "lists do not match the graph";

    const bool triangle_free = triangle_count(g) == 0;
    BoundRecord rg, rk;
    if (!failed.empty()) {
        general.not_applicable(failed);
        k3free.not_applicable(triangle_free ? failed : "graph has a triangle");
        rg = general.record();
        rk = k3free.record();
    } else {
        BigInt gap = gap_value();
        std::uint64_t alpha_sum = 0;
        for (std::size_t i = 0; i < m; ++i)
            alpha_sum += alpha(la, g, EdgeRef{i});
        const Rational scale = Rational(2, 3) * power(rat(static_cast<std::uint64_t>(k)), n - 5) * rat(alpha_sum);
        auto witness = [&] { return "k=" + std::to_string(k) + " sum_alpha=" + std::to_string(alpha_sum) + " lists={" + lists_inline(la) + "}"; };

        const Rational c_general = *nbc2_lower_general(m);
        general.add(rat(gap), c_general * scale, witness);
        rg = general.record();
        rg.c_used = to_string(c_general);
        rg.c_source = "general";

        if (triangle_free) {
            const BigInt c_exact = big(choose2(m - 1)) - big(c4(g));
            k3free.add(rat(gap), rat(c_exact) * scale, witness);
            rk = k3free.record();
            rk.c_used = to_string(c_exact);
            rk.c_source = "k3free-exact";
        } else {
            k3free.not_applicable("graph has a triangle");
            rk = k3free.record();
        }
    }
    return {rg, rk};
}

/// Visits every set in NBC(G/e) mapped back through the retained preimages.
std::uint64_t injection_failures(const Graph &g, const EdgeOrdering &eta, EdgeRef e, const InducedOrdering &induced)
{
    std::uint64_t failures = 0;
    for_each_nbc_forest(induced.contraction.graph, induced.ordering, std::nullopt, [&](const NbcForest &f) {
        EdgeSet lifted{e};
        for (EdgeRef h : f.edges)
            lifted.push_back(induced.retained[h.index]);
        if (!is_nbc(g, eta, lifted))
            ++failures;
    });
    return failures;
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::violated:
        return "violated";
    case Verdict::not_applicable:
        return "not-applicable";
    }
    return "unknown";
}

bool BoundReport::any_violated() const
{
    return std::any_of(records.begin(), records.end(), [](const auto &r) { return r.verdict == Verdict::violated; });
}

const BoundRecord *BoundReport::find(const std::string &id) const
{
    for (const auto &r : records)
        if (r.id == id)
            return &r;
    return nullptr;
}

bool fisher_bound_holds(std::uint64_t triangles, std::uint64_t edges)
{
    if (edges == 0)
        return triangles == 0;
    // 6T <= m (sqrt(8m+1) - 3)  <=>  (6T + 3m)^2 <= m^2 (8m + 1)
    BigInt lhs = big(triangles) * 6 + big(edges) * 3;
    BigInt m = big(edges);
    return lhs * lhs <= m * m * (m * 8 + 1);
}

double fisher_bound_value(std::uint64_t edges)
{
    const double m = static_cast<double>(edges);
    return m * (std::sqrt(8 * m + 1) - 3) / 6;
}

bool maxdeg_triangle_bound_holds(std::uint64_t triangles, std::uint64_t edges, std::uint64_t t)
{
    if (t > edges)
        throw std::invalid_argument("maxdeg triangle bound needs t <= edges");
    // 6T <= d (3 + sqrt(8d + 1)) with d = edges - t  <=>  6T - 3d <= d sqrt(8d + 1)
    BigInt d = big(edges - t);
    BigInt lhs = big(triangles) * 6 - d * 3;
    if (lhs <= 0)
        return true;
    return lhs * lhs <= d * d * (d * 8 + 1);
}

double maxdeg_triangle_bound_value(std::uint64_t edges, std::uint64_t t)
{
    const double d = static_cast<double>(edges - t);
    return d / 6 * (3 + std::sqrt(8 * d + 1));
}

std::uint64_t nbc2_closed_form(const Graph &h) { return choose2(h.size()) - triangle_count(h); }

std::optional<Rational> nbc2_lower_general(std::size_t m)
{
    if (m < 4)
        return std::nullopt;
    Rational c(static_cast<long>((m - 1) * (m - 3)), 8);
    c.canonicalize();
    return c;
}

std::optional<K3FreeBound> nbc2_lower_k3free(const Graph &g)
{
    const std::uint64_t m = g.size();
    if (m < 3 || triangle_count(g) != 0)
        return std::nullopt;
    const std::uint64_t cycles = c4(g);
    K3FreeBound b;
    b.exact = big(choose2(m - 1)) - big(cycles);
    b.closed_form = static_cast<double>(choose2(m - 2)) + 2 * std::sqrt(static_cast<double>(m)) - 3;
    if (m + 1 >= cycles) {
        BigInt lhs = big(m + 1 - cycles);
        b.chain_holds = lhs * lhs >= big(m) * 4;
    }
    return b;
}

BoundRecord q_lower_bound(const Graph &g, const NbcProfile &profile, EdgeRef e, const Rational &x, const Rational &c)
{
    const long m = static_cast<long>(g.size());
    Tally t("q_lower_bound", Rel::at_least, "x >= m-1 >= 3");
    if (m - 1 < 3)
        t.not_applicable("m - 1 < 3");
    else if (x < m - 1)
        t.not_applicable("x < m-1");
    else {
        Rational lhs = q_eval(g, profile, e, x);
        Rational rhs = Rational(2, 3) * c * power(x, g.order() - 4);
        t.add(lhs, rhs, [&] { return edge_name(g, e) + " x=" + to_string(x) + " c=" + to_string(c); });
    }
    return t.record();
}

BoundRecord q_lower_bound(const Graph &g, const EdgeOrdering &eta, EdgeRef e, const Rational &x, const Rational &c)
{
    return q_lower_bound(g, nbc_profile(g, eta), e, x, c);
}

Rational gap_lower_via_q(const Graph &g, const NbcProfile &profile, const ListAssignment &la, std::size_t k)
{
    la.require_uniform(k);
    if (k < 2)
        throw std::invalid_argument("gap lower bound needs k >= 2");
    const Rational kk = rat(static_cast<std::uint64_t>(k));
    Rational sum = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::size_t a = alpha(la, g, EdgeRef{i});
        if (a)
            sum += rat(static_cast<std::uint64_t>(a)) * q_eval(g, profile, EdgeRef{i}, kk);
    }
    return sum / kk;
}

Rational gap_lower_via_q(const Graph &g, const EdgeOrdering &eta, const ListAssignment &la, std::size_t k)
{
    return gap_lower_via_q(g, nbc_profile(g, eta), la, k);
}

std::optional<bool> product_mean_bound_holds(std::span<const Rational> d, std::span<const Rational> q,
                                             const Rational &x)
{
    if (d.empty() || d.size() != q.size())
        return std::nullopt;
    Rational qsum = 0, weighted = 0, product = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0 || q[i] <= 0 || x < d[i])
            return std::nullopt;
        qsum += q[i];
        weighted += q[i] * d[i];
        product *= x - d[i];
    }
    const long r = static_cast<long>(d.size());
    Rational rhs = power(x, r) - power(x, r - 1) * weighted / qsum;
    return product <= rhs;
}

std::vector<BoundRecord> verify_gap_bound(const Graph &g, const EdgeOrdering &eta, const ListAssignment &la,
                                          std::size_t k, std::uint64_t budget)
{
    return gap_bound_records(g, la, k, [&] {
        const NbcProfile profile = nbc_profile(g, eta);
        BigInt pl = list_count(g, eta, la, budget, nullptr);
        Rational pk = reference_chromatic(g, profile).evaluate(rat(static_cast<std::uint64_t>(k)));
        return BigInt(pl - pk.get_num());
    });
}

PositivityResult verify_list_gap_positivity(const Graph &g, std::size_t k, std::size_t universe, std::uint64_t budget)
{
    PositivityResult out;
    Tally t("list_gap_positivity", Rel::at_least, "k >= m-1, every k-subset assignment from the universe");
    const std::size_t m = g.size();
    if (k + 1 < m)
        t.not_applicable("k < m-1");
    else if (k > universe)
        t.not_applicable("k exceeds the universe");
    if (k + 1 < m || k > universe) {
        out.record = t.record();
        return out;
    }

    const IntPolynomial chromatic = g.size() <= default_deletion_contraction_edges
                                        ? chromatic_deletion_contraction(g)
                                        : chromatic_via_whitney(g, EdgeOrdering::canonical(m));
    const BigInt pk = chromatic.evaluate(rat(static_cast<std::uint64_t>(k))).get_num();

    for_each_assignment_orbit(g.order(), k, universe, [&](const ListAssignment &la) {
        if (out.assignments == budget)
            throw BudgetExceeded("exhaustive positivity check", "more than " + std::to_string(budget) + " assignment orbits",
                                 budget);
        ++out.assignments;
        const bool edge_constant = std::all_of(g.edges().begin(), g.edges().end(),
                                               [&](const Edge &e) { return la.list(e.u) == la.list(e.v); });
        const BigInt gapv = count_list_colorings(g, la, default_budget) - pk;
        bool ok;
        if (edge_constant) {
            ++out.edge_constant;
            ok = gapv == 0;
        } else {
            ok = gapv > 0;
            if (!out.min_positive_gap || gapv < *out.min_positive_gap)
                out.min_positive_gap = gapv;
        }
        t.add_decision(ok, to_string(gapv), edge_constant ? "0 (edge-constant, must equal)" : "0 (must exceed)",
                       [&] { return std::string(edge_constant ? "edge-constant " : "") + "lists={" + lists_inline(la) + "}"; });
        return true;
    });
    out.record = t.record();
    if (out.record.verdict == Verdict::holds) {
        out.record.lhs = out.min_positive_gap ? to_string(*out.min_positive_gap) : "none";
        out.record.rhs = "0";
        out.record.witness = "orbits=" + std::to_string(out.assignments) + " edge_constant=" +
                             std::to_string(out.edge_constant) + " (lhs = smallest gap among the others)";
    }
    return out;
}

std::uint64_t contraction_injection_failures(const Graph &g, const EdgeOrdering &eta, EdgeRef e, ParallelRule rule)
{
    return injection_failures(g, eta, e, induced_ordering(g, eta, e, rule));
}

BoundReport verify_all(const Graph &g, const EdgeOrdering &eta, const std::optional<ListAssignment> &la,
                       std::optional<std::size_t> k, const VerifyOptions &options)
{
    BoundReport report;
    const int n = g.order();
    const std::size_t m = g.size();
    const NbcProfile profile = nbc_profile(g, eta);
    const auto xs = sample_points(m);

    std::vector<EdgeData> per_edge;
    per_edge.reserve(m);
    std::vector<RatPolynomial> q(m);
    for (std::size_t i = 0; i < m; ++i) {
        EdgeData d;
        d.induced = induced_ordering(g, eta, EdgeRef{i});
        d.profile = nbc_profile(d.induced.contraction.graph, d.induced.ordering);
        d.nbc2 = d.profile.total(2);
        d.triangles = triangles_through(g, EdgeRef{i});
        per_edge.push_back(std::move(d));
        q[i] = q_poly(g, profile, EdgeRef{i});
    }
    auto N = [&](std::size_t e, long i) -> Rational {
        if (i < 1)
            return 0;
        return rat(profile.per_edge(EdgeRef{e}, static_cast<std::size_t>(i)));
    };

    // Whitney expansion against deletion-contraction.
    {
        Tally t("whitney_expansion", Rel::equal, "m <= 24 for the deletion-contraction reference");
        if (m <= default_deletion_contraction_edges) {
            IntPolynomial whitney = chromatic_from_profile(g, profile);
            IntPolynomial reference = chromatic_deletion_contraction(g);
            t.add_decision(whitney == reference, whitney.pretty(), reference.pretty(), [] { return std::string(); });
        } else {
            t.not_applicable("m > 24");
        }
        report.records.push_back(t.record());
    }

    // i |NBC_{i+1}(G,e)| <= (m-i) |NBC_i(G,e)|.
    {
        Tally t("nbc_edge_ratio", Rel::at_most, "1 <= i <= n-2");
        for (std::size_t e = 0; e < m; ++e)
            for (long i = 1; i <= n - 2; ++i)
                t.add(rat(i) * N(e, i + 1), (static_cast<long>(m) - i) * N(e, i),
                      [&] { return edge_name(g, EdgeRef{e}) + " i=" + std::to_string(i); });
        report.records.push_back(t.record());
    }

    // |NBC_i(G,e)| >= |NBC_{i-1}(G/e)|, plus the explicit injection A -> A + e.
    {
        Tally t("nbc_contraction_bound", Rel::at_least, "1 <= i <= n-1");
        Tally inj("nbc_contraction_injection", Rel::equal, "smaller label kept on merged parallel edges");
        for (std::size_t e = 0; e < m; ++e) {
            for (long i = 1; i <= n - 1; ++i)
                t.add(N(e, i), rat(per_edge[e].profile.total(static_cast<std::size_t>(i - 1))),
                      [&] { return edge_name(g, EdgeRef{e}) + " i=" + std::to_string(i); });
            inj.add(rat(injection_failures(g, eta, EdgeRef{e}, per_edge[e].induced)), 0,
                    [&] { return edge_name(g, EdgeRef{e}) + " (lhs = sets not mapped into NBC(G,e))"; });
        }
        report.records.push_back(t.record());
        report.records.push_back(inj.record());
    }

    // Pairing bounds on Q for x >= 0 (n >= 3), and the even-n refinement.
    {
        Tally all("q_pairing_bound", Rel::at_least, "n >= 3, x >= 0");
        Tally even("q_pairing_bound_even", Rel::at_least, "n >= 3 even, x >= 0");
        if (n < 3) {
            all.not_applicable("n < 3");
            even.not_applicable("n < 3");
        } else if (n % 2 == 1) {
            even.not_applicable("n odd");
        }
        if (n >= 3)
            for (std::size_t e = 0; e < m; ++e)
                for (const auto &x : xs) {
                    Rational lhs = q[e].evaluate(x);
                    Rational rhs2 = 0;
                    for (long i = 1; i <= n - 1; i += 2)
                        rhs2 += N(e, i) / i * (x - static_cast<long>(m) + i) * power(x, n - i - 1);
                    auto w = [&] { return edge_name(g, EdgeRef{e}) + " x=" + to_string(x); };
                    all.add(lhs, rhs2, w);
                    if (n % 2 == 0) {
                        Rational rhs3 = 0;
                        for (long i = 1; i <= n - 3; i += 2)
                            rhs3 += N(e, i) / i * (x - static_cast<long>(m) + i) * power(x, n - i - 1);
                        rhs3 += N(e, n - 1) / (n - 1) * x;
                        even.add(lhs, rhs3, w);
                    }
                }
        report.records.push_back(all.record());
        report.records.push_back(even.record());
    }

    // Contraction bound on Q for x >= m-1.
    {
        Tally final_bound("q_contraction_bound", Rel::at_least, "n >= 4, x >= m-1");
        Tally tail("q_odd_tail_bound", Rel::at_least, "n >= 5, x >= m-1");
        Tally tail_final("odd_tail_contraction_bound", Rel::at_least, "n >= 5, x >= m-1");
        if (n < 4)
            final_bound.not_applicable("n < 4");
        if (n < 5) {
            tail.not_applicable("n < 5");
            tail_final.not_applicable("n < 5");
        }
        if (n >= 4)
            for (std::size_t e = 0; e < m; ++e)
                for (const auto &x : xs) {
                    if (x < static_cast<long>(m) - 1)
                        continue;
                    auto w = [&] { return edge_name(g, EdgeRef{e}) + " x=" + to_string(x); };
                    Rational lhs = q[e].evaluate(x);
                    const Rational nbc2 = rat(per_edge[e].nbc2);
                    if (n == 4) {
                        final_bound.add(lhs, nbc2 * x / 3, w);
                    } else {
                        Rational middle = 0;
                        for (long i = 3; i <= n - 1; i += 2)
                            middle += rat(i - 1) * N(e, i) / i * power(x, n - i - 1);
                        Rational last = Rational(2, 3) * nbc2 * power(x, n - 4);
                        tail.add(lhs, middle, w);
                        tail_final.add(middle, last, w);
                        final_bound.add(lhs, last, w);
                    }
                }
        report.records.push_back(final_bound.record());
        report.records.push_back(tail.record());
        report.records.push_back(tail_final.record());
    }

    // |NBC_2(H)| = C(|E(H)|,2) - triangles(H) for G and every G/e.
    {
        Tally t("nbc2_identity", Rel::equal, "none");
        t.add(rat(profile.total(2)), rat(nbc2_closed_form(g)), [] { return std::string("G"); });
        for (std::size_t e = 0; e < m; ++e)
            t.add(rat(per_edge[e].nbc2), rat(nbc2_closed_form(per_edge[e].induced.contraction.graph)),
                  [&] { return "G/" + edge_name(g, EdgeRef{e}); });
        report.records.push_back(t.record());
    }

    // Triangle bounds on G and every G/e.
    {
        Tally fisher("fisher_triangle_bound", Rel::at_most, "none");
        Tally maxdeg("maxdeg_triangle_bound", Rel::at_most, "max degree of H >= t");
        auto check = [&](const Graph &h, const std::string &name, std::optional<std::size_t> t) {
            const std::uint64_t tri = triangle_count(h);
            fisher.add_decision(fisher_bound_holds(tri, h.size()), std::to_string(tri),
                                display(fisher_bound_value(h.size())), [&] { return name; });
            if (t && h.max_degree() >= *t && *t <= h.size())
                maxdeg.add_decision(maxdeg_triangle_bound_holds(tri, h.size(), *t), std::to_string(tri),
                                    display(maxdeg_triangle_bound_value(h.size(), *t)),
                                    [&] { return name + " t=" + std::to_string(*t); });
        };
        check(g, "G", g.max_degree());
        for (std::size_t e = 0; e < m; ++e)
            check(per_edge[e].induced.contraction.graph, "G/" + edge_name(g, EdgeRef{e}), per_edge[e].triangles);
        report.records.push_back(fisher.record());
        report.records.push_back(maxdeg.record());
    }

    // |NBC_2(G/e)| >= (m-1)(m-3)/8.
    {
        Tally t("nbc2_general_bound", Rel::at_least, "m >= 4");
        if (auto c = nbc2_lower_general(m)) {
            for (std::size_t e = 0; e < m; ++e)
                t.add(rat(per_edge[e].nbc2), *c, [&] { return "G/" + edge_name(g, EdgeRef{e}); });
        } else {
            t.not_applicable("m < 4");
        }
        report.records.push_back(t.record());
    }

    // Triangle-free: |NBC_2(G/e)| >= C(m-1,2) - c4(G) >= C(m-2,2) + 2 sqrt(m) - 3.
    {
        Tally t("nbc2_k3free_bound", Rel::at_least, "triangle-free, m >= 3");
        Tally chain("c4_radical_bound", Rel::at_least, "triangle-free, m >= 3");
        if (auto b = nbc2_lower_k3free(g)) {
            for (std::size_t e = 0; e < m; ++e)
                t.add(rat(per_edge[e].nbc2), rat(b->exact), [&] { return "G/" + edge_name(g, EdgeRef{e}); });
            chain.add_decision(b->chain_holds, to_string(b->exact), display(b->closed_form),
                               [&] { return "c4=" + std::to_string(c4(g)); });
        } else {
            std::string why = m < 3 ? "m < 3" : "graph has a triangle";
            t.not_applicable(why);
            chain.not_applicable(why);
        }
        report.records.push_back(t.record());
        report.records.push_back(chain.record());
    }

    // Q(G,e,x) >= (2c/3) x^(n-4) for x >= m-1 >= 3.
    {
        Tally general("q_lower_bound", Rel::at_least, "x >= m-1 >= 3");
        Tally k3free("q_lower_bound_k3free", Rel::at_least, "triangle-free, x >= m-1 >= 3");
        const auto k3 = nbc2_lower_k3free(g);
        if (m < 4) {
            general.not_applicable("m - 1 < 3");
            k3free.not_applicable("m - 1 < 3");
        } else {
            const Rational cg = *nbc2_lower_general(m);
            if (!k3)
                k3free.not_applicable("graph has a triangle");
            for (std::size_t e = 0; e < m; ++e)
                for (const auto &x : xs) {
                    if (x < static_cast<long>(m) - 1)
                        continue;
                    Rational lhs = q[e].evaluate(x);
                    auto w = [&] { return edge_name(g, EdgeRef{e}) + " x=" + to_string(x); };
                    general.add(lhs, Rational(2, 3) * cg * power(x, n - 4), w);
                    if (k3)
                        k3free.add(lhs, Rational(2, 3) * rat(k3->exact) * power(x, n - 4), w);
                }
        }
        report.records.push_back(general.record());
        report.records.push_back(k3free.record());
    }

    // List-colouring items.
    std::string list_failure;
    if (!la || !k)
        list_failure = "no k-assignment given";
    else if (la->vertex_count() != static_cast<std::size_t>(n))
        list_failure = "lists do not match the graph";
    else if (!la->is_uniform(*k))
        list_failure = "lists are not a k-assignment";
    else if (*k < 2)
        list_failure = "k < 2";

    Tally lower("forest_product_lower", Rel::at_least, "k-assignment, k >= 2");
    Tally upper("forest_product_upper", Rel::at_most, "k-assignment, k >= 2, i >= 1");
    Tally mean("product_mean_bound", Rel::at_most, "k-assignment, k >= 2, i >= 1");
    Tally agree("list_count_agreement", Rel::equal, "lists cover the graph");
    Tally lemma("gap_q_bound", Rel::at_least, "k-assignment, k >= 2");

    if (!list_failure.empty()) {
        for (Tally *t : {&lower, &upper, &mean, &lemma})
            t->not_applicable(list_failure);
        if (!la || la->vertex_count() != static_cast<std::size_t>(n))
            agree.not_applicable(list_failure);
    }
    if (la && la->vertex_count() == static_cast<std::size_t>(n)) {
        bool fallback = false;
        BigInt backtracking = list_count(g, eta, *la, options.budget, &fallback);
        BigInt inclusion_exclusion = count_list_colorings_nbc(g, eta, *la);
        if (fallback)
            agree.not_applicable("backtracking budget exceeded");
        else
            agree.add(rat(backtracking), rat(inclusion_exclusion), [] { return std::string("P(G,L) two ways"); });

        if (list_failure.empty()) {
            const std::size_t kk = *k;
            const Rational kr = rat(static_cast<std::uint64_t>(kk));

            // Reservoir-sample forests per size class.
            std::vector<std::vector<NbcForest>> sample(static_cast<std::size_t>(std::max(n, 1)));
            std::vector<std::uint64_t> seen(sample.size(), 0);
            std::mt19937_64 rng(options.seed);
            for_each_nbc_forest(g, eta, std::nullopt, [&](const NbcForest &f) {
                const std::size_t i = f.edges.size();
                const std::uint64_t count = ++seen[i];
                if (sample[i].size() < options.forest_sample_cap) {
                    sample[i].push_back(f);
                } else {
                    std::uint64_t j = rng() % count;
                    if (j < options.forest_sample_cap)
                        sample[i][static_cast<std::size_t>(j)] = f;
                }
            });

            for (std::size_t i = 0; i < sample.size(); ++i)
                for (const auto &f : sample[i]) {
                    Rational product = 1;
                    const auto comps = f.components();
                    for (const auto &comp : comps)
                        product *= rat(static_cast<std::uint64_t>(beta(*la, comp)));
                    std::uint64_t alpha_sum = 0;
                    for (EdgeRef e : f.edges)
                        alpha_sum += alpha(*la, g, e);
                    const long free = n - static_cast<long>(i);
                    Rational diff = product - power(kr, free);
                    auto w = [&] { return "i=" + std::to_string(i) + " forest=" + edge_set_name(f.edges); };
                    lower.add(diff, -power(kr, free - 1) * rat(alpha_sum), w);
                    if (i >= 1) {
                        upper.add(diff, -power(kr, free - 1) / static_cast<long>(i) * rat(alpha_sum), w);

                        std::vector<Rational> d, qw;
                        for (const auto &comp : comps) {
                            if (comp.size() < 2)
                                continue;
                            std::uint64_t s = 0;
                            for (EdgeRef e : f.edges)
                                if (f.component[static_cast<std::size_t>(g.edge(e).u)] ==
                                    f.component[static_cast<std::size_t>(comp.front())])
                                    s += alpha(*la, g, e);
                            const auto edges_in = static_cast<long>(comp.size() - 1);
                            d.push_back(rat(s) / edges_in);
                            qw.push_back(rat(edges_in));
                        }
                        Rational qsum = 0, weighted = 0, prod = 1;
                        for (std::size_t j = 0; j < d.size(); ++j) {
                            qsum += qw[j];
                            weighted += qw[j] * d[j];
                            prod *= kr - d[j];
                        }
                        const long r = static_cast<long>(d.size());
                        Rational rhs = power(kr, r) - power(kr, r - 1) * weighted / qsum;
                        mean.add(prod, rhs, w);
                    }
                }

            Rational gap_value = rat(backtracking) - reference_chromatic(g, profile).evaluate(kr);
            lemma.add(gap_value, gap_lower_via_q(g, profile, *la, kk), [&] { return "k=" + std::to_string(kk); });
        }
    }
    report.records.push_back(lower.record());
    report.records.push_back(upper.record());
    report.records.push_back(mean.record());
    report.records.push_back(agree.record());
    report.records.push_back(lemma.record());

    if (la && k) {
        auto records = gap_bound_records(g, *la, *k, [&] {
            BigInt pl = list_count(g, eta, *la, options.budget, nullptr);
            return BigInt(pl - reference_chromatic(g, profile).evaluate(rat(static_cast<std::uint64_t>(*k))).get_num());
        });
        for (auto &r : records)
            report.records.push_back(std::move(r));
    } else {
        Tally general("gap_bound", Rel::at_least, "");
        general.not_applicable("no k-assignment given");
        Tally k3free("gap_bound_k3free", Rel::at_least, "");
        k3free.not_applicable("no k-assignment given");
        report.records.push_back(general.record());
        report.records.push_back(k3free.record());
    }
    return report;
}

} // namespace listgap
