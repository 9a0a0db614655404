#include "listgap/report.hpp"

namespace listgap {

Json graph_json(const Graph &g)
{
    Json edges = Json::array();
    for (const Edge &e : g.edges())
        edges.push_back({e.u, e.v});
    return Json{{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}, {"edges", std::move(edges)}};
}

Json record_json(const BoundRecord &r)
{
    Json out{{"id", r.id},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"verdict", to_string(r.verdict)},
             {"witness", r.witness},
             {"preconditions", r.preconditions},
             {"preconditions_met", r.preconditions_met},
             {"instances", r.instances}};
    if (!r.c_used.empty()) {
        out["c"] = r.c_used;
        out["c_source"] = r.c_source;
    }
    return out;
}

Json records_json(const std::vector<BoundRecord> &records)
{
    Json out = Json::array();
    for (const auto &r : records)
        out.push_back(record_json(r));
    return out;
}

void VerdictCounts::add(Verdict v)
{
    switch (v) {
    case Verdict::holds:
        ++holds;
        break;
    case Verdict::violated:
        ++violated;
        break;
    case Verdict::not_applicable:
        ++not_applicable;
        break;
    }
}

VerdictCounts &VerdictCounts::operator+=(const VerdictCounts &o)
{
    holds += o.holds;
    violated += o.violated;
    not_applicable += o.not_applicable;
    return *this;
}

Json VerdictCounts::json() const
{
    return Json{{"holds", holds}, {"violated", violated}, {"not_applicable", not_applicable}};
}

VerdictCounts count_verdicts(const std::vector<BoundRecord> &records)
{
    VerdictCounts c;
    for (const auto &r : records)
        c.add(r.verdict);
    return c;
}

Json profile_json(const Graph &g, const EdgeOrdering &eta, const NbcProfile &profile)
{
    Json per_edge = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge &e = g.edge(EdgeRef{i});
        per_edge.push_back({{"edge", {e.u, e.v}}, {"label", eta.label(EdgeRef{i})}, {"counts", profile.counts_per_edge[i]}});
    }
    return Json{{"eta", eta.labels()}, {"counts", profile.counts_total}, {"per_edge", std::move(per_edge)}};
}

Json search_json(const SearchResult &r)
{
    return Json{{"value", to_string(r.value)},
                {"method", to_string(r.method)},
                {"exhaustive", r.exhaustive},
                {"universe", r.universe},
                {"iterations", r.iterations},
                {"evaluations", r.evaluations},
                {"seed", r.seed},
                {"lists", write_lists(r.assignment)}};
}

Json scan_json(const std::vector<ScanRow> &rows)
{
    Json out = Json::array();
    for (const auto &row : rows)
        out.push_back({{"k", row.k},
                       {"universe", row.universe},
                       {"min_found", to_string(row.min_found)},
                       {"chromatic_value", to_string(row.chromatic_value)},
                       {"equal", row.equal},
                       {"method", to_string(row.method)},
                       {"lists", write_lists(row.witness)}});
    return out;
}

} // namespace listgap
