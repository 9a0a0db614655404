#pragma once

#include "listgap/bounds.hpp"
#include "listgap/graph.hpp"
#include "listgap/listcolor.hpp"
#include "listgap/nbc.hpp"
#include "listgap/polynomial.hpp"
#include "listgap/search.hpp"

#include <json.hpp>

namespace listgap {

using Json = nlohmann::ordered_json;

/// Schema version stamped on every top-level document.
inline constexpr const char *schema_version = "1";

Json graph_json(const Graph &g);

/// Coefficients as decimal strings, constant term first.
template <typename Coeff>
Json polynomial_json(const Polynomial<Coeff> &p)
{
    Json out = Json::array();
    for (const auto &c : p.coefficient_strings())
        out.push_back(c);
    return out;
}

Json record_json(const BoundRecord &r);
Json records_json(const std::vector<BoundRecord> &records);

struct VerdictCounts {
    std::uint64_t holds = 0;
    std::uint64_t violated = 0;
    std::uint64_t not_applicable = 0;

    void add(Verdict v);
    VerdictCounts &operator+=(const VerdictCounts &o);
    Json json() const;
};

VerdictCounts count_verdicts(const std::vector<BoundRecord> &records);

Json profile_json(const Graph &g, const EdgeOrdering &eta, const NbcProfile &profile);
Json search_json(const SearchResult &r);
Json scan_json(const std::vector<ScanRow> &rows);

} // namespace listgap
