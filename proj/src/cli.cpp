#include "listgap/cli.hpp"

#include "listgap/bounds.hpp"
#include "listgap/chromatic.hpp"
#include "listgap/report.hpp"
#include "listgap/search.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace listgap::cli {

namespace {

struct Outcome {
    Json body = Json::object();
    int status = exit_ok;
    VerdictCounts counts;
};

std::string read_file(const std::string &path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string first_line(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            return line;
    }
    throw UsageError("graph6 input is empty");
}

Graph load_graph(const RunConfig &c)
{
    const int sources = (c.graph_path ? 1 : 0) + (c.graph6_path ? 1 : 0) + (c.generator ? 1 : 0);
    if (sources != 1)
        throw UsageError("give exactly one of --graph, --graph6, --gen");
    if (c.graph_path)
        return read_edge_list(read_file(*c.graph_path));
    if (c.graph6_path)
        return from_graph6(first_line(read_file(*c.graph6_path)));
    return generators::from_name(*c.generator);
}

/// Integer, or m / m-N / m+N.
std::size_t eval_count(const std::string &expr, const Graph &g, const std::string &what)
{
    auto bad = [&] { return UsageError("bad " + what + " '" + expr + "'"); };
    auto number = [&](const std::string &s) -> long {
        if (s.empty() || s.size() > 12 || s.find_first_not_of("0123456789") != std::string::npos)
            throw bad();
        return std::stol(s);
    };
    long value;
    if (!expr.empty() && expr[0] == 'm') {
        value = static_cast<long>(g.size());
        if (expr.size() > 1) {
            if (expr[1] != '+' && expr[1] != '-')
                throw bad();
            long d = number(expr.substr(2));
            value += expr[1] == '+' ? d : -d;
        }
    } else {
        value = number(expr);
    }
    if (value < 0)
        throw UsageError(what + " '" + expr + "' is negative for this graph");
    return static_cast<std::size_t>(value);
}

EdgeOrdering make_eta(const std::string &spec, const Graph &g)
{
    if (spec == "canonical")
        return EdgeOrdering::canonical(g.size());
    if (spec.rfind("random:", 0) == 0) {
        const std::string seed = spec.substr(7);
        if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad --eta seed '" + seed + "'");
        return EdgeOrdering::random(g.size(), std::stoull(seed));
    }
    return read_ordering(read_file(spec), g.size());
}

struct ListsAndK {
    std::optional<ListAssignment> lists;
    std::optional<std::size_t> k;
};

ListsAndK make_lists(const RunConfig &c, const Graph &g)
{
    ListsAndK out;
    if (c.lists_path && c.random_lists)
        throw UsageError("give at most one of --lists, --random-lists");
    if (c.k)
        out.k = eval_count(*c.k, g, "--k");
    if (c.lists_path)
        out.lists = read_lists(read_file(*c.lists_path), g.order());
    if (c.random_lists) {
        std::optional<std::size_t> k, universe;
        std::optional<std::uint64_t> seed;
        std::stringstream in(*c.random_lists);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw UsageError("bad --random-lists item '" + item + "'");
            std::string key = item.substr(0, eq), value = item.substr(eq + 1);
            if (key == "k")
                k = eval_count(value, g, "random-lists k");
            else if (key == "universe")
                universe = eval_count(value, g, "random-lists universe");
            else if (key == "seed")
                seed = eval_count(value, g, "random-lists seed");
            else
                throw UsageError("unknown --random-lists key '" + key + "'");
        }
        if (!k || !universe || !seed)
            throw UsageError("--random-lists needs k=, universe= and seed=");
        if (*universe < *k)
            throw UsageError("--random-lists universe smaller than k");
        out.lists = ListAssignment::random(g.order(), static_cast<int>(*k), static_cast<int>(*universe), *seed);
        if (!out.k)
            out.k = k;
    }
    return out;
}

IntPolynomial reference_chromatic(const Graph &g)
{
    return g.size() <= default_deletion_contraction_edges ? chromatic_deletion_contraction(g)
                                                          : chromatic_via_whitney(g, EdgeOrdering::canonical(g.size()));
}

void agreement(Outcome &o, bool agree)
{
    o.counts.add(agree ? Verdict::holds : Verdict::violated);
    if (!agree)
        o.status = exit_violation;
}

Outcome cmd_chromatic(const RunConfig &c, const Graph &g)
{
    Outcome o;
    const EdgeOrdering eta = make_eta(c.eta, g);
    const IntPolynomial whitney = chromatic_via_whitney(g, eta);
    o.body["polynomial"] = polynomial_json(whitney);
    o.body["pretty"] = whitney.pretty();
    o.body["whitney"] = polynomial_json(whitney);
    bool agree = true;
    if (g.size() <= default_deletion_contraction_edges) {
        const IntPolynomial dc = chromatic_deletion_contraction(g);
        o.body["deletion_contraction"] = polynomial_json(dc);
        agree = agree && dc == whitney;
    } else {
        o.body["deletion_contraction"] = nullptr;
    }
    if (c.interpolation_oracle) {
        const IntPolynomial interp = chromatic_by_interpolation(g, c.budget);
        o.body["interpolation"] = polynomial_json(interp);
        agree = agree && interp == whitney;
    }
    o.body["agree"] = agree;
    agreement(o, agree);
    return o;
}

Outcome cmd_profile(const RunConfig &c, const Graph &g)
{
    Outcome o;
    const EdgeOrdering eta = make_eta(c.eta, g);
    o.body["profile"] = profile_json(g, eta, nbc_profile(g, eta));
    return o;
}

Outcome cmd_qpoly(const RunConfig &c, const Graph &g)
{
    Outcome o;
    const EdgeOrdering eta = make_eta(c.eta, g);
    const NbcProfile profile = nbc_profile(g, eta);
    std::optional<Rational> x;
    if (c.x) {
        try {
            x = parse_rational(*c.x);
        } catch (const std::exception &) {
            throw UsageError("bad --x '" + *c.x + "'");
        }
    }
    if (c.edge && *c.edge >= g.size())
        throw UsageError("--edge out of range");
    Json polys = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (c.edge && *c.edge != i)
            continue;
        const RatPolynomial q = q_poly(g, profile, EdgeRef{i});
        const Edge &e = g.edge(EdgeRef{i});
        Json item{{"edge_index", i}, {"edge", {e.u, e.v}}, {"coefficients", polynomial_json(q)}, {"pretty", q.pretty()}};
        if (x)
            item["value"] = to_string(q.evaluate(*x));
        polys.push_back(std::move(item));
    }
    o.body["eta"] = eta.labels();
    if (x)
        o.body["x"] = to_string(*x);
    o.body["q"] = std::move(polys);
    return o;
}

ListAssignment require_lists(const ListsAndK &lk)
{
    if (!lk.lists)
        throw UsageError("this command needs --lists or --random-lists");
    return *lk.lists;
}

Outcome cmd_count(const RunConfig &c, const Graph &g)
{
    Outcome o;
    const ListAssignment la = require_lists(make_lists(c, g));
    const EdgeOrdering eta = make_eta(c.eta, g);
    const BigInt backtracking = count_list_colorings(g, la, c.budget);
    const BigInt nbc = count_list_colorings_nbc(g, eta, la);
    o.body["lists"] = write_lists(la);
    o.body["backtracking"] = to_string(backtracking);
    o.body["inclusion_exclusion"] = to_string(nbc);
    o.body["agree"] = backtracking == nbc;
    agreement(o, backtracking == nbc);
    return o;
}

Outcome cmd_gap(const RunConfig &c, const Graph &g)
{
    Outcome o;
    const ListsAndK lk = make_lists(c, g);
    const ListAssignment la = require_lists(lk);
    if (!lk.k)
        throw UsageError("gap needs --k");
    if (!la.is_uniform(*lk.k))
        throw UsageError("lists are not a k-assignment for k = " + std::to_string(*lk.k));
    const GapResult r = gap(g, la, *lk.k, reference_chromatic(g), c.budget);
    o.body["k"] = *lk.k;
    o.body["lists"] = write_lists(la);
    o.body["list_count"] = to_string(r.list_count);
    o.body["chromatic_value"] = to_string(r.chromatic_value);
    o.body["gap"] = to_string(r.gap);
    return o;
}

void attach_records(Outcome &o, const std::vector<BoundRecord> &records)
{
    o.counts = count_verdicts(records);
    o.body["records"] = records_json(records);
    o.body["summary"] = o.counts.json();
    if (o.counts.violated)
        o.status = exit_violation;
}

Outcome cmd_verify(const RunConfig &c, const Graph &g)
{
    Outcome o;
    const ListsAndK lk = make_lists(c, g);
    const EdgeOrdering eta = make_eta(c.eta, g);
    o.body["mode"] = c.mode;
    o.body["eta"] = eta.labels();
    if (lk.k)
        o.body["k"] = *lk.k;
    if (lk.lists)
        o.body["lists"] = write_lists(*lk.lists);
    if (c.mode == "all") {
        VerifyOptions opts;
        opts.seed = c.seed;
        opts.forest_sample_cap = c.forest_sample_cap;
        opts.budget = c.budget;
        attach_records(o, verify_all(g, eta, lk.lists, lk.k, opts).records);
    } else if (c.mode == "gap") {
        if (!lk.k)
            throw UsageError("verify --mode gap needs --k");
        attach_records(o, verify_gap_bound(g, eta, require_lists(lk), *lk.k, c.budget));
    } else if (c.mode == "positivity") {
        if (!lk.k)
            throw UsageError("verify --mode positivity needs --k");
        const std::size_t universe = c.universe.value_or(*lk.k + 2);
        o.body["universe"] = universe;
        const PositivityResult r = verify_list_gap_positivity(g, *lk.k, universe, c.search_budget);
        o.body["assignments"] = r.assignments;
        o.body["edge_constant"] = r.edge_constant;
        o.body["min_positive_gap"] = r.min_positive_gap ? Json(to_string(*r.min_positive_gap)) : Json(nullptr);
        attach_records(o, {r.record});
    } else {
        throw UsageError("unknown --mode '" + c.mode + "'");
    }
    return o;
}

Outcome cmd_search(const RunConfig &c, const Graph &g)
{
    Outcome o;
    if (!c.k)
        throw UsageError("search-min needs --k");
    const std::size_t k = eval_count(*c.k, g, "--k");
    const std::size_t universe = c.universe.value_or(default_universe(g.order(), k));
    const std::uint64_t iters = c.iters.value_or(200);
    SearchResult r;
    if (c.method == "exact" || c.method == "auto") {
        ExactOptions eo;
        eo.budget = c.search_budget;
        try {
            r = exact_pl(g, k, universe, eo);
        } catch (const BudgetExceeded &) {
            if (c.method == "exact")
                throw;
            r = heuristic_min(g, k, universe, iters, c.seed);
        }
    } else if (c.method == "heuristic") {
        r = heuristic_min(g, k, universe, iters, c.seed);
    } else {
        throw UsageError("unknown --method '" + c.method + "'");
    }
    const BigInt pk = reference_chromatic(g).evaluate(Rational(static_cast<unsigned long>(k))).get_num();
    o.body["k"] = k;
    o.body["result"] = search_json(r);
    o.body["chromatic_value"] = to_string(pk);
    o.body["equal"] = r.value == pk;
    // The constant assignment is always a candidate, so exceeding P(G,k) is a bug.
    agreement(o, r.value <= pk);
    return o;
}

Outcome cmd_scan(const RunConfig &c, const Graph &g)
{
    Outcome o;
    if (!c.k_max)
        throw UsageError("scan needs --k-max");
    ScanOptions so;
    so.universe = c.universe;
    so.budget = c.search_budget;
    so.iters = c.iters.value_or(200);
    so.seed = c.seed;
    const auto rows = threshold_scan(g, *c.k_max, so);
    o.body["rows"] = scan_json(rows);
    // From k = m-1 on, the minimum must equal P(G,k).
    bool ok = true;
    for (const auto &row : rows)
        if (row.k + 1 >= g.size() && !row.equal)
            ok = false;
    o.body["threshold_consistent"] = ok;
    agreement(o, ok);
    return o;
}

Outcome run_on_graph(const std::string &command, const RunConfig &c, const Graph &g)
{
    if (command == "chromatic")
        return cmd_chromatic(c, g);
    if (command == "nbc-profile")
        return cmd_profile(c, g);
    if (command == "qpoly")
        return cmd_qpoly(c, g);
    if (command == "count")
        return cmd_count(c, g);
    if (command == "gap")
        return cmd_gap(c, g);
    if (command == "verify")
        return cmd_verify(c, g);
    if (command == "search-min")
        return cmd_search(c, g);
    if (command == "scan")
        return cmd_scan(c, g);
    throw UsageError("unknown command '" + command + "'");
}

Json document(const std::string &command, const Graph &g, Outcome &o)
{
    Json doc{{"schema", schema_version}, {"command", command}, {"graph", graph_json(g)}};
    for (auto &[key, value] : o.body.items())
        doc[key] = std::move(value);
    return doc;
}

void emit(const RunConfig &c, const Json &doc, std::ostream &out)
{
    const std::string text = doc.dump(2) + "\n";
    if (c.json_path) {
        std::ofstream file(*c.json_path, std::ios::binary);
        if (!file)
            throw UsageError("cannot write " + *c.json_path);
        file << text;
    } else {
        out << text;
    }
}

int run_batch(const RunConfig &c, std::ostream &out)
{
    if (!c.graph6_path || c.graph_path || c.generator)
        throw UsageError("batch reads a graph6 stream from --graph6");
    if (c.batch_command == "batch")
        throw UsageError("batch cannot nest");
    const std::string text = read_file(*c.graph6_path);

    struct Item {
        std::size_t line = 0;
        std::string source;
        Json result;
        int status = exit_ok;
        VerdictCounts counts;
        std::string error_kind;
    };
    std::vector<Item> items;
    {
        std::istringstream in(text);
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            items.push_back(Item{number, line, {}, exit_ok, {}, {}});
        }
    }

    auto work = [&](Item &item) {
        try {
            Graph g = from_graph6(item.source);
            Outcome o = run_on_graph(c.batch_command, c, g);
            Json r{{"graph", graph_json(g)}};
            for (auto &[key, value] : o.body.items())
                r[key] = std::move(value);
            item.result = std::move(r);
            item.status = o.status;
            item.counts = o.counts;
        } catch (const BudgetExceeded &e) {
            item.error_kind = "budget";
            item.result = Json{{"error", e.what()}, {"kind", "budget"}};
        } catch (const std::exception &e) {
            item.error_kind = "input";
            item.result = Json{{"error", e.what()}, {"kind", "input"}};
        }
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++)
            work(items[i]);
    };
    const std::size_t width = std::max<std::size_t>(1, std::min(c.jobs, items.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < width; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();

    Json results = Json::array();
    VerdictCounts total;
    std::size_t errors = 0;
    bool violated = false, input_error = false, budget_error = false;
    for (auto &item : items) {
        Json entry{{"line", item.line}, {"source", item.source}};
        for (auto &[key, value] : item.result.items())
            entry[key] = std::move(value);
        results.push_back(std::move(entry));
        total += item.counts;
        violated = violated || item.status == exit_violation;
        if (!item.error_kind.empty()) {
            ++errors;
            (item.error_kind == "budget" ? budget_error : input_error) = true;
        }
    }
    Json summary{{"graphs", items.size()}, {"errors", errors}};
    const Json counts = total.json();
    for (const auto &[key, value] : counts.items())
        summary[key] = value;
    Json doc{{"schema", schema_version},
             {"command", "batch"},
             {"batch_command", c.batch_command},
             {"results", std::move(results)},
             {"summary", std::move(summary)}};
    emit(c, doc, out);
    if (violated)
        return exit_violation;
    if (input_error)
        return exit_usage;
    if (budget_error)
        return exit_budget;
    return exit_ok;
}

} // namespace

std::uint64_t budget_from_environment()
{
    if (const char *env = std::getenv("LISTGAP_BUDGET")) {
        std::string s(env);
        if (!s.empty() && s.size() <= 19 && s.find_first_not_of("0123456789") == std::string::npos) {
            const std::uint64_t v = std::stoull(s);
            if (v > 0)
                return v;
        }
        throw UsageError("LISTGAP_BUDGET must be a positive integer");
    }
    return default_budget;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        if (config.budget == 0 || config.search_budget == 0)
            throw UsageError("budgets must be positive");
        if (config.command == "batch")
            return run_batch(config, out);
        const Graph g = load_graph(config);
        Outcome o = run_on_graph(config.command, config, g);
        emit(config, document(config.command, g, o), out);
        return o.status;
    } catch (const BudgetExceeded &e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig config;
    try {
        config.budget = budget_from_environment();
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    CLI::App app{"Exact chromatic, broken-cycle and list-colouring computations"};
    app.require_subcommand(1);

    auto add_graph = [&](CLI::App *sub) {
        sub->add_option("--graph", config.graph_path, "Edge-list file");
        sub->add_option("--graph6", config.graph6_path, "graph6 file (first line), or stream for batch; - for stdin");
        sub->add_option("--gen", config.generator, "Named graph: Kn, Cn, Pn, Sn, En, Ka,b, petersen, paw");
        sub->add_option("--json", config.json_path, "Write JSON here instead of stdout");
        sub->add_option("--budget", config.budget, "Enumeration budget");
    };
    auto add_eta = [&](CLI::App *sub) {
        sub->add_option("--eta", config.eta, "canonical, random:SEED, or ordering file");
    };
    auto add_lists = [&](CLI::App *sub) {
        sub->add_option("--lists", config.lists_path, "Lists file");
        sub->add_option("--random-lists", config.random_lists, "k=K,universe=U,seed=S");
        sub->add_option("--k", config.k, "List size (integer, m, m-N or m+N)");
    };
    auto add_search = [&](CLI::App *sub) {
        sub->add_option("--universe", config.universe, "Colours are drawn from 1..universe");
        sub->add_option("--seed", config.seed, "Seed");
        sub->add_option("--iters", config.iters, "Local search iterations");
        sub->add_option("--search-budget", config.search_budget, "Evaluation budget for exhaustive list searches");
    };

    std::vector<CLI::App *> subs;
    auto *chromatic = app.add_subcommand("chromatic", "Chromatic polynomial, Whitney expansion vs deletion-contraction");
    add_graph(chromatic);
    add_eta(chromatic);
    chromatic->add_flag("--interpolation-oracle", config.interpolation_oracle)->group("");
    subs.push_back(chromatic);

    auto *profile = app.add_subcommand("nbc-profile", "Broken-cycle-free set counts, total and per edge");
    add_graph(profile);
    add_eta(profile);
    subs.push_back(profile);

    auto *qpoly = app.add_subcommand("qpoly", "Per-edge polynomial Q");
    add_graph(qpoly);
    add_eta(qpoly);
    qpoly->add_option("--edge", config.edge, "Edge index (default: all)");
    qpoly->add_option("--x", config.x, "Evaluate at this rational");
    subs.push_back(qpoly);

    auto *count = app.add_subcommand("count", "P(G,L) by backtracking and by inclusion-exclusion");
    add_graph(count);
    add_eta(count);
    add_lists(count);
    subs.push_back(count);

    auto *gapc = app.add_subcommand("gap", "P(G,L) - P(G,k)");
    add_graph(gapc);
    add_lists(gapc);
    subs.push_back(gapc);

    auto *verify = app.add_subcommand("verify", "Check the inequalities");
    add_graph(verify);
    add_eta(verify);
    add_lists(verify);
    add_search(verify);
    verify->add_option("--mode", config.mode, "all, gap or positivity")->check(CLI::IsMember({"all", "gap", "positivity"}));
    verify->add_option("--sample-cap", config.forest_sample_cap, "Forests checked per size class");
    subs.push_back(verify);

    auto *search = app.add_subcommand("search-min", "Minimum of P(G,L) over k-assignments");
    add_graph(search);
    add_search(search);
    search->add_option("--k", config.k, "List size");
    search->add_option("--method", config.method, "auto, exact or heuristic")->check(CLI::IsMember({"auto", "exact", "heuristic"}));
    subs.push_back(search);

    auto *scan = app.add_subcommand("scan", "Compare the smallest P(G,L) found with P(G,k) for k = 2..k-max");
    add_graph(scan);
    add_search(scan);
    scan->add_option("--k-max", config.k_max, "Largest k");
    subs.push_back(scan);

    auto *batch = app.add_subcommand("batch", "Run a command on every graph of a graph6 stream");
    add_graph(batch);
    add_eta(batch);
    add_lists(batch);
    add_search(batch);
    batch->add_option("--command", config.batch_command, "Command per graph");
    batch->add_option("--mode", config.mode, "verify mode");
    batch->add_option("--sample-cap", config.forest_sample_cap, "Forests checked per size class");
    batch->add_option("--k-max", config.k_max, "Largest k for scan");
    batch->add_option("--method", config.method, "search-min method");
    batch->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    subs.push_back(batch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    for (auto *sub : subs)
        if (sub->parsed())
            config.command = sub->get_name();
    return run(config, out, err);
}

} // namespace listgap::cli
