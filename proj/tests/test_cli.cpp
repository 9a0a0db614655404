#include "listgap/cli.hpp"
#include "listgap/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "listgap");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = listgap::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &text)
{
    const auto path = std::filesystem::temp_directory_path() / ("listgap_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

listgap::Json parse(const Run &r) { return listgap::Json::parse(r.out); }

} // namespace

TEST_CASE("chromatic command")
{
    const std::string k4 = temp_file("k4.edges", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    const Run r = run({"chromatic", "--graph", k4});
    CHECK(r.status == 0);
    const auto j = parse(r);
    CHECK(j["schema"] == "1");
    CHECK(j["pretty"] == "x^4 - 6x^3 + 11x^2 - 6x");
    CHECK(j["polynomial"] == listgap::Json::array({"0", "-6", "11", "-6", "1"}));
    CHECK(j["agree"] == true);

    const Run interp = run({"chromatic", "--gen", "C5", "--interpolation-oracle", "--eta", "random:4"});
    CHECK(interp.status == 0);
    CHECK(parse(interp)["interpolation"] == parse(interp)["whitney"]);
}

TEST_CASE("verify command on a 4-cycle")
{
    const std::string c4 = temp_file("c4.edges", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    const Run r = run({"verify", "--graph", c4, "--k", "3", "--random-lists", "k=3,universe=5,seed=7", "--eta", "canonical"});
    CHECK(r.status == 0);
    const auto j = parse(r);
    CHECK(j["summary"]["violated"] == 0);
    bool saw_gap = false;
    for (const auto &rec : j["records"]) {
        CHECK(rec.contains("id"));
        CHECK(rec.contains("lhs"));
        CHECK(rec.contains("rhs"));
        CHECK(rec.contains("verdict"));
        CHECK(rec.contains("witness"));
        CHECK(rec.contains("preconditions"));
        if (rec["id"] == "gap_bound") {
            saw_gap = true;
            CHECK(rec["verdict"] == "holds");
        }
    }
    CHECK(saw_gap);

    // Same configuration, same bytes.
    CHECK(run({"verify", "--graph", c4, "--k", "3", "--random-lists", "k=3,universe=5,seed=7"}).out == r.out);
}

TEST_CASE("verify modes")
{
    const Run gap = run({"verify", "--gen", "C4", "--mode", "gap", "--random-lists", "k=m-1,universe=6,seed=2"});
    CHECK(gap.status == 0);
    CHECK(parse(gap)["records"].size() == 2);

    const Run pos = run({"verify", "--gen", "K3", "--mode", "positivity", "--k", "m-1"});
    CHECK(pos.status == 0);
    CHECK(parse(pos)["universe"] == 4);

    const Run bad = run({"verify", "--gen", "P3", "--mode", "positivity", "--k", "1"});
    CHECK(bad.status == 1);
    CHECK(parse(bad)["summary"]["violated"] == 1);
}

TEST_CASE("count, gap, qpoly and profile commands")
{
    const std::string p3 = temp_file("p3.edges", "3 2\n0 1\n1 2\n");
    const std::string lists = temp_file("p3.lists", "0: 1 2\n1: 1 2\n2: 2 3\n");
    const Run count = run({"count", "--graph", p3, "--lists", lists});
    CHECK(count.status == 0);
    CHECK(parse(count)["backtracking"] == "3");
    CHECK(parse(count)["inclusion_exclusion"] == "3");

    const Run gap = run({"gap", "--graph", p3, "--lists", lists, "--k", "2"});
    CHECK(gap.status == 0);
    CHECK(parse(gap)["gap"] == "1");

    const Run q = run({"qpoly", "--gen", "K3", "--edge", "0", "--x", "3"});
    CHECK(q.status == 0);
    CHECK(parse(q)["q"][0]["pretty"] == "x^2 - 2x");
    CHECK(parse(q)["q"][0]["value"] == "3");

    const Run prof = run({"nbc-profile", "--gen", "K3"});
    CHECK(parse(prof)["profile"]["counts"] == listgap::Json::array({1, 3, 2}));

    const std::string order = temp_file("k3.eta", "3 1 2\n");
    const Run custom = run({"nbc-profile", "--gen", "K3", "--eta", order});
    CHECK(parse(custom)["profile"]["eta"] == listgap::Json::array({3, 1, 2}));
}

TEST_CASE("search commands")
{
    const Run s = run({"search-min", "--gen", "K2,4", "--k", "2", "--universe", "4"});
    CHECK(s.status == 0);
    CHECK(parse(s)["result"]["value"] == "0");
    CHECK(parse(s)["chromatic_value"] == "2");

    const Run h = run({"search-min", "--gen", "C5", "--k", "2", "--method", "heuristic", "--iters", "20", "--seed", "9"});
    CHECK(h.status == 0);
    CHECK(parse(h)["result"]["method"] == "local-search");

    const Run scan = run({"scan", "--gen", "paw", "--k-max", "4"});
    CHECK(scan.status == 0);
    CHECK(parse(scan)["threshold_consistent"] == true);
}

TEST_CASE("exit codes for bad input and budgets")
{
    const std::string p3 = temp_file("p3b.edges", "3 2\n0 1\n1 2\n");
    const std::string missing = temp_file("bad.lists", "0: 1 2\n1: 1 2\n");
    const Run r = run({"count", "--graph", p3, "--lists", missing});
    CHECK(r.status == 2);
    CHECK(r.err.find("vertex 2") != std::string::npos);

    CHECK(run({"chromatic"}).status == 2);
    CHECK(run({"chromatic", "--gen", "K3", "--graph", p3}).status == 2);
    CHECK(run({"chromatic", "--graph", "/nonexistent/file"}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"gap", "--graph", p3, "--random-lists", "k=2,universe=4,seed=1", "--k", "3"}).status == 2);
    CHECK(run({"verify", "--gen", "K3", "--eta", "random:x"}).status == 2);
    CHECK(run({"--help"}).status == 0);

    const Run budget = run({"count", "--gen", "K4", "--random-lists", "k=3,universe=5,seed=1", "--budget", "10"});
    CHECK(budget.status == 3);
    CHECK(budget.err.find("10") != std::string::npos);
}

TEST_CASE("batch")
{
    const std::string stream = temp_file("batch.g6", "C~\nDQc\nthis is not graph6\n\nBw\n");
    const Run one = run({"batch", "--graph6", stream, "--command", "verify", "--random-lists", "k=m,universe=8,seed=3"});
    const Run four = run({"batch", "--graph6", stream, "--command", "verify", "--random-lists", "k=m,universe=8,seed=3", "--jobs", "4"});
    CHECK(one.out == four.out);
    const auto j = parse(one);
    CHECK(j["summary"]["graphs"] == 4);
    CHECK(j["summary"]["errors"] == 1);
    CHECK(j["summary"]["violated"] == 0);
    CHECK(j["results"][2]["line"] == 3);
    CHECK(j["results"][2].contains("error"));
    CHECK(j["results"][3]["graph"]["graph6"] == "Bw");
    CHECK(one.status == 2);

    const std::string empty = temp_file("empty.g6", "");
    const Run e = run({"batch", "--graph6", empty});
    CHECK(e.status == 0);
    CHECK(parse(e)["summary"]["graphs"] == 0);
}
