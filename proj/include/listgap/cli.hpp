#pragma once

#include "listgap/budget.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace listgap::cli {

enum ExitStatus : int { exit_ok = 0, exit_violation = 1, exit_usage = 2, exit_budget = 3 };

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    /// Exactly one graph source. graph6_path "-" reads standard input.
    std::optional<std::string> graph_path;
    std::optional<std::string> graph6_path;
    std::optional<std::string> generator;
    /// "canonical", "random:SEED" or a path to an ordering file.
    std::string eta = "canonical";
    std::optional<std::string> lists_path;
    /// "k=K,universe=U,seed=S"; K and U accept the same forms as `k`.
    std::optional<std::string> random_lists;
    /// An integer, or "m", "m-N", "m+N" in terms of the edge count.
    std::optional<std::string> k;
    std::optional<std::size_t> universe;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> iters;
    std::optional<std::size_t> k_max;
    std::optional<std::size_t> edge;
    std::optional<std::string> x;
    /// verify: all | gap | positivity
    std::string mode = "all";
    /// search-min: auto | exact | heuristic
    std::string method = "auto";
    /// batch: command run on each graph.
    std::string batch_command = "verify";
    bool interpolation_oracle = false;
    std::size_t forest_sample_cap = 10'000;
    std::uint64_t budget = default_budget;
    std::uint64_t search_budget = 10'000'000;
    std::size_t jobs = 1;
    std::optional<std::string> json_path;
};

/// Budget default, overridden by LISTGAP_BUDGET when set.
std::uint64_t budget_from_environment();

int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses arguments (argv[0] is the program name) and runs.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace listgap::cli
