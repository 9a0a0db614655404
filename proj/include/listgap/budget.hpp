#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace listgap {

/// Default work cap for brute-force counters; LISTGAP_BUDGET overrides it in the CLI.
inline constexpr std::uint64_t default_budget = 100'000'000;

/// A computation refused to start (or stopped) because it would exceed its cap.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string &what, std::string required, std::uint64_t budget)
        : std::runtime_error(what + ": requires " + required + ", budget " + std::to_string(budget)),
          required_(std::move(required)), budget_(budget)
    {
    }

    const std::string &required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::string required_;
    std::uint64_t budget_;
};

} // namespace listgap
