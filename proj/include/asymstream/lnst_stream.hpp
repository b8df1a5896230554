#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "asymstream/core.hpp"

namespace asymstream {

struct SizingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CountGrid {
    std::vector<std::size_t> D;
    std::uint32_t r = 1;
    std::size_t t = 1;
    double epsilon = 0.5;
};

CountGrid grid(std::uint32_t r, std::size_t t, double epsilon);

struct LnstResult {
    std::size_t value = 0;
    std::size_t lns = 0;
    bool exact_branch = false;
    std::size_t candidates = 0;
    std::size_t accepted = 0;
    RunReport report;
};

// Reads ASYMSTREAM_SPACE_BUDGET (words); unset means unlimited.
std::optional<Words> space_budget_from_env();

LnstResult approx_lnst(OnlineStream& stream, std::uint32_t r, std::size_t t, double epsilon,
                       std::optional<Words> budget = space_budget_from_env());

}  // namespace asymstream
