#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asymstream/core.hpp"
#include "asymstream/oracles.hpp"

namespace asymstream {

enum class InnerBackend { ExactFull, ExactBandedDoubling };

struct InnerEdEstimator {
    double epsilon = 0.1;
    InnerBackend backend = InnerBackend::ExactFull;
};

InnerBackend parse_inner_backend(const std::string& name);
std::string backend_name(InnerBackend b);

// rows is read left to right once per attempt; cols is random access.
std::size_t approx_ed_offline(const InnerEdEstimator& est, const Replayable& rows, const OfflineText& cols,
                              SpaceMeter* meter = nullptr);
std::size_t approx_ed_offline(const InnerEdEstimator& est, const Text& a, const Text& b, SpaceMeter* meter = nullptr);

// y[r1] ∘ y[r2] ∘ … read through the refs without copying.
Replayable replayable_concat(const OfflineText& y, const std::vector<SubstringRef>& refs);
std::size_t concat_length(const std::vector<SubstringRef>& refs);

}  // namespace asymstream
