#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "asymstream/core.hpp"
#include "asymstream/inner_ed.hpp"

namespace asymstream {

struct FlsParams {
    std::size_t u = 1;
    std::size_t s = 2;
    InnerEdEstimator inner;
};

struct FlsOutput {
    SubstringRef pq{1, 0};
    std::size_t l = 0;
    std::size_t d = 0;
    EditScript script;  // base case only: turns y[pq] into x[1:l]
};

nlohmann::json to_json(const FlsOutput& o);

// Push-driven form. feed() returns false when the call is already complete;
// the rejected symbol belongs to whoever runs next.
class FlsMachine {
public:
    virtual ~FlsMachine() = default;
    virtual bool feed(Symbol c) = 0;
    virtual void finish() = 0;

    bool done() const { return done_; }
    const FlsOutput& output() const { return out_; }

protected:
    bool done_ = false;
    FlsOutput out_;
};

std::unique_ptr<FlsMachine> make_fls_base_machine(const OfflineText& y, std::size_t u, SpaceMeter* meter);
std::unique_ptr<FlsMachine> make_fls_machine(const OfflineText& y, const FlsParams& p, SpaceMeter* meter);

FlsOutput fls_base(SymbolSource& src, const OfflineText& y, std::size_t u, SpaceMeter* meter = nullptr);
FlsOutput find_longest_substring(SymbolSource& src, const OfflineText& y, const FlsParams& p,
                                 SpaceMeter* meter = nullptr);

double guarantee_factor(std::size_t u, std::size_t s, double eps);

// Minimum of ED(pattern, y[p:q]) over all substrings (empty ranks last on ties), and
// the cells of the last pattern row that are within the cutoff.
struct ScanCell {
    std::size_t j;
    std::size_t v;
    std::size_t p;
};

struct ScanResult {
    std::size_t value = 0;
    bool found = false;
    std::size_t p = 1;  // raw start; p == j+1 means empty
    std::size_t j = 0;
    std::size_t active = 0;
    std::vector<ScanCell> active_cells;  // at most collect_cap+1 entries
};

ScanResult semi_global_scan(const Replayable& pattern, std::size_t L, const OfflineText& y, std::size_t cutoff,
                            std::size_t collect_cap, SpaceMeter* meter);

}  // namespace asymstream
