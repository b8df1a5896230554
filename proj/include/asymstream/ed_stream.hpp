#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "asymstream/core.hpp"
#include "asymstream/fls.hpp"
#include "asymstream/inner_ed.hpp"

namespace asymstream {

struct EdStreamParams {
    std::size_t delta_den = 2;  // delta = 1/delta_den
    double epsilon = 0.1;
    std::size_t k0 = 0;         // 0 selects 2^(3*delta_den)
    InnerEdEstimator inner;
};

struct EdPart {
    std::size_t a = 1;
    SubstringRef pq;
    std::size_t l = 0;
    std::size_t d = 0;
};

struct EdTrace {
    std::vector<EdPart> parts;
    std::vector<std::size_t> k_history;
    std::size_t dtilde = 0;
    std::size_t sum_d = 0;
    std::size_t s_final = 0;

    std::size_t k_final() const { return k_history.back(); }
};

struct EdStreamResult {
    std::size_t dbar = 0;
    EdTrace trace;
    RunReport report;
};

// Push-driven form of the streaming estimator, so it can share a pass with other consumers.
class EdStreamMachine {
public:
    EdStreamMachine(const OfflineText& y, const EdStreamParams& p, SpaceMeter* meter);

    void feed(Symbol c);
    std::size_t finish();  // returns d̄
    const EdTrace& trace() const { return trace_; }
    std::size_t current_u() const { return u_; }
    std::size_t current_s() const { return s_; }

private:
    void record();
    void start_part();

    const OfflineText* y_;
    EdStreamParams p_;
    SpaceMeter* meter_;
    std::size_t s_ = 8;
    std::size_t k_ = 64;
    std::size_t u_ = 8;
    std::size_t i_ = 1;
    std::size_t a_ = 1;
    std::unique_ptr<FlsMachine> fls_;
    std::vector<SubstringRef> refs_;
    EdTrace trace_;
    MeterHold hold_;
};

double ed_guarantee_factor(std::size_t delta_den, double eps, std::size_t k_final);

EdStreamResult approx_ed_streaming(OnlineStream& stream, const OfflineText& y, const EdStreamParams& p);
EdStreamResult three_approx(OnlineStream& stream, const OfflineText& y, double eps,
                            InnerEdEstimator inner = InnerEdEstimator{});

nlohmann::json to_json(const EdTrace& t);

}  // namespace asymstream
