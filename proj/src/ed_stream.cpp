#include "asymstream/ed_stream.hpp"

#include <cmath>
#include <stdexcept>

namespace asymstream {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::size_t>::max() / b) throw std::overflow_error("k exceeds machine range");
        r *= b;
    }
    return r;
}

std::size_t integer_root(std::size_t k, std::size_t j) {
    auto s = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(k), 1.0 / static_cast<double>(j))));
    for (std::size_t c = s > 0 ? s - 1 : 0; c <= s + 1; ++c)
        if (c > 0 && ipow(c, j) == k) return c;
    return 0;
}

constexpr Words kPartWords = 5;

}  // namespace

EdStreamMachine::EdStreamMachine(const OfflineText& y, const EdStreamParams& p, SpaceMeter* meter)
    : y_(&y), p_(p), meter_(meter), hold_(meter) {
    if (p.delta_den < 2) throw std::invalid_argument("delta must be 1/j with j >= 2");
    if (p.k0 == 0) {
        s_ = 8;
    } else {
        s_ = integer_root(p.k0, p.delta_den);
        if (s_ < 2) throw std::invalid_argument("k0^delta must be an integer of at least 2");
    }
    k_ = ipow(s_, p.delta_den);
    u_ = k_ / s_;
    trace_.k_history.push_back(k_);
    trace_.s_final = s_;
}

void EdStreamMachine::start_part() {
    fls_ = make_fls_machine(*y_, FlsParams{u_, s_, p_.inner}, meter_);
}

void EdStreamMachine::feed(Symbol c) {
    if (!fls_) start_part();
    if (fls_->feed(c)) return;
    record();
    start_part();
    if (!fls_->feed(c)) throw HarnessError("ed stream: fresh part rejected its first symbol");
}

void EdStreamMachine::record() {
    const FlsOutput& o = fls_->output();
    trace_.parts.push_back(EdPart{a_, o.pq, o.l, o.d});
    refs_.push_back(o.pq);
    trace_.sum_d += o.d;
    a_ += o.l;
    fls_.reset();
    hold_.set(kPartWords * static_cast<Words>(trace_.parts.size()));
    ++i_;
    if (i_ >= s_) {
        s_ *= 2;
        k_ = ipow(s_, p_.delta_den);
        u_ = k_ / s_;
        trace_.k_history.push_back(k_);
        trace_.s_final = s_;
    }
}

std::size_t EdStreamMachine::finish() {
    if (fls_) {
        fls_->finish();
        record();
    }
    trace_.dtilde = approx_ed_offline(p_.inner, replayable_concat(*y_, refs_), *y_, meter_);
    return trace_.dtilde + trace_.sum_d;
}

double ed_guarantee_factor(std::size_t delta_den, double eps, std::size_t k_final) {
    if (delta_den == 2) return 3.0 + 2.0 * eps;
    std::size_t s = integer_root(k_final, delta_den);
    double c = guarantee_factor(k_final / s, s, eps);
    return (1.0 + eps) * (1.0 + 2.0 * c);
}

nlohmann::json to_json(const EdTrace& t) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : t.parts) parts.push_back({{"a", p.a}, {"p", p.pq.p}, {"q", p.pq.q}, {"l", p.l}, {"d", p.d}});
    return nlohmann::json{{"T", t.parts.size()},
                          {"parts", parts},
                          {"k_history", t.k_history},
                          {"s_final", t.s_final},
                          {"dtilde", t.dtilde},
                          {"sum_d", t.sum_d}};
}

EdStreamResult approx_ed_streaming(OnlineStream& stream, const OfflineText& y, const EdStreamParams& p) {
    SpaceMeter meter;
    EdStreamResult res;
    {
        EdStreamMachine m(y, p, &meter);
        while (auto c = stream.next()) m.feed(*c);
        res.dbar = m.finish();
        res.trace = m.trace();
    }
    res.report.value = static_cast<std::int64_t>(res.dbar);
    res.report.guarantee_factor = ed_guarantee_factor(p.delta_den, p.epsilon, res.trace.k_final());
    res.report.peak_space_words = meter.peak();
    res.report.online_symbols_read = static_cast<std::int64_t>(stream.consumed());
    res.report.trace = to_json(res.trace);
    res.report.trace["delta"] = "1/" + std::to_string(p.delta_den);
    res.report.trace["epsilon"] = p.epsilon;
    res.report.trace["inner_ed"] = backend_name(p.inner.backend);
    return res;
}

EdStreamResult three_approx(OnlineStream& stream, const OfflineText& y, double eps, InnerEdEstimator inner) {
    EdStreamParams p;
    p.delta_den = 2;
    p.epsilon = eps;
    p.inner = inner;
    return approx_ed_streaming(stream, y, p);
}

}  // namespace asymstream
