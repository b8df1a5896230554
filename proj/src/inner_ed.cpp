#include "asymstream/inner_ed.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace asymstream {

InnerBackend parse_inner_backend(const std::string& name) {
    if (name == "exact" || name == "exact-full") return InnerBackend::ExactFull;
    if (name == "banded" || name == "exact-banded-doubling") return InnerBackend::ExactBandedDoubling;
    throw std::invalid_argument("unknown inner ED backend: " + name);
}

std::string backend_name(InnerBackend b) {
    return b == InnerBackend::ExactFull ? "exact" : "banded";
}

namespace {

std::size_t full_rows(const Replayable& rows, const OfflineText& cols, SpaceMeter* meter) {
    const std::size_t m = cols.size();
    MeterHold hold(meter, 2 * static_cast<Words>(m + 1));
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    auto rd = rows();
    std::size_t i = 0;
    while (auto c = rd()) {
        ++i;
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t b = prev[j - 1] + (cols.at(j) != *c ? 1 : 0);
            b = std::min(b, prev[j] + 1);
            b = std::min(b, cur[j - 1] + 1);
            cur[j] = b;
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

}  // namespace

std::size_t approx_ed_offline(const InnerEdEstimator& est, const Replayable& rows, const OfflineText& cols,
                              SpaceMeter* meter) {
    if (est.backend == InnerBackend::ExactFull) return full_rows(rows, cols, meter);
    for (std::size_t k = 1;; k *= 2) {
        BandedEd band(cols, k, meter);
        auto rd = rows();
        std::size_t n = 0;
        while (auto c = rd()) {
            band.feed(*c);
            ++n;
        }
        if (auto r = band.result()) return *r;
        if (k > n + cols.size()) throw HarnessError("banded doubling failed to terminate");
    }
}

std::size_t approx_ed_offline(const InnerEdEstimator& est, const Text& a, const Text& b, SpaceMeter* meter) {
    OfflineText cols(b);
    return approx_ed_offline(est, replayable_text(a), cols, meter);
}

namespace {

struct ConcatReader {
    const OfflineText* y;
    const std::vector<SubstringRef>* refs;
    std::size_t part = 0;
    std::size_t pos = 0;

    std::optional<Symbol> next() {
        while (part < refs->size()) {
            const auto& r = (*refs)[part];
            if (r.p + pos <= r.q) return y->at(r.p + pos++);
            ++part;
            pos = 0;
        }
        return std::nullopt;
    }
};

}  // namespace

Replayable replayable_concat(const OfflineText& y, const std::vector<SubstringRef>& refs) {
    return [&y, &refs]() -> SymbolReader {
        auto r = std::make_shared<ConcatReader>(ConcatReader{&y, &refs});
        return [r]() { return r->next(); };
    };
}

std::size_t concat_length(const std::vector<SubstringRef>& refs) {
    std::size_t n = 0;
    for (const auto& r : refs) n += r.length();
    return n;
}

}  // namespace asymstream
