#include "asymstream/lnst_stream.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace asymstream {

CountGrid grid(std::uint32_t r, std::size_t t, double epsilon) {
    if (r == 0 || t == 0 || !(epsilon > 0)) throw std::invalid_argument("grid: need r >= 1, t >= 1, epsilon > 0");
    CountGrid g{{}, r, t, epsilon};
    auto step = static_cast<std::size_t>(std::floor(epsilon / r * static_cast<double>(t)));
    step = std::max<std::size_t>(1, step);
    for (std::size_t v = 0; v < t; v += step) g.D.push_back(v);
    g.D.push_back(t);
    return g;
}

std::optional<Words> space_budget_from_env() {
    const char* s = std::getenv("ASYMSTREAM_SPACE_BUDGET");
    if (s == nullptr || *s == '\0') return std::nullopt;
    return static_cast<Words>(std::stoll(s));
}

LnstResult approx_lnst(OnlineStream& stream, std::uint32_t r, std::size_t t, double epsilon, std::optional<Words> budget) {
    const CountGrid g = grid(r, t, epsilon);
    const std::size_t base = g.D.size();
    double count_d = std::pow(static_cast<double>(base), static_cast<double>(r));
    if (budget && count_d + r + g.D.size() > static_cast<double>(*budget))
        throw SizingError("lnst: " + std::to_string(static_cast<long long>(count_d)) + " candidates exceed the space budget of " +
                          std::to_string(*budget) + " words");
    if (count_d > 5e7) throw SizingError("lnst: candidate count too large");
    const auto count = static_cast<std::size_t>(count_d);

    SpaceMeter meter;
    MeterHold hold(&meter, static_cast<Words>(count + r + base));
    std::vector<std::size_t> ptr(count, 0);
    std::vector<std::size_t> best(r, 0);  // longest non-decreasing subsequence ending in each symbol
    std::vector<std::size_t> d(r);

    auto decode = [&](std::size_t idx) {
        for (std::uint32_t i = 0; i < r; ++i) {
            d[i] = g.D[idx % base];
            idx /= base;
        }
    };
    // Next symbol expected by a probe of counts d that has matched p symbols; r if complete.
    auto expected = [&](std::size_t p) -> std::uint32_t {
        for (std::uint32_t i = 0; i < r; ++i) {
            if (p < d[i]) return i;
            p -= d[i];
        }
        return r;
    };

    while (auto c = stream.next()) {
        if (*c >= r) throw std::invalid_argument("lnst: symbol outside the alphabet");
        std::size_t m = 0;
        for (Symbol j = 0; j <= *c; ++j) m = std::max(m, best[j]);
        best[*c] = m + 1;
        for (std::size_t k = 0; k < count; ++k) {
            decode(k);
            if (expected(ptr[k]) == *c) ++ptr[k];
        }
    }

    LnstResult res;
    res.candidates = count;
    res.lns = *std::max_element(best.begin(), best.end());
    std::size_t top = 0;
    for (std::size_t k = 0; k < count; ++k) {
        decode(k);
        std::size_t f = 0;
        for (auto v : d) f += v;
        if (ptr[k] == f) {
            ++res.accepted;
            top = std::max(top, f);
        }
    }
    res.exact_branch = res.lns <= t;
    res.value = res.exact_branch ? res.lns : top;

    res.report.value = static_cast<std::int64_t>(res.value);
    res.report.guarantee_factor = epsilon < 1 ? 1.0 / (1.0 - epsilon) : 0.0;
    res.report.peak_space_words = meter.peak();
    res.report.online_symbols_read = static_cast<std::int64_t>(stream.consumed());
    res.report.trace = {{"grid", g.D},
                        {"r", r},
                        {"t", t},
                        {"epsilon", epsilon},
                        {"candidates", count},
                        {"accepted", res.accepted},
                        {"lns", res.lns},
                        {"branch", res.exact_branch ? "exact-lns" : "grid"}};
    return res;
}

}  // namespace asymstream
