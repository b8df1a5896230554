#include "asymstream/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace asymstream {

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (x[i] <= 0 || y[i] <= 0) continue;
        const double a = std::log(x[i]), b = std::log(y[i]);
        sx += a;
        sy += b;
        sxx += a * a;
        sxy += a * b;
        ++k;
    }
    const double den = static_cast<double>(k) * sxx - sx * sx;
    if (k < 2 || std::abs(den) < 1e-12) return std::numeric_limits<double>::quiet_NaN();
    return (static_cast<double>(k) * sxy - sx * sy) / den;
}

std::string bench_csv_header() { return "algo,n,scale,value,exact,ratio,peak_space_words,runtime_ms,seed"; }

std::string bench_csv_line(const BenchRow& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%lld,%zu,%.6f,%lld,%.3f,%llu", r.algo.c_str(), r.n, r.scale,
                  static_cast<long long>(r.value), r.exact, r.ratio, static_cast<long long>(r.peak_space_words),
                  r.runtime_ms, static_cast<unsigned long long>(r.seed));
    return buf;
}

nlohmann::json bench_summary(const std::vector<BenchRow>& rows) {
    nlohmann::json s{{"runs", rows.size()}};
    if (rows.empty()) return s;
    double lo = rows[0].ratio, hi = rows[0].ratio, sum = 0;
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        lo = std::min(lo, r.ratio);
        hi = std::max(hi, r.ratio);
        sum += r.ratio;
        xs.push_back(static_cast<double>(r.scale));
        ys.push_back(static_cast<double>(r.peak_space_words));
    }
    s["min_ratio"] = lo;
    s["max_ratio"] = hi;
    s["mean_ratio"] = sum / static_cast<double>(rows.size());
    const double slope = loglog_slope(xs, ys);
    s["space_slope"] = std::isnan(slope) ? nlohmann::json(nullptr) : nlohmann::json(slope);
    return s;
}

}  // namespace asymstream
