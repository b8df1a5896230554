#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace asymstream {

struct BenchRow {
    std::string algo;
    std::size_t n = 0;
    std::size_t scale = 0;  // d* for edit distance, LCS / LNST value otherwise
    std::int64_t value = 0;
    std::size_t exact = 0;
    double ratio = 1.0;
    std::int64_t peak_space_words = 0;
    double runtime_ms = 0.0;
    std::uint64_t seed = 0;
};

// Least-squares slope of log(y) against log(x); pairs with a non-positive coordinate are skipped.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

std::string bench_csv_header();
std::string bench_csv_line(const BenchRow& r);
nlohmann::json bench_summary(const std::vector<BenchRow>& rows);

}  // namespace asymstream
