#include <random>

#include "asymstream/lcs_binary.hpp"
#include "asymstream/oracles.hpp"
#include "doctest.h"

using namespace asymstream;

namespace {

Text bits(const std::string& s) { return decode_text(s, 2); }

SymbolCounts counts(const std::string& s) { return SymbolCounts::of(bits(s)); }

LcsResult run(const Text& x, const Text& y) {
    OnlineStream st(x);
    OfflineText oy(y);
    return approx_lcs_binary(st, oy);
}

std::size_t exhaustive_split(const Text& x1, const Text& x2, const Text& y) {
    std::size_t best = 0;
    for (std::size_t l = 0; l <= y.size(); ++l)
        best = std::max(best, best_match(SymbolCounts::of(x1), SymbolCounts::of(y, 0, l)) +
                                  best_match(SymbolCounts::of(x2), SymbolCounts::of(y, l)));
    return best;
}

}  // namespace

TEST_CASE("match and best match") {
    CHECK(match_count(counts("10101"), counts("11111"), 1) == 3);
    CHECK(match_count(counts("000"), counts("0101"), 1) == 0);
    CHECK(best_match(counts("0011"), counts("0101")) == 2);
    CHECK(best_match(counts("0000"), counts("1111")) == 0);
    CHECK(best_match(counts("01"), counts("01")) == 1);
    CHECK_THROWS(counts("0011")[2]);
}

TEST_CASE("offline greedy split") {
    Text y = bits("0011");
    OfflineText oy(y);
    auto g = greedy_split_offline(counts("00"), counts("11"), oy);
    CHECK(g.value == 4);
    CHECK(g.split == 2);
    auto e = greedy_split_offline(SymbolCounts{}, counts("0110"), oy);
    CHECK(e.value == best_match(counts("0110"), counts("0011")));
    Text empty;
    OfflineText oe(empty);
    CHECK(greedy_split_offline(counts("01"), counts("10"), oe).value == 0);
}

TEST_CASE("offline greedy equals exhaustive split") {
    std::mt19937_64 g(17);
    for (int it = 0; it < 300; ++it) {
        Text x1(g() % 25), x2(g() % 25), y(g() % 50);
        for (auto* t : {&x1, &x2, &y})
            for (auto& c : *t) c = static_cast<Symbol>(g() % 2);
        OfflineText oy(y);
        CHECK(greedy_split_offline(SymbolCounts::of(x1), SymbolCounts::of(x2), oy).value == exhaustive_split(x1, x2, y));
    }
}

TEST_CASE("online greedy split") {
    Text x = bits("0011");
    OnlineStream st(x);
    auto g = greedy_split_online(counts("00"), counts("11"), st, 2);
    CHECK(g.value == 4);
    Text same = bits("0101");
    OnlineStream s2(same);
    CHECK(greedy_split_online(SymbolCounts{}, counts("0101"), s2, 2).value == 2);
}

TEST_CASE("balance classification") {
    // 1(x) = 0.3, 0(y) = 0.3, 0(x) = 0.7 with a narrow band around 1/2
    SymbolCounts cx{{7, 3}}, cy{{3, 7}};
    BalanceParams narrow;
    narrow.delta_small = 0.01;
    narrow.beta = 0.005;
    CHECK(classify_balance(cx, cy, narrow) == Balance::PerfectlyUnbalanced);
    SymbolCounts half{{5, 5}};
    CHECK(classify_balance(half, cy, narrow) == Balance::Balanced);

    // alpha = 0.2: equal fractions are unbalanced, a gap of 2 * delta * alpha is not
    SymbolCounts y{{20, 80}}, x_eq{{80, 20}}, x_gap{{76, 24}};
    CHECK(balance_alpha(x_gap, y) == doctest::Approx(0.2));
    CHECK(classify_balance(x_eq, y, BalanceParams{}) == Balance::PerfectlyUnbalanced);
    CHECK(classify_balance(x_gap, y, BalanceParams{}) == Balance::Balanced);

    BalanceParams bad;
    bad.beta = 0.0001;
    CHECK_THROWS(classify_balance(x_eq, y, bad));
}

TEST_CASE("lcs estimate on small cases") {
    auto r = run(bits("000111"), bits("111000"));
    CHECK(r.estimate.value == 3);
    Text x = bits("0110100111010");
    auto s = run(x, x);
    CHECK(s.estimate.value == x.size());
    CHECK(s.report.online_symbols_read == static_cast<std::int64_t>(x.size()));
    auto e = run(Text{}, Text{});
    CHECK(e.estimate.value == 0);
}

TEST_CASE("lcs estimate is sound and at least half") {
    std::mt19937_64 g(99);
    double total = 0;
    int count = 0;
    for (int it = 0; it < 120; ++it) {
        std::size_t n = 10 + g() % 120;
        double bias = (g() % 100) / 100.0;
        Text x(n), y(n);
        for (auto& c : x) c = static_cast<Symbol>((g() % 1000) < bias * 1000 ? 1 : 0);
        for (auto& c : y) c = static_cast<Symbol>(g() % 2);
        auto r = run(x, y);
        std::size_t lcs = lcs_full(x, y);
        REQUIRE(r.estimate.value <= lcs);
        CHECK(2 * r.estimate.value >= lcs);
        total += static_cast<double>(r.estimate.value) / static_cast<double>(lcs);
        ++count;
    }
    CHECK(total / count > 0.5);
}
