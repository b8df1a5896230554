#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "asymstream/core.hpp"
#include "asymstream/inner_ed.hpp"

namespace asymstream {

// Counts of 0 and 1 in a binary string or segment.
struct SymbolCounts {
    std::array<std::size_t, 2> c{0, 0};

    void add(Symbol s);
    std::size_t operator[](Symbol s) const;
    std::size_t length() const { return c[0] + c[1]; }
    double fraction(Symbol s, std::size_t n) const;

    static SymbolCounts of(const Text& t, std::size_t from = 0, std::size_t to = SIZE_MAX);
    SymbolCounts operator+(const SymbolCounts& o) const { return {{c[0] + o.c[0], c[1] + o.c[1]}}; }
};

std::size_t match_count(const SymbolCounts& cx, const SymbolCounts& cy, Symbol s);
std::size_t best_match(const SymbolCounts& cx, const SymbolCounts& cy);

struct GreedySplit {
    std::size_t value = 0;
    std::size_t split = 0;  // first part is [1:split]
};

// max over l of BestMatch(y[1:l], x1) + BestMatch(y[l+1:n], x2), one left-to-right scan of y.
GreedySplit greedy_split_offline(const SymbolCounts& cx1, const SymbolCounts& cx2, const OfflineText& y);

// Online counterpart: y is split into known parts y1, y2 and the split point of x is chosen while
// x streams by, with the suffix counts of x taken from an assumed number of zeros in x.
class GreedyOnline {
public:
    GreedyOnline(const SymbolCounts& cy1, const SymbolCounts& cy2, std::size_t assumed_zeros, std::size_t assumed_length);

    void feed(Symbol s);
    // Exact value at the chosen split, given the true counts of x.
    GreedySplit finish(const SymbolCounts& cx) const;

private:
    SymbolCounts y1_, y2_;
    std::size_t zeros_, len_;
    SymbolCounts prefix_;
    std::size_t best_ = 0;
    std::size_t split_ = 0;
    SymbolCounts at_split_;
};

GreedySplit greedy_split_online(const SymbolCounts& cy1, const SymbolCounts& cy2, OnlineStream& x,
                                std::size_t assumed_zeros);

struct BalanceParams {
    double delta_small = 0.1;
    std::optional<double> beta;  // unset: delta_small * alpha, the smallest admissible value
    double gamma = 0.1;

    double beta_for(double alpha) const { return beta.value_or(delta_small * alpha); }
    double beta_prime(double alpha) const { return 10.0 * beta_for(alpha); }
};

enum class Balance { PerfectlyUnbalanced, Balanced };

double balance_alpha(const SymbolCounts& cx, const SymbolCounts& cy);
Balance classify_balance(const SymbolCounts& cx, const SymbolCounts& cy, const BalanceParams& p);
std::string balance_name(Balance b);

struct LcsParams {
    std::size_t delta_den = 3;  // space exponent 1/delta_den for the edit distance runs
    double epsilon = 0.1;
    InnerEdEstimator inner;
    BalanceParams balance;
};

struct LcsEstimate {
    std::size_t value = 0;
    std::string witness;
    std::size_t segment = 0;  // |L| = |R|
    bool complemented = false;
    Balance balance = Balance::Balanced;
    nlohmann::json candidates = nlohmann::json::object();
};

struct LcsResult {
    LcsEstimate estimate;
    RunReport report;
};

LcsResult approx_lcs_binary(OnlineStream& stream, const OfflineText& y, const LcsParams& p = {});

nlohmann::json to_json(const LcsEstimate& e);

}  // namespace asymstream
