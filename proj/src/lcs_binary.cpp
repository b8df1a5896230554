#include "asymstream/lcs_binary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "asymstream/ed_stream.hpp"

namespace asymstream {

void SymbolCounts::add(Symbol s) {
    if (s > 1) throw std::invalid_argument("binary counts: symbol outside {0,1}");
    ++c[s];
}

std::size_t SymbolCounts::operator[](Symbol s) const {
    if (s > 1) throw std::invalid_argument("binary counts: symbol outside {0,1}");
    return c[s];
}

double SymbolCounts::fraction(Symbol s, std::size_t n) const {
    return n == 0 ? 0.0 : static_cast<double>((*this)[s]) / static_cast<double>(n);
}

SymbolCounts SymbolCounts::of(const Text& t, std::size_t from, std::size_t to) {
    SymbolCounts out;
    for (std::size_t i = from; i < std::min(to, t.size()); ++i) out.add(t[i]);
    return out;
}

std::size_t match_count(const SymbolCounts& cx, const SymbolCounts& cy, Symbol s) {
    return std::min(cx[s], cy[s]);
}

std::size_t best_match(const SymbolCounts& cx, const SymbolCounts& cy) {
    return std::max(match_count(cx, cy, 0), match_count(cx, cy, 1));
}

GreedySplit greedy_split_offline(const SymbolCounts& cx1, const SymbolCounts& cx2, const OfflineText& y) {
    SymbolCounts total;
    for (std::size_t j = 1; j <= y.size(); ++j) total.add(y.at(j));
    SymbolCounts pre;
    GreedySplit best{best_match(cx1, pre) + best_match(cx2, total), 0};
    for (std::size_t l = 1; l <= y.size(); ++l) {
        pre.add(y.at(l));
        SymbolCounts suf{{total.c[0] - pre.c[0], total.c[1] - pre.c[1]}};
        std::size_t v = best_match(cx1, pre) + best_match(cx2, suf);
        if (v > best.value) best = {v, l};
    }
    return best;
}

GreedyOnline::GreedyOnline(const SymbolCounts& cy1, const SymbolCounts& cy2, std::size_t assumed_zeros,
                           std::size_t assumed_length)
    : y1_(cy1), y2_(cy2), zeros_(assumed_zeros), len_(assumed_length) {
    SymbolCounts suf{{zeros_, len_ >= zeros_ ? len_ - zeros_ : 0}};
    best_ = best_match(prefix_, y1_) + best_match(suf, y2_);
}

void GreedyOnline::feed(Symbol s) {
    prefix_.add(s);
    auto sub = [](std::size_t a, std::size_t b) { return a >= b ? a - b : 0; };
    SymbolCounts suf{{sub(zeros_, prefix_.c[0]), sub(sub(len_, zeros_), prefix_.c[1])}};
    std::size_t v = best_match(prefix_, y1_) + best_match(suf, y2_);
    if (v > best_) {
        best_ = v;
        split_ = prefix_.length();
        at_split_ = prefix_;
    }
}

GreedySplit GreedyOnline::finish(const SymbolCounts& cx) const {
    SymbolCounts suf{{cx.c[0] - at_split_.c[0], cx.c[1] - at_split_.c[1]}};
    return {best_match(at_split_, y1_) + best_match(suf, y2_), split_};
}

GreedySplit greedy_split_online(const SymbolCounts& cy1, const SymbolCounts& cy2, OnlineStream& x,
                                std::size_t assumed_zeros) {
    GreedyOnline g(cy1, cy2, assumed_zeros, cy1.length() + cy2.length());
    SymbolCounts cx;
    while (auto c = x.next()) {
        cx.add(*c);
        g.feed(*c);
    }
    return g.finish(cx);
}

double balance_alpha(const SymbolCounts& cx, const SymbolCounts& cy) {
    const std::size_t nx = cx.length(), ny = cy.length();
    return std::min({cx.fraction(0, nx), cx.fraction(1, nx), cy.fraction(0, ny), cy.fraction(1, ny)});
}

Balance classify_balance(const SymbolCounts& cx, const SymbolCounts& cy, const BalanceParams& p) {
    const std::size_t nx = cx.length(), ny = cy.length();
    const double alpha = balance_alpha(cx, cy);
    if (p.delta_small * alpha > p.beta_for(alpha) + 1e-12) throw std::invalid_argument("balance: need delta*alpha <= beta");
    const double bp = p.beta_prime(alpha);
    const bool close = std::abs(cx.fraction(1, nx) - cy.fraction(0, ny)) <= p.delta_small * alpha + 1e-12;
    const double zx = cx.fraction(0, nx);
    const bool off_center = zx < 0.5 - bp || zx > 0.5 + bp;
    return close && off_center ? Balance::PerfectlyUnbalanced : Balance::Balanced;
}

std::string balance_name(Balance b) {
    return b == Balance::PerfectlyUnbalanced ? "perfectly-unbalanced" : "balanced";
}

namespace {

std::size_t lower_from_ed(std::size_t la, std::size_t lb, std::size_t dtilde) {
    std::size_t m = std::max(la, lb);
    return m > dtilde ? m - dtilde : 0;
}

}  // namespace

LcsResult approx_lcs_binary(OnlineStream& stream, const OfflineText& y_in, const LcsParams& p) {
    const std::size_t n = y_in.size();
    SymbolCounts cy_raw;
    for (std::size_t j = 1; j <= n; ++j) cy_raw.add(y_in.at(j));

    // Relabel so that ones are the minority symbol of y.
    const bool flip = 2 * cy_raw.c[1] > n;
    Text y_flipped;
    if (flip) {
        y_flipped.reserve(n);
        for (std::size_t j = 1; j <= n; ++j) y_flipped.push_back(1 - y_in.at(j));
    }
    const OfflineText y = flip ? OfflineText(y_flipped) : y_in;
    const SymbolCounts cy = flip ? SymbolCounts{{cy_raw.c[1], cy_raw.c[0]}} : cy_raw;
    const std::size_t a = cy.c[1];
    const OfflineText yl = y.window(1, a);
    const OfflineText yr = y.window(n - a + 1, n);
    SymbolCounts ly, my, ry;
    for (std::size_t j = 1; j <= n; ++j) {
        Symbol s = y.at(j);
        (j <= a ? ly : j > n - a ? ry : my).add(s);
    }

    SpaceMeter meter;
    MeterHold counts_hold(&meter, 16);
    EdStreamParams ep;
    ep.delta_den = p.delta_den;
    ep.epsilon = p.epsilon;
    ep.inner = p.inner;

    SymbolCounts cx, lx, mx, rx;
    std::size_t pos = 0;
    EdStreamMachine ed_all(y, ep, &meter);
    std::optional<EdStreamMachine> ed_l, ed_r;
    if (a > 0) {
        ed_l.emplace(yl, ep, &meter);
        ed_r.emplace(yr, ep, &meter);
    }
    GreedyOnline g1(ly, my + ry, a, n), g2(ly + my, ry, a, n);
    std::size_t pos_l = 0, pos_r = 0;

    auto norm = [flip](Symbol s) -> Symbol {
        if (s > 1) throw std::invalid_argument("binary LCS: symbol outside {0,1}");
        return flip ? 1 - s : s;
    };
    Tee tee(stream, 5);
    tee.drive({
        [&](Symbol s) {
            s = norm(s);
            ++pos;
            cx.add(s);
            (pos <= a ? lx : pos > n - a ? rx : mx).add(s);
        },
        [&](Symbol s) { ed_all.feed(norm(s)); },
        [&](Symbol s) {
            if (!ed_l) return;
            if (++pos_l <= a) ed_l->feed(norm(s));
            if (++pos_r > n - a) ed_r->feed(norm(s));
        },
        [&](Symbol s) { g1.feed(norm(s)); },
        [&](Symbol s) { g2.feed(norm(s)); },
    });

    const std::size_t d_all = ed_all.finish();
    const std::size_t nx = cx.length();
    const std::size_t lx_len = lx.length(), rx_len = rx.length();
    std::optional<std::size_t> d_l, d_r;
    if (ed_l) {
        d_l = ed_l->finish();
        d_r = ed_r->finish();
    }

    LcsEstimate est;
    est.segment = a;
    est.complemented = flip;
    est.balance = classify_balance(cx, cy, p.balance);
    std::vector<std::pair<std::string, std::size_t>> cands;
    cands.emplace_back("best-match", best_match(cx, cy));
    cands.emplace_back("approx-ed", lower_from_ed(nx, n, d_all));
    if (d_l) {
        const std::size_t el = lower_from_ed(lx_len, a, *d_l), er = lower_from_ed(rx_len, a, *d_r);
        cands.emplace_back("segments-ed", el + best_match(mx, my) + er);
        cands.emplace_back("segments-left-ed", el + best_match(mx + rx, my + ry));
        cands.emplace_back("segments-right-ed", best_match(lx + mx, ly + my) + er);
    }
    GreedySplit o1 = greedy_split_offline(lx, mx + rx, y), o2 = greedy_split_offline(lx + mx, rx, y);
    cands.emplace_back("greedy-offline", std::max(o1.value, o2.value));
    GreedySplit s1 = g1.finish(cx), s2 = g2.finish(cx);
    cands.emplace_back("greedy-online", std::max(s1.value, s2.value));

    for (const auto& [name, v] : cands) {
        est.candidates[name] = v;
        if (est.witness.empty() || v > est.value) {
            est.value = v;
            est.witness = name;
        }
    }

    LcsResult res;
    res.estimate = est;
    res.report.value = static_cast<std::int64_t>(est.value);
    res.report.guarantee_factor = 2.0;
    res.report.peak_space_words = meter.peak();
    res.report.online_symbols_read = static_cast<std::int64_t>(stream.consumed());
    res.report.trace = to_json(est);
    res.report.trace["ed"] = {{"all", d_all}};
    if (d_l) {
        res.report.trace["ed"]["left"] = *d_l;
        res.report.trace["ed"]["right"] = *d_r;
    }
    return res;
}

nlohmann::json to_json(const LcsEstimate& e) {
    return nlohmann::json{{"value", e.value},
                          {"witness", e.witness},
                          {"segment", e.segment},
                          {"complemented", e.complemented},
                          {"balance", balance_name(e.balance)},
                          {"candidates", e.candidates}};
}

}  // namespace asymstream
