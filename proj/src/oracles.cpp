#include "asymstream/oracles.hpp"

#include <algorithm>
#include <limits>

namespace asymstream {

std::size_t ed_full(const Text& x, const Text& y, SpaceMeter* meter) {
    const Text& a = x.size() >= y.size() ? x : y;
    const Text& b = x.size() >= y.size() ? y : x;
    MeterHold hold(meter, 2 * static_cast<Words>(b.size() + 1));
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t best = prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
            best = std::min(best, prev[j] + 1);
            best = std::min(best, cur[j - 1] + 1);
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

BandedEd::BandedEd(const OfflineText& y, std::size_t k, SpaceMeter* meter)
    : y_(&y), k_(k), cur_(2 * k + 1, k + 1), next_(2 * k + 1, k + 1), hold_(meter, 2 * static_cast<Words>(2 * k + 1)) {
    for (std::size_t j = 0; j <= std::min(k, y.size()); ++j) cur_[j + k] = j;
}

void BandedEd::feed(Symbol c) {
    ++i_;
    const std::size_t inf = k_ + 1;
    const long long m = static_cast<long long>(y_->size());
    const long long w = static_cast<long long>(2 * k_);
    for (long long idx = 0; idx <= w; ++idx) {
        long long j = static_cast<long long>(i_) + idx - static_cast<long long>(k_);
        if (j < 0 || j > m) {
            next_[idx] = inf;
            continue;
        }
        std::size_t best = inf;
        if (j >= 1) best = cur_[idx] + (y_->at(static_cast<std::size_t>(j)) != c ? 1 : 0);
        if (idx + 1 <= w) best = std::min(best, cur_[idx + 1] + 1);
        if (idx >= 1) best = std::min(best, next_[idx - 1] + 1);
        next_[idx] = std::min(best, inf);
    }
    std::swap(cur_, next_);
}

std::size_t BandedEd::value(std::size_t j) const {
    long long idx = static_cast<long long>(j) - static_cast<long long>(i_) + static_cast<long long>(k_);
    if (idx < 0 || idx > static_cast<long long>(2 * k_)) return k_ + 1;
    return cur_[static_cast<std::size_t>(idx)];
}

std::optional<std::size_t> BandedEd::result() const {
    std::size_t v = value(y_->size());
    if (v > k_) return std::nullopt;
    return v;
}

std::optional<std::size_t> ed_bounded(const Text& x, const Text& y, std::size_t k, SpaceMeter* meter) {
    OfflineText yy(y);
    TextReader r(x);
    return ed_bounded(r, yy, k, meter);
}

Replayable replayable_text(const Text& x) {
    return [&x]() -> SymbolReader {
        auto r = std::make_shared<TextReader>(x);
        return [r]() { return r->next(); };
    };
}

Replayable replayable_replay(const OfflineText& y, SubstringRef ref, const EditScript& script, const Text& tail) {
    return [&y, ref, &script, &tail]() -> SymbolReader {
        auto c = std::make_shared<ReplayCursor>(y, ref, script, tail);
        return [c]() { return c->next(); };
    };
}

namespace {

std::size_t band_value(const std::vector<std::size_t>& row, std::size_t row_i, std::size_t j, std::size_t k) {
    long long idx = static_cast<long long>(j) - static_cast<long long>(row_i) + static_cast<long long>(k);
    if (idx < 0 || idx > static_cast<long long>(2 * k)) return k + 1;
    return row[static_cast<std::size_t>(idx)];
}

}  // namespace

EditScript recover_script(const Replayable& x, const OfflineText& y, std::size_t k, SpaceMeter* meter) {
    std::size_t n = 0;
    std::size_t v = 0;
    {
        BandedEd band(y, k, meter);
        auto rd = x();
        while (auto c = rd()) {
            band.feed(*c);
            ++n;
        }
        auto r = band.result();
        if (!r || *r >= k) throw std::invalid_argument("recover_script: distance not below k");
        v = *r;
    }

    MeterHold hold(meter, 3 * static_cast<Words>(2 * k + 1));
    EditScript rev;
    std::vector<std::size_t> before, snap_prev, snap_cur;
    std::size_t i = n, j = y.size();
    while (i > 0 && j > 0) {
        // Walk the diagonal of (i,j) to find the last mismatch at or before row i.
        const long long dg = static_cast<long long>(j) - static_cast<long long>(i);
        BandedEd band(y, k, meter);
        std::size_t run = 0;
        Symbol mism_sym = 0;
        auto rd = x();
        for (std::size_t a = 1; a <= i; ++a) {
            Symbol c = *rd();
            long long col = static_cast<long long>(a) + dg;
            bool match = col >= 1 && y.at(static_cast<std::size_t>(col)) == c;
            if (!match) before.assign(band.row().begin(), band.row().end());
            band.feed(c);
            if (match) {
                ++run;
            } else {
                run = 0;
                mism_sym = c;
                snap_prev.swap(before);
                snap_cur.assign(band.row().begin(), band.row().end());
            }
        }
        i -= run;
        j -= run;
        if (i == 0 || j == 0) break;
        if (band_value(snap_prev, i - 1, j - 1, k) + 1 == v) {
            rev.push_back(EditOp::substitute(j, mism_sym));
            --i;
            --j;
        } else if (band_value(snap_cur, i, j - 1, k) + 1 == v) {
            rev.push_back(EditOp::erase(j));
            --j;
        } else if (band_value(snap_prev, i - 1, j, k) + 1 == v) {
            rev.push_back(EditOp::insert(j + 1, mism_sym));
            --i;
        } else {
            throw HarnessError("recover_script: inconsistent traceback");
        }
        --v;
    }
    for (; j > 0; --j) rev.push_back(EditOp::erase(j));
    if (i > 0) {
        Text head;
        auto rd = x();
        for (std::size_t a = 0; a < i; ++a) head.push_back(*rd());
        for (std::size_t a = i; a > 0; --a) rev.push_back(EditOp::insert(1, head[a - 1]));
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

EditScript recover_script(const Replayable& x, const Text& y_sub, std::size_t k, SpaceMeter* meter) {
    OfflineText y(y_sub);
    return recover_script(x, y, k, meter);
}

EditScript recover_script(const Text& x, const Text& y_sub, std::size_t k, SpaceMeter* meter) {
    return recover_script(replayable_text(x), y_sub, k, meter);
}

Partition split_by_script(const Text& x, const Text& y, const EditScript& script, std::size_t t) {
    if (t == 0) throw std::invalid_argument("split_by_script: t must be positive");
    for (std::size_t e = 1; e < script.size(); ++e)
        if (script[e].pos < script[e - 1].pos) throw std::invalid_argument("split_by_script: script not ordered");
    if (apply_script(x, script) != y) throw std::invalid_argument("split_by_script: script does not turn x into y");

    const std::size_t d = script.size();
    const std::size_t block = d == 0 ? 1 : (d + t - 1) / t;
    Partition out;
    std::size_t xi = 0, yj = 0;  // end of the previous part
    long long shift = 0;         // target index minus source index after applied ops
    std::size_t e = 0;
    while (e < d) {
        std::size_t stop = std::min(d, e + block);
        for (std::size_t f = e; f < stop; ++f) {
            if (script[f].kind == EditOp::Kind::Insert) ++shift;
            else if (script[f].kind == EditOp::Kind::Delete) --shift;
        }
        std::size_t x_end = stop < d ? script[stop].pos - 1 : x.size();
        std::size_t y_end = static_cast<std::size_t>(static_cast<long long>(x_end) + shift);
        out.parts.push_back({SubstringRef{xi + 1, x_end}, SubstringRef{yj + 1, y_end}, stop - e});
        xi = x_end;
        yj = y_end;
        e = stop;
    }
    if (d == 0) out.parts.push_back({SubstringRef{1, x.size()}, SubstringRef{1, y.size()}, 0});
    while (out.parts.size() < t) out.parts.push_back({SubstringRef{xi + 1, xi}, SubstringRef{yj + 1, yj}, 0});
    return out;
}

std::size_t lcs_full(const Text& x, const Text& y) {
    std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j)
            cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

std::size_t lis_exact(const Text& x) {
    std::vector<Symbol> tails;
    for (Symbol c : x) {
        auto it = std::lower_bound(tails.begin(), tails.end(), c);
        if (it == tails.end()) tails.push_back(c);
        else *it = c;
    }
    return tails.size();
}

std::size_t lns_exact(const Text& x, std::uint32_t r, SpaceMeter* meter) {
    MeterHold hold(meter, static_cast<Words>(r));
    std::vector<std::size_t> best(r, 0);
    for (Symbol c : x) {
        std::size_t m = 0;
        for (Symbol j = 0; j <= c; ++j) m = std::max(m, best[j]);
        best[c] = m + 1;
    }
    return r == 0 ? 0 : *std::max_element(best.begin(), best.end());
}

std::size_t lnst_exact(const Text& x, std::uint32_t r, std::size_t t) {
    if (t == 0) return 0;
    // best[j][c]: longest valid chain ending in exactly c copies of symbol j
    std::vector<std::vector<std::size_t>> best(r, std::vector<std::size_t>(t + 1, 0));
    for (Symbol s : x) {
        std::size_t below = 0;
        for (Symbol j = 0; j < s; ++j)
            for (std::size_t c = 1; c <= t; ++c) below = std::max(below, best[j][c]);
        for (std::size_t c = t; c >= 2; --c)
            if (best[s][c - 1] > 0) best[s][c] = std::max(best[s][c], best[s][c - 1] + 1);
        best[s][1] = std::max(best[s][1], below + 1);
    }
    std::size_t ans = 0;
    for (const auto& row : best)
        for (std::size_t v : row) ans = std::max(ans, v);
    return ans;
}

SubstringMatch best_substring_ed(const Text& x, const Text& y) {
    SubstringMatch best{SubstringRef{1, 0}, x.size()};
    bool have_nonempty = false;
    const std::size_t n = y.size();
    std::vector<std::size_t> prev, cur;
    for (std::size_t p = 1; p <= n; ++p) {
        // table of x against y[p..n], column by column over y
        prev.assign(x.size() + 1, 0);
        for (std::size_t i = 0; i <= x.size(); ++i) prev[i] = i;
        cur.assign(x.size() + 1, 0);
        for (std::size_t q = p; q <= n; ++q) {
            cur[0] = q - p + 1;
            for (std::size_t i = 1; i <= x.size(); ++i) {
                std::size_t b = prev[i - 1] + (x[i - 1] != y[q - 1] ? 1 : 0);
                b = std::min(b, prev[i] + 1);
                b = std::min(b, cur[i - 1] + 1);
                cur[i] = b;
            }
            std::swap(prev, cur);
            std::size_t dist = prev[x.size()];
            bool better = !have_nonempty ? dist <= best.distance : dist < best.distance;
            if (better) {
                best = {SubstringRef{p, q}, dist};
                have_nonempty = true;
            }
        }
    }
    return best;
}

}  // namespace asymstream
