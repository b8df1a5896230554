// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "asymstream/adversarial_gen.hpp"
#include "asymstream/bench.hpp"
#include "asymstream/ed_stream.hpp"
#include "asymstream/fls.hpp"
#include "asymstream/lcs_binary.hpp"
#include "asymstream/lnst_stream.hpp"
#include "asymstream/oracles.hpp"

using namespace asymstream;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct OnePass {
    std::size_t runs = 0;
    std::size_t mismatches = 0;
    std::size_t harness_errors = 0;

    void check(const RunReport& rep, std::size_t n) {
        ++runs;
        if (rep.online_symbols_read != static_cast<std::int64_t>(n)) ++mismatches;
    }
};

OnePass one_pass;

__attribute__((format(printf, 1, 2))) std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

Text cat(Text a, const Text& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// best[i] = min over substrings s of y (empty included) of ED(x[1:i], s).
std::vector<std::size_t> prefix_substring_distances(const Text& x, const Text& y) {
    const std::size_t m = y.size();
    std::vector<std::size_t> prev(m + 1, 0), cur(m + 1);
    std::vector<std::size_t> best{0};
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j)
            cur[j] = std::min({prev[j - 1] + (x[i - 1] != y[j - 1] ? 1 : 0), prev[j] + 1, cur[j - 1] + 1});
        best.push_back(*std::min_element(cur.begin(), cur.end()));
        std::swap(prev, cur);
    }
    return best;
}

std::size_t l0_of(const std::vector<std::size_t>& best, std::size_t u) {
    std::size_t l = 0;
    while (l + 1 < best.size() && best[l + 1] <= u) ++l;
    return l;
}

FlsOutput run_fls(const Text& x, const Text& y, const FlsParams* p, std::size_t u) {
    OnlineStream st(x);
    SymbolSource src(st);
    OfflineText oy(y);
    return p ? find_longest_substring(src, oy, *p) : fls_base(src, oy, u);
}

std::vector<Text> all_strings(std::uint32_t r, std::size_t max_len) {
    std::vector<Text> out{Text{}};
    std::size_t from = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t to = out.size();
        for (std::size_t k = from; k < to; ++k)
            for (Symbol c = 0; c < r; ++c) {
                Text t = out[k];
                t.push_back(c);
                out.push_back(t);
            }
        from = to;
    }
    return out;
}

// ---- 1 ----
Outcome fooling_exactness(std::vector<std::pair<Text, Text>>& binary_pool) {
    std::mt19937_64 g(101);
    std::size_t bad_eq = 0, bad_cross = 0, pairs = 0;
    const std::size_t sizes[] = {120, 240, 600};
    std::vector<std::vector<FoolingInstance>> by_n(3);
    for (std::size_t k = 0; k < 50; ++k) {
        auto inst = gen_lcs_fooling(random_blocks(sizes[k % 3], g));
        Text xf = cat(inst.x, inst.fx);
        if (lcs_full(xf, inst.y) != inst.lcs) ++bad_eq;
        binary_pool.emplace_back(xf, inst.y);
        by_n[k % 3].push_back(inst);
    }
    for (std::size_t k = 0; pairs < 50; ++k) {
        const std::size_t which = k % 3;
        const auto& a = by_n[which][(k / 3) % by_n[which].size()];
        auto b = gen_lcs_fooling(random_blocks(sizes[which], g));
        if (a.x == b.x) continue;
        auto [ab, ba] = fooling_cross(a, b);
        if (std::max(lcs_full(ab, a.y), lcs_full(ba, a.y)) < sizes[which] / 2 + 6) ++bad_cross;
        binary_pool.emplace_back(ab, a.y);
        binary_pool.emplace_back(ba, a.y);
        ++pairs;
    }
    return {bad_eq == 0 && bad_cross == 0,
            fmt("50 instances with %zu exactness violations; %zu distinct pairs with %zu cross violations", bad_eq,
                pairs, bad_cross)};
}

// ---- 2 ----
Outcome ed_dis_separation() {
    std::size_t checked = 0, bad = 0;
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::uint64_t code = 0; code < (1ull << (2 * m)); ++code) {
            DisInput d = dis_from_index(m, code);
            for (bool equal : {false, true}) {
                auto e = equal ? gen_ed_dis_equal(d) : gen_ed_dis(d);
                const std::size_t v = ed_full(e.x(), e.y);
                if (d.disjoint() ? v < e.low : v > e.high) ++bad;
                ++checked;
            }
        }
    return {bad == 0, fmt("%zu instances over m=1..3 and both length variants, %zu violations", checked, bad)};
}

// ---- 3 ----
Outcome fls_base_exhaustive() {
    const auto strings = all_strings(2, 8);
    std::size_t runs = 0, bad = 0;
    for (const Text& y : strings)
        for (const Text& x : strings) {
            const auto best = prefix_substring_distances(x, y);
            for (std::size_t u = 1; u <= 3; ++u) {
                auto out = run_fls(x, y, nullptr, u);
                ++runs;
                if (out.l != l0_of(best, u) || out.d != best[out.l]) ++bad;
            }
        }
    return {bad == 0, fmt("%zu runs over all binary x, y with length <= 8 and u in {1,2,3}, %zu mismatches", runs, bad)};
}

// ---- 4 ----
Outcome fls_recursion_sandwich() {
    std::mt19937_64 g(404);
    std::size_t bad_l = 0, bad_d = 0;
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
        const std::uint32_t r = 2 + static_cast<std::uint32_t>(g() % 3);
        const std::size_t u = k % 2 ? 27 : 9;
        Text y = random_text(g, 1 + g() % 40, r);
        Text x;
        if (k % 4 < 2) {
            x = random_text(g, 1 + g() % 40, r);
        } else {
            const std::size_t a = g() % y.size();
            x = plant_edits(g, Text(y.begin() + static_cast<long>(a), y.end()), g() % 8, r);
            if (x.size() > 40) x.resize(40);
            x = cat(x, random_text(g, g() % (41 - x.size()), r));
        }
        FlsParams p{u, 3, InnerEdEstimator{0.1, InnerBackend::ExactFull}};
        auto out = run_fls(x, y, &p, u);
        const auto best = prefix_substring_distances(x, y);
        if (out.l < l0_of(best, u)) ++bad_l;
        const double opt = static_cast<double>(best[out.l]);
        if (static_cast<double>(out.d) > guarantee_factor(u, 3, 0.1) * opt + 1e-9) ++bad_d;
        if (opt > 0) worst = std::max(worst, static_cast<double>(out.d) / opt);
    }
    return {bad_l == 0 && bad_d == 0,
            fmt("200 instances: l < l0 in %zu, d over bound in %zu; worst d/opt %.3f (c(9,3)=%.3f, c(27,3)=%.3f)", bad_l,
                bad_d, worst, guarantee_factor(9, 3, 0.1), guarantee_factor(27, 3, 0.1))};
}

// ---- 5, 6, 7 ----
struct Planted {
    Text x, y;
    std::size_t dstar;
};

std::vector<Planted> planted_suite() {
    std::mt19937_64 g(505);
    std::vector<Planted> out;
    while (out.size() < 200) {
        const std::size_t n = 500 + g() % 1501;
        Text y = random_text(g, n, 4);
        Text x = plant_edits(g, y, 1 + g() % 64, 4);
        const std::size_t d = ed_full(x, y);
        if (d >= 1 && d <= 64) out.push_back({std::move(x), std::move(y), d});
    }
    return out;
}

struct CapStats {
    std::size_t checked = 0;
    std::size_t bad = 0;
    double worst = 0;  // max k_final^delta / (d*)^delta
};

void check_cap(CapStats& cs, const EdStreamResult& res, std::size_t j, std::size_t dstar, std::size_t k0) {
    if (dstar < k0) return;
    ++cs.checked;
    const double e = 1.0 / static_cast<double>(j);
    const double kd = std::pow(static_cast<double>(res.trace.k_final()), e);
    const double dd = std::pow(static_cast<double>(dstar), e);
    cs.worst = std::max(cs.worst, kd / dd);
    if (kd > 8.0 * dd + 1e-9) ++cs.bad;
}

EdStreamResult stream_ed(const Planted& inst, std::size_t j, std::size_t k0) {
    OnlineStream s(inst.x);
    OfflineText y(inst.y);
    EdStreamParams p;
    p.delta_den = j;
    p.epsilon = 0.1;
    p.k0 = k0;
    auto res = approx_ed_streaming(s, y, p);
    one_pass.check(res.report, inst.x.size());
    return res;
}

std::size_t default_k0(std::size_t j) {
    std::size_t k = 1;
    for (std::size_t i = 0; i < j; ++i) k *= 8;
    return k;
}

Outcome ed_sandwich(const std::vector<Planted>& suite, std::size_t j, CapStats& cap) {
    std::size_t bad = 0;
    double worst = 0, bound_at_worst = 0;
    for (const auto& inst : suite) {
        auto res = stream_ed(inst, j, 0);
        const double bound = j == 2 ? 3.0 + 2.0 * 0.1 : res.report.guarantee_factor;
        const double ratio = static_cast<double>(res.dbar) / static_cast<double>(inst.dstar);
        if (res.dbar < inst.dstar || ratio > bound + 1e-9) ++bad;
        if (ratio >= worst) {
            worst = ratio;
            bound_at_worst = bound;
        }
        check_cap(cap, res, j, inst.dstar, default_k0(j));
    }
    return {bad == 0, fmt("200 planted instances (d* in [1,64]): %zu violations; worst d̄/d* %.3f against bound %.3f", bad,
                          worst, bound_at_worst)};
}

Outcome adaptive_cap(const std::vector<Planted>& suite, CapStats& cap) {
    // default k0 rarely sits below d* <= 64, so the suite is also run from the smallest start (s0 = 2)
    for (std::size_t j : {2u, 3u}) {
        const std::size_t k0 = j == 2 ? 4 : 8;
        for (std::size_t k = 0; k < suite.size(); k += 2) check_cap(cap, stream_ed(suite[k], j, k0), j, suite[k].dstar, k0);
    }
    return {cap.checked > 0 && cap.bad == 0,
            fmt("%zu runs with d* >= k0, %zu violations; worst k_final^delta/(d*)^delta %.3f (cap 8)", cap.checked,
                cap.bad, cap.worst)};
}

// ---- 8 ----
Outcome space_scaling() {
    std::mt19937_64 g(808);
    const std::size_t n = 100000;
    Text y = random_text(g, n, 4);
    std::vector<double> ds, peaks;
    std::string rows;
    for (std::size_t d : {16u, 64u, 256u, 1024u}) {
        Text x = plant_edits(g, y, d, 4);
        OnlineStream s(x);
        OfflineText oy(y);
        EdStreamParams p;
        p.delta_den = 2;
        p.inner.backend = InnerBackend::ExactBandedDoubling;
        auto res = approx_ed_streaming(s, oy, p);
        one_pass.check(res.report, x.size());
        ds.push_back(static_cast<double>(d));
        peaks.push_back(static_cast<double>(res.report.peak_space_words));
        rows += fmt(" d=%zu:%lld", d, static_cast<long long>(res.report.peak_space_words));
    }
    const double slope = loglog_slope(ds, peaks);
    const bool ok = slope >= 0.4 && slope <= 0.7 && peaks.back() <= static_cast<double>(n) / 10.0;
    return {ok, fmt("n=1e5, peaks%s; slope %.3f (want [0.4,0.7]), peak at d=1024 %.0f (cap %zu)", rows.c_str(), slope,
                    peaks.back(), n / 10)};
}

// ---- 10 ----
Outcome lnst_sandwich() {
    std::size_t runs = 0, bad_sandwich = 0, bad_exact = 0;
    double worst = 1.0;
    for (std::uint32_t r = 1; r <= 3; ++r) {
        const auto strings = all_strings(r, 10);
        for (const Text& x : strings) {
            const std::size_t lns = lns_exact(x, r);
            for (std::size_t t = 1; t <= 4; ++t) {
                const std::size_t exact = lnst_exact(x, r, t);
                for (double eps : {0.25, 0.5}) {
                    OnlineStream s(x);
                    auto res = approx_lnst(s, r, t, eps, std::nullopt);
                    one_pass.check(res.report, x.size());
                    ++runs;
                    const double v = static_cast<double>(res.value);
                    if (v > static_cast<double>(exact) || v < (1.0 - eps) * static_cast<double>(exact) - 1e-9)
                        ++bad_sandwich;
                    if (lns <= t && res.value != lns) ++bad_exact;
                    if (exact > 0) worst = std::min(worst, v / static_cast<double>(exact));
                }
            }
        }
    }
    return {bad_sandwich == 0 && bad_exact == 0,
            fmt("%zu runs (r<=3, n<=10, t<=4, eps in {0.25,0.5}): %zu sandwich and %zu exact-branch violations; min "
                "value/exact %.3f",
                runs, bad_sandwich, bad_exact, worst)};
}

// ---- 11 ----
Outcome binary_lcs(std::vector<std::pair<Text, Text>> pool, double& global_min) {
    std::mt19937_64 g(1111);
    for (int k = 0; k < 500; ++k) {
        const std::size_t nx = 10 + g() % 191, ny = k % 5 == 0 ? 10 + g() % 191 : nx;
        // one pair in two gets skewed symbol densities
        const double px = k % 2 ? 0.5 : 0.05 + 0.9 * static_cast<double>(g() % 1000) / 1000.0;
        const double py = k % 2 ? 0.5 : (k % 4 == 0 ? px : 0.05 + 0.9 * static_cast<double>(g() % 1000) / 1000.0);
        std::bernoulli_distribution bx(px), by(py);
        Text x(nx), y(ny);
        for (auto& c : x) c = bx(g) ? 1 : 0;
        for (auto& c : y) c = by(g) ? 1 : 0;
        pool.emplace_back(std::move(x), std::move(y));
    }
    std::size_t unsound = 0, low = 0, subset = 0, subset_bad = 0, strict = 0, strict_bad = 0;
    global_min = 1e9;
    double subset_min = 1e9;
    const double delta = 0.1;
    for (const auto& [x, y] : pool) {
        OnlineStream s(x);
        OfflineText oy(y);
        auto res = approx_lcs_binary(s, oy);
        one_pass.check(res.report, x.size());
        const std::size_t exact = lcs_full(x, y);
        const std::size_t est = res.estimate.value;
        if (est > exact) ++unsound;
        const double ratio = exact ? static_cast<double>(est) / static_cast<double>(exact) : 1.0;
        global_min = std::min(global_min, ratio);
        if (ratio < 0.5) ++low;
        SymbolCounts cx = SymbolCounts::of(x, 0, x.size()), cy = SymbolCounts::of(y, 0, y.size());
        const double alpha = balance_alpha(cx, cy);
        if (std::abs(cx.fraction(1, x.size()) - cy.fraction(0, y.size())) <= delta * alpha + 1e-12 && exact > 0) {
            ++subset;
            const double bm = static_cast<double>(best_match(cx, cy)) / static_cast<double>(exact);
            subset_min = std::min(subset_min, bm);
            if (bm < 0.5 + delta / 2 - 1e-12) ++subset_bad;
            if (classify_balance(cx, cy, BalanceParams{}) == Balance::PerfectlyUnbalanced) {
                ++strict;
                if (bm < 0.5 + delta / 2 - 1e-12) ++strict_bad;
            }
        }
    }
    return {unsound == 0 && low == 0 && subset_bad == 0,
            fmt("%zu instances: %zu unsound, %zu below 1/2, global min ratio %.4f; close-count subset %zu with %zu "
                "BestMatch below (1/2+delta/2), subset min %.4f; of these %zu also have 0(x) outside 1/2 +- 10*delta*alpha, "
                "%zu below",
                pool.size(), unsound, low, global_min, subset, subset_bad, subset_min, strict, strict_bad)};
}

// ---- 12 ----
Outcome gap_generators() {
    std::mt19937_64 g(1212);
    std::size_t bad = 0, dense = 0;
    std::string worst;
    for (int k = 0; k < 20; ++k) {
        const std::size_t c = 2 + g() % 3, l = 3 + g() % 4;
        const std::size_t r = c * (4 + g() % (30 / c - 3));
        const double alpha = 0.55 + 0.05 * static_cast<double>(g() % 7);
        const bool d = k % 2 == 0;
        auto B = random_gap_matrix(r / c, r, l, alpha, d ? 1 + g() % (r / c) : 0, g);
        auto gi = gen_lis_matrix(B, c);
        const std::size_t v = lis_exact(gi.sigma);
        if (d ? v < gi.bound : v > gi.bound) ++bad;
        dense += d;
    }
    for (int k = 0; k < 20; ++k) {
        const std::size_t c = 2 + g() % 3, l = 3 + g() % 4;
        const std::size_t r = 4 + g() % 27;
        const double alpha = 0.55 + 0.05 * static_cast<double>(g() % 7);
        const bool d = k % 2 == 0;
        auto B = random_gap_matrix(r, c * r, l, alpha, d ? 1 + g() % r : 0, g);
        auto gi = gen_lns_matrix(B, c);
        const std::size_t v = lns_exact(gi.sigma, gi.r);
        if (d ? v < gi.bound : v > gi.bound) ++bad;
        dense += d;
    }
    return {bad == 0, fmt("20 LIS and 20 LNS matrices (%zu dense, %zu sparse), %zu violations", dense, 40 - dense, bad)};
}

}  // namespace

int main() {
    bool all = true;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const HarnessError& e) {
            ++one_pass.harness_errors;
            o = {false, std::string("harness assertion fired: ") + e.what()};
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d: %s -- %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), sec);
        std::fflush(stdout);
        all = all && o.pass;
    };

    std::vector<std::pair<Text, Text>> fooling_pool;
    report(1, "fooling-set exactness", [&] { return fooling_exactness(fooling_pool); });
    report(2, "ED-DIS separation", ed_dis_separation);
    report(3, "FLS base case exhaustive", fls_base_exhaustive);
    report(4, "FLS recursion sandwich", fls_recursion_sandwich);

    const auto suite = planted_suite();
    CapStats cap;
    report(5, "streaming ED, delta=1/2", [&] { return ed_sandwich(suite, 2, cap); });
    report(6, "streaming ED, delta=1/3", [&] { return ed_sandwich(suite, 3, cap); });
    report(7, "adaptive-k cap", [&] { return adaptive_cap(suite, cap); });
    report(8, "space scaling", space_scaling);
    report(10, "LNST sandwich", lnst_sandwich);
    double min_ratio = 0;
    report(11, "binary LCS soundness and ratio", [&] { return binary_lcs(fooling_pool, min_ratio); });
    report(12, "gap generators", gap_generators);
    report(9, "one-pass contract", [] {
        return Outcome{one_pass.mismatches == 0 && one_pass.harness_errors == 0 && one_pass.runs > 0,
                       fmt("%zu streaming runs, %zu with online_symbols_read != |x|, %zu harness assertions", one_pass.runs,
                           one_pass.mismatches, one_pass.harness_errors)};
    });
    std::printf("binary LCS global minimum ratio: %.4f\n", min_ratio);

    // Structured pair where 1(x) = 0(y) exactly: BestMatch is half of LCS.
    Text ux, uy;
    ux.insert(ux.end(), 80, 0);
    ux.insert(ux.end(), 20, 1);
    uy.insert(uy.end(), 20, 0);
    uy.insert(uy.end(), 80, 1);
    SymbolCounts cx = SymbolCounts::of(ux, 0, ux.size()), cy = SymbolCounts::of(uy, 0, uy.size());
    std::printf("info: x=0^80 1^20, y=0^20 1^80 has BestMatch %zu, LCS %zu\n", best_match(cx, cy), lcs_full(ux, uy));
    return all ? 0 : 1;
}
