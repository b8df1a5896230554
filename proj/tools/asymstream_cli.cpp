#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asymstream/adversarial_gen.hpp"
#include "asymstream/bench.hpp"
#include "asymstream/ed_stream.hpp"
#include "asymstream/fls.hpp"
#include "asymstream/lcs_binary.hpp"
#include "asymstream/lnst_stream.hpp"
#include "asymstream/oracles.hpp"

using namespace asymstream;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string kind;
    std::string instance;
    std::string out;
    std::string format = "json";
    std::string delta;
    double epsilon = 0.1;
    std::size_t t = 0;
    std::uint32_t r = 0;
    std::string inner = "exact";
    std::uint64_t seed = 1;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t u = 0;
    std::size_t s_param = 3;
    std::size_t c = 4;
    std::size_t l = 6;
    std::size_t dense_rows = 0;
    double alpha_frac = 0.6;
    std::string alpha, beta, blocks, z1, z2;
    std::vector<std::size_t> ns, ds;
    std::size_t reps = 1;
};

std::size_t parse_delta(const std::string& s, std::size_t fallback) {
    if (s.empty()) return fallback;
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw UsageError("--delta must look like 1/j");
    const long a = std::stol(s.substr(0, slash)), b = std::stol(s.substr(slash + 1));
    if (a != 1 || b < 2) throw UsageError("--delta must be 1/j with j >= 2");
    return static_cast<std::size_t>(b);
}

Bits parse_bits(const std::string& s) {
    Bits b;
    for (char ch : s) {
        if (ch == ',' || ch == ' ') continue;
        if (ch != '0' && ch != '1') throw UsageError("bit vectors use only 0 and 1");
        b.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return b;
}

std::vector<std::size_t> parse_list(const std::string& s) {
    std::vector<std::size_t> v;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) v.push_back(std::stoul(item));
    return v;
}

Bits random_bits(std::mt19937_64& g, std::size_t k) {
    Bits b(k);
    for (auto& v : b) v = static_cast<std::uint8_t>(g() & 1);
    return b;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
}

std::string report_text(const Options& o, const RunReport& rep) {
    if (o.format == "csv") {
        std::ostringstream s;
        s << "value,guarantee_factor,peak_space_words,online_symbols_read\n"
          << rep.value << ',' << rep.guarantee_factor << ',' << rep.peak_space_words << ',' << rep.online_symbols_read
          << '\n';
        return s.str();
    }
    return to_json(rep).dump(2) + "\n";
}

// ---- gen ----

struct Generated {
    Instance inst;
    json sidecar;
};

json expectation(const std::string& oracle, const std::string& relation, std::size_t bound, const std::string& claim) {
    return json{{"oracle", oracle}, {"relation", relation}, {"bound", bound}, {"claim", claim}};
}

Generated gen_dis(const Options& o, bool equal) {
    std::mt19937_64 g(o.seed);
    DisInput d;
    if (!o.alpha.empty() || !o.beta.empty()) {
        d.alpha = parse_bits(o.alpha);
        d.beta = parse_bits(o.beta);
        if (d.alpha.size() != d.beta.size() || d.alpha.empty()) throw UsageError("--alpha and --beta need equal nonzero length");
    } else {
        if (o.m == 0) throw UsageError("give --alpha/--beta or --m");
        d.alpha = random_bits(g, o.m);
        d.beta = random_bits(g, o.m);
    }
    auto e = equal ? gen_ed_dis_equal(d) : gen_ed_dis(d);
    Generated out{Instance{e.r, e.x(), e.y}, {}};
    const bool dis = d.disjoint();
    out.sidecar["params"] = {{"alpha", d.alpha}, {"beta", d.beta}, {"disjoint", dis}};
    out.sidecar["expect"] = dis ? expectation("ed", "ge", e.low, "disjoint inputs keep ED at or above the threshold")
                                : expectation("ed", "le", e.high, "intersecting inputs keep ED below the threshold");
    return out;
}

Generated gen_fool(const Options& o) {
    if (o.n == 0) throw UsageError("lcs-fool needs --n");
    std::mt19937_64 g(o.seed);
    FoolingBlockVector b;
    if (!o.blocks.empty()) b = FoolingBlockVector{o.n, parse_list(o.blocks)};
    else b = random_blocks(o.n, g);
    auto f = gen_lcs_fooling(b);
    Text x = f.x;
    x.insert(x.end(), f.fx.begin(), f.fx.end());
    Generated out{Instance{2, x, f.y}, {}};
    out.sidecar["params"] = {{"n", o.n}, {"s", b.s}};
    out.sidecar["expect"] = expectation("lcs", "eq", f.lcs, "LCS(x f(x), a^{n/3} b^{n/3} a^{n/3}) = n/2+5");
    return out;
}

Generated gen_perm(const Options& o) {
    if (o.n == 0) throw UsageError("perm-dis needs --n (n')");
    std::mt19937_64 g(o.seed);
    Bits z1 = o.z1.empty() ? random_bits(g, o.n / 4) : parse_bits(o.z1);
    Bits z2 = o.z2.empty() ? random_bits(g, o.n / 4) : parse_bits(o.z2);
    if (z1.size() != o.n / 4 || z2.size() != o.n / 4) throw UsageError("--z1 and --z2 need n'/4 bits each");
    auto p = gen_perm_dis(perm_dis_vector(z1, z2), o.n);
    Generated out{Instance{p.r, p.x, p.y}, {}};
    out.sidecar["params"] = {{"n_prime", o.n}, {"z1", z1}, {"z2", z2}, {"disjoint", p.disjoint}};
    out.sidecar["expect"] = expectation("lcs", "eq", p.expected_lis, "LCS(x, identity) = LIS(x), measured form 3n'/4+1+[z2 != 0]");
    return out;
}

Generated gen_gap(const Options& o, bool lns) {
    if (o.r == 0) throw UsageError("gap generators need --r");
    std::mt19937_64 g(o.seed);
    const std::size_t rows = lns ? o.r : (o.c ? o.r / o.c : 0);
    const std::size_t cols = lns ? o.c * o.r : o.r;
    GapMatrix B = random_gap_matrix(rows, cols, o.l, o.alpha_frac, o.dense_rows, g);
    auto gi = lns ? gen_lns_matrix(B, o.c) : gen_lis_matrix(B, o.c);
    Generated out{Instance{gi.r, gi.sigma, {}}, {}};
    out.sidecar["params"] = {{"r", o.r}, {"c", o.c}, {"l", o.l}, {"alpha", o.alpha_frac}, {"dense_rows", o.dense_rows}};
    const std::string oracle = lns ? "lns" : "lis";
    out.sidecar["expect"] = gi.dense ? expectation(oracle, "ge", gi.bound, "a dense row forces a long monotone run")
                                     : expectation(oracle, "le", gi.bound, "sparse rows cap the monotone run");
    return out;
}

int cmd_gen(const Options& o) {
    if (o.out.empty()) throw UsageError("gen needs --out");
    Generated gd;
    if (o.kind == "ed-dis") gd = gen_dis(o, false);
    else if (o.kind == "ed-dis-eq") gd = gen_dis(o, true);
    else if (o.kind == "lcs-fool") gd = gen_fool(o);
    else if (o.kind == "perm-dis") gd = gen_perm(o);
    else if (o.kind == "lis-gap") gd = gen_gap(o, false);
    else if (o.kind == "lns-gap") gd = gen_gap(o, true);
    else throw UsageError("unknown generator " + o.kind);
    write_instance_file(o.out, gd.inst);
    gd.sidecar["generator"] = o.kind;
    gd.sidecar["seed"] = o.seed;
    gd.sidecar["r"] = gd.inst.r;
    gd.sidecar["x_length"] = gd.inst.x.size();
    gd.sidecar["y_length"] = gd.inst.y.size();
    std::ofstream f(o.out + ".json");
    if (!f) throw UsageError("cannot write sidecar");
    f << gd.sidecar.dump(2) << "\n";
    return 0;
}

// ---- run ----

RunReport run_ed(const Options& o, const Instance& inst) {
    OnlineStream st(inst.x);
    OfflineText y(inst.y);
    EdStreamParams p;
    p.delta_den = parse_delta(o.delta, 2);
    p.epsilon = o.epsilon;
    p.inner.epsilon = o.epsilon;
    p.inner.backend = parse_inner_backend(o.inner);
    return approx_ed_streaming(st, y, p).report;
}

RunReport run_lcs(const Options& o, const Instance& inst) {
    if (inst.r != 2) throw UsageError("lcs-approx needs a binary instance");
    OnlineStream st(inst.x);
    OfflineText y(inst.y);
    LcsParams p;
    p.delta_den = parse_delta(o.delta, 3);
    p.epsilon = o.epsilon;
    p.inner.epsilon = o.epsilon;
    p.inner.backend = parse_inner_backend(o.inner);
    return approx_lcs_binary(st, y, p).report;
}

RunReport run_lnst(const Options& o, const Instance& inst) {
    if (o.t == 0) throw UsageError("lnst needs --t");
    const std::uint32_t r = o.r ? o.r : inst.r;
    for (Symbol c : inst.x)
        if (c >= r) throw UsageError("symbol outside --r");
    OnlineStream st(inst.x);
    return approx_lnst(st, r, o.t, o.epsilon).report;
}

RunReport run_fls(const Options& o, const Instance& inst) {
    if (o.u == 0) throw UsageError("fls needs --u");
    OnlineStream st(inst.x);
    SymbolSource src(st);
    OfflineText y(inst.y);
    SpaceMeter meter;
    FlsParams p;
    p.u = o.u;
    p.s = o.s_param;
    p.inner.epsilon = o.epsilon;
    p.inner.backend = parse_inner_backend(o.inner);
    FlsOutput out = find_longest_substring(src, y, p, &meter);
    RunReport rep;
    rep.value = static_cast<std::int64_t>(out.d);
    rep.guarantee_factor = guarantee_factor(p.u, p.s, o.epsilon);
    rep.peak_space_words = meter.peak();
    rep.online_symbols_read = static_cast<std::int64_t>(st.consumed());
    rep.trace = to_json(out);
    return rep;
}

RunReport run_oracle(const Options& o, const std::string& metric, const Instance& inst) {
    RunReport rep;
    SpaceMeter meter;
    if (metric == "ed") rep.value = static_cast<std::int64_t>(ed_full(inst.x, inst.y, &meter));
    else if (metric == "lcs") rep.value = static_cast<std::int64_t>(lcs_full(inst.x, inst.y));
    else if (metric == "lis") rep.value = static_cast<std::int64_t>(lis_exact(inst.x));
    else if (metric == "lns") rep.value = static_cast<std::int64_t>(lns_exact(inst.x, inst.r, &meter));
    else if (metric == "lnst") {
        if (o.t == 0) throw UsageError("oracle lnst needs --t");
        rep.value = static_cast<std::int64_t>(lnst_exact(inst.x, inst.r, o.t));
    } else if (metric == "substring") {
        auto m = best_substring_ed(inst.x, inst.y);
        rep.value = static_cast<std::int64_t>(m.distance);
        rep.trace = {{"p", m.ref.p}, {"q", m.ref.q}};
    } else {
        throw UsageError("unknown oracle metric " + metric);
    }
    rep.peak_space_words = meter.peak();
    rep.online_symbols_read = static_cast<std::int64_t>(inst.x.size());
    if (rep.trace.is_object()) rep.trace["metric"] = metric;
    return rep;
}

int cmd_run(const Options& o, const std::string& algo, const std::string& metric) {
    if (o.instance.empty()) throw UsageError("run needs an instance file");
    Instance inst = read_instance_file(o.instance);
    RunReport rep;
    if (algo == "ed-approx") rep = run_ed(o, inst);
    else if (algo == "lcs-approx") rep = run_lcs(o, inst);
    else if (algo == "lnst") rep = run_lnst(o, inst);
    else if (algo == "fls") rep = run_fls(o, inst);
    else if (algo == "oracle") rep = run_oracle(o, metric, inst);
    else throw UsageError("unknown algorithm " + algo);
    emit(o, report_text(o, rep));
    return 0;
}

// ---- bench ----

BenchRow bench_one(const Options& o, std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    BenchRow row;
    row.algo = o.kind;
    row.n = n;
    row.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    if (o.kind == "ed-approx") {
        const std::uint32_t r = o.r ? o.r : 4;
        Text y = random_text(g, n, r);
        Text x = plant_edits(g, y, d, r);
        row.exact = approx_ed_offline(InnerEdEstimator{0.1, InnerBackend::ExactBandedDoubling}, x, y);
        row.scale = row.exact;
        Options oo = o;
        oo.instance.clear();
        RunReport rep = run_ed(oo, Instance{r, x, y});
        row.value = rep.value;
        row.peak_space_words = rep.peak_space_words;
        row.ratio = row.exact ? static_cast<double>(rep.value) / static_cast<double>(row.exact) : (rep.value == 0 ? 1.0 : 0.0);
    } else if (o.kind == "lcs-approx") {
        Text x = random_text(g, n, 2), y = random_text(g, n, 2);
        row.exact = lcs_full(x, y);
        RunReport rep = run_lcs(o, Instance{2, x, y});
        row.scale = n;
        row.value = rep.value;
        row.peak_space_words = rep.peak_space_words;
        row.ratio = row.exact ? static_cast<double>(rep.value) / static_cast<double>(row.exact) : 1.0;
    } else if (o.kind == "lnst") {
        const std::uint32_t r = o.r ? o.r : 3;
        Text x = random_text(g, n, r);
        row.exact = lnst_exact(x, r, o.t);
        Options oo = o;
        oo.r = r;
        RunReport rep = run_lnst(oo, Instance{r, x, {}});
        row.scale = n;
        row.value = rep.value;
        row.peak_space_words = rep.peak_space_words;
        row.ratio = row.exact ? static_cast<double>(rep.value) / static_cast<double>(row.exact) : 1.0;
    } else {
        throw UsageError("bench supports ed-approx, lcs-approx, lnst");
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

int cmd_bench(const Options& o) {
    if (o.kind == "lnst" && o.t == 0) throw UsageError("bench lnst needs --t");
    std::vector<BenchRow> rows;
    const std::vector<std::size_t> ds = o.kind == "ed-approx" ? o.ds : std::vector<std::size_t>{0};
    std::uint64_t seed = o.seed;
    for (std::size_t n : o.ns)
        for (std::size_t d : ds)
            for (std::size_t k = 0; k < o.reps; ++k) rows.push_back(bench_one(o, n, d, seed++));
    std::ostringstream csv;
    csv << bench_csv_header() << "\n";
    for (const auto& r : rows) csv << bench_csv_line(r) << "\n";
    json summary = bench_summary(rows);
    summary["algo"] = o.kind;
    summary["seed"] = o.seed;
    if (o.out.empty()) {
        std::cout << csv.str();
        std::cerr << summary.dump(2) << "\n";
    } else {
        std::ofstream(o.out) << csv.str();
        std::ofstream(o.out + ".summary.json") << summary.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymmetric streaming estimators for edit distance, LCS and LNST"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "write a hard instance and its expected-bound sidecar");
    gen->add_option("kind", o.kind, "ed-dis | ed-dis-eq | lcs-fool | perm-dis | lis-gap | lns-gap")
        ->required()
        ->check(CLI::IsMember({"ed-dis", "ed-dis-eq", "lcs-fool", "perm-dis", "lis-gap", "lns-gap"}));
    gen->add_option("--out", o.out, "instance path; the sidecar goes to <out>.json");
    gen->add_option("--seed", o.seed);
    gen->add_option("--alpha", o.alpha, "bit vector for ed-dis");
    gen->add_option("--beta", o.beta, "bit vector for ed-dis");
    gen->add_option("--m", o.m, "random bit-vector length for ed-dis");
    gen->add_option("--n", o.n, "n for lcs-fool, n' for perm-dis");
    gen->add_option("--s", o.blocks, "comma-separated block sizes for lcs-fool");
    gen->add_option("--z1", o.z1);
    gen->add_option("--z2", o.z2);
    gen->add_option("--r", o.r, "matrix scale for the gap generators");
    gen->add_option("--c", o.c);
    gen->add_option("--l", o.l);
    gen->add_option("--density", o.alpha_frac, "dense-row fraction threshold");
    gen->add_option("--dense-rows", o.dense_rows);

    auto* run = app.add_subcommand("run", "run one algorithm on an instance file");
    run->require_subcommand(1);
    std::string metric;
    auto add_common = [&](CLI::App* c) {
        c->add_option("instance", o.instance)->required();
        c->add_option("--delta", o.delta, "1/j");
        c->add_option("--epsilon", o.epsilon);
        c->add_option("--t", o.t);
        c->add_option("--r", o.r);
        c->add_option("--inner-ed", o.inner)->check(CLI::IsMember({"exact", "banded"}));
        c->add_option("--seed", o.seed);
        c->add_option("--out", o.out);
        c->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    };
    std::vector<std::pair<std::string, CLI::App*>> runs;
    for (const char* name : {"ed-approx", "lcs-approx", "lnst", "fls"}) {
        auto* c = run->add_subcommand(name);
        add_common(c);
        if (std::string(name) == "fls") {
            c->add_option("--u", o.u)->required();
            c->add_option("--s", o.s_param);
        }
        runs.emplace_back(name, c);
    }
    auto* oracle = run->add_subcommand("oracle");
    oracle->add_option("metric", metric)->required()->check(CLI::IsMember({"ed", "lcs", "lis", "lns", "lnst", "substring"}));
    add_common(oracle);
    runs.emplace_back("oracle", oracle);

    auto* bench = app.add_subcommand("bench", "planted or random suite; CSV rows plus a JSON summary");
    std::string ns = "500", ds = "1,4,16";
    bench->add_option("algo", o.kind)->required()->check(CLI::IsMember({"ed-approx", "lcs-approx", "lnst"}));
    bench->add_option("--n", ns, "comma-separated lengths");
    bench->add_option("--d", ds, "comma-separated planted edit counts (ed-approx)");
    bench->add_option("--reps", o.reps);
    bench->add_option("--delta", o.delta);
    bench->add_option("--epsilon", o.epsilon);
    bench->add_option("--t", o.t);
    bench->add_option("--r", o.r);
    std::string bench_inner = "banded";
    bench->add_option("--inner-ed", bench_inner)->check(CLI::IsMember({"exact", "banded"}));
    bench->add_option("--seed", o.seed);
    bench->add_option("--out", o.out, "CSV path; the summary goes to <out>.summary.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (bench->parsed()) {
            o.ns = parse_list(ns);
            o.ds = parse_list(ds);
            o.inner = bench_inner;
            return cmd_bench(o);
        }
        for (auto& [name, c] : runs)
            if (c->parsed()) return cmd_run(o, name, metric);
    } catch (const SizingError& e) {
        std::cerr << "sizing error: " << e.what() << "\n";
        return 1;
    } catch (const HarnessError& e) {
        std::cerr << "harness error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
