#include "asymstream/adversarial_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace asymstream {

namespace {

constexpr Symbol kFiller = 0;
constexpr Symbol kA = 0;
constexpr Symbol kB = 1;

std::size_t ceil_frac(double alpha, std::size_t w) {
    return static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(w) - 1e-9));
}

void append_run(Text& t, Symbol c, std::size_t k) { t.insert(t.end(), k, c); }

}  // namespace

Bits DisInput::alpha_prime() const {
    Bits out;
    for (auto b : alpha) {
        out.push_back(b);
        out.push_back(1 - b);
    }
    return out;
}

Bits DisInput::beta_prime() const {
    Bits out;
    for (auto b : beta) {
        out.push_back(1 - b);
        out.push_back(b);
    }
    return out;
}

bool DisInput::disjoint() const {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] && beta[i]) return false;
    return true;
}

DisInput dis_from_index(std::size_t m, std::uint64_t code) {
    DisInput d;
    for (std::size_t i = 0; i < m; ++i) d.alpha.push_back((code >> i) & 1);
    for (std::size_t i = 0; i < m; ++i) d.beta.push_back((code >> (m + i)) & 1);
    return d;
}

Text EdDisInstance::x() const {
    Text t = x1;
    t.insert(t.end(), x2.begin(), x2.end());
    return t;
}

EdDisInstance gen_ed_dis(const DisInput& dis) {
    const std::size_t m = dis.m();
    if (m == 0) throw std::invalid_argument("ed-dis: need m >= 1");
    if (dis.beta.size() != m) throw std::invalid_argument("ed-dis: alpha and beta lengths differ");
    const Bits ap = dis.alpha_prime(), bp = dis.beta_prime();
    EdDisInstance inst;
    for (std::size_t j = 1; j <= 2 * m; ++j) {
        inst.x1.push_back(static_cast<Symbol>(3 * j - 2));
        inst.x1.push_back(ap[j - 1] ? static_cast<Symbol>(3 * j - 1) : kFiller);
        inst.x2.push_back(bp[j - 1] ? static_cast<Symbol>(3 * j - 1) : kFiller);
        inst.x2.push_back(static_cast<Symbol>(3 * j));
    }
    for (std::size_t v = 1; v <= 6 * m; ++v) inst.y.push_back(static_cast<Symbol>(v));
    inst.r = static_cast<std::uint32_t>(6 * m + 1);
    inst.low = 7 * m - 2;
    inst.high = 7 * m - 3;
    return inst;
}

EdDisInstance gen_ed_dis_equal(const DisInput& dis) {
    EdDisInstance inst = gen_ed_dis(dis);
    const std::size_t m = dis.m();
    for (std::size_t v = 6 * m + 1; v <= 16 * m; ++v) {
        inst.x2.push_back(static_cast<Symbol>(v));
        inst.y.push_back(static_cast<Symbol>(v));
    }
    append_run(inst.y, kFiller, 2 * m);
    inst.r = static_cast<std::uint32_t>(16 * m + 1);
    inst.low = 9 * m - 2;
    inst.high = 9 * m - 3;
    return inst;
}

void FoolingBlockVector::validate() const {
    if (n % 60 != 0 || n < 120) throw std::invalid_argument("lcs-fool: n must be a multiple of 60 and at least 120");
    if (s.size() != l()) throw std::invalid_argument("lcs-fool: need exactly n/30-1 blocks");
    std::size_t sum = 0;
    for (auto v : s) {
        if (v < 1 || v > 9) throw std::invalid_argument("lcs-fool: block sizes must lie in [1,9]");
        sum += v;
    }
    if (sum != n / 6 + 5) throw std::invalid_argument("lcs-fool: block sizes must sum to n/6+5");
}

FoolingInstance gen_lcs_fooling(const FoolingBlockVector& blocks) {
    blocks.validate();
    FoolingInstance inst;
    append_run(inst.x, kB, 10);
    for (auto v : blocks.s) {
        append_run(inst.x, kA, v);
        append_run(inst.x, kB, 10);
    }
    inst.fx.assign(inst.x.begin() + 10, inst.x.end());
    const std::size_t third = blocks.n / 3;
    append_run(inst.y, kA, third);
    append_run(inst.y, kB, third);
    append_run(inst.y, kA, third);
    inst.lcs = blocks.n / 2 + 5;
    return inst;
}

FoolingBlockVector random_blocks(std::size_t n, std::mt19937_64& rng) {
    FoolingBlockVector b;
    b.n = n;
    if (n % 60 != 0 || n < 120) throw std::invalid_argument("lcs-fool: n must be a multiple of 60 and at least 120");
    b.s.assign(b.l(), 1);
    std::size_t left = n / 6 + 5 - b.l();
    std::vector<std::size_t> open(b.l());
    std::iota(open.begin(), open.end(), 0);
    while (left > 0) {
        std::size_t k = std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng);
        if (++b.s[open[k]] == 9) {
            open[k] = open.back();
            open.pop_back();
        }
        --left;
    }
    return b;
}

std::pair<Text, Text> fooling_cross(const FoolingInstance& a, const FoolingInstance& b) {
    Text ab = a.x, ba = b.x;
    ab.insert(ab.end(), b.fx.begin(), b.fx.end());
    ba.insert(ba.end(), a.fx.begin(), a.fx.end());
    return {ab, ba};
}

PermDisInstance gen_perm_dis(const Bits& z, std::size_t np) {
    if (np < 8 || np % 4 != 0) throw std::invalid_argument("perm-dis: n' must be a multiple of 4 and at least 8");
    if (z.size() != np) throw std::invalid_argument("perm-dis: z must have length n'");
    for (std::size_t i = 1; 2 * i <= np; ++i)
        if (z[2 * i - 1] != 1 - z[2 * i - 2]) throw std::invalid_argument("perm-dis: z violates the pairing constraint");
    const std::size_t h = np / 2;
    PermDisInstance inst;
    for (std::size_t i = 1; i <= np; ++i) {
        const bool odd = i % 2 == 1;
        const std::size_t b = i <= h ? i : i - h;
        std::size_t lo;
        if (i <= h) lo = odd ? 4 * b - 1 : 4 * b - 3;
        else lo = odd ? 4 * b - 3 : 4 * b - 1;
        // values are 1-based in the construction
        Symbol first = static_cast<Symbol>(lo - 1), second = static_cast<Symbol>(lo);
        if (!z[i - 1]) std::swap(first, second);
        inst.x.push_back(first);
        inst.x.push_back(second);
    }
    for (std::size_t v = 0; v < 2 * np; ++v) inst.y.push_back(static_cast<Symbol>(v));
    inst.r = static_cast<std::uint32_t>(2 * np);
    inst.disjoint = true;
    bool second = false;
    for (std::size_t i = 2; i <= h; i += 2) {
        if (z[i - 1] && z[h + i - 1]) inst.disjoint = false;
        second = second || z[h + i - 1];
    }
    // Only the second half moves the value; disjointness does not determine it.
    inst.expected_lis = 3 * np / 4 + 1 + (second ? 1 : 0);
    return inst;
}

Bits perm_dis_vector(const Bits& z1, const Bits& z2) {
    if (z1.size() != z2.size()) throw std::invalid_argument("perm-dis: halves differ in length");
    Bits z;
    for (const Bits* half : {&z1, &z2})
        for (auto b : *half) {
            z.push_back(1 - b);
            z.push_back(b);
        }
    return z;
}

bool GapMatrix::any_dense() const {
    return std::find(dense.begin(), dense.end(), true) != dense.end();
}

void GapMatrix::validate() const {
    if (dense.size() != rows.size()) throw std::invalid_argument("gap matrix: one label per row");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Bits& row = rows[i];
        if (row.size() != cols) throw std::invalid_argument("gap matrix: ragged row");
        if (dense[i]) {
            if (static_cast<std::size_t>(std::count(row.begin(), row.end(), 1)) < ceil_frac(alpha, cols))
                throw std::invalid_argument("gap matrix: dense row has too few ones");
        } else {
            std::size_t last = 0;
            bool seen = false;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!row[j]) continue;
                if (seen && j - last - 1 < l) throw std::invalid_argument("gap matrix: sparse row has ones too close");
                last = j;
                seen = true;
            }
        }
    }
}

GapMatrix random_gap_matrix(std::size_t rows, std::size_t cols, std::size_t l, double alpha,
                            std::size_t dense_rows, std::mt19937_64& rng) {
    if (dense_rows > rows) throw std::invalid_argument("gap matrix: more dense rows than rows");
    GapMatrix B;
    B.cols = cols;
    B.l = l;
    B.alpha = alpha;
    B.rows.assign(rows, Bits(cols, 0));
    B.dense.assign(rows, false);
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < dense_rows; ++k) B.dense[order[k]] = true;

    std::vector<std::size_t> idx(cols);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < rows; ++i) {
        Bits& row = B.rows[i];
        if (B.dense[i]) {
            const std::size_t need = ceil_frac(alpha, cols);
            const std::size_t ones = std::uniform_int_distribution<std::size_t>(need, cols)(rng);
            std::shuffle(idx.begin(), idx.end(), rng);
            for (std::size_t k = 0; k < ones; ++k) row[idx[k]] = 1;
        } else {
            std::size_t j = std::uniform_int_distribution<std::size_t>(0, l)(rng);
            while (j < cols) {
                row[j] = 1;
                j += l + 1 + std::uniform_int_distribution<std::size_t>(0, l)(rng);
            }
        }
    }
    return B;
}

GapInstance gen_lis_matrix(const GapMatrix& B, std::size_t c) {
    B.validate();
    const std::size_t r = B.cols;
    if (c == 0 || r % c != 0 || B.rows.size() != r / c)
        throw std::invalid_argument("lis-gap: need r/c rows and r columns with c dividing r");
    const std::size_t s = r / c;
    GapInstance g;
    for (std::size_t j = 1; j <= r; ++j)
        for (std::size_t i = 1; i <= s; ++i)
            g.sigma.push_back(B.rows[i - 1][j - 1] ? static_cast<Symbol>((i - 1) * s + j) : 0);
    g.r = static_cast<std::uint32_t>(s == 0 ? 1 : (s - 1) * s + r + 1);
    g.dense = B.any_dense();
    // zeros are a genuine smallest symbol, so the sparse side gets one extra
    g.bound = g.dense ? ceil_frac(B.alpha, r) : s + r / B.l + 1;
    return g;
}

GapInstance gen_lns_matrix(const GapMatrix& B, std::size_t c) {
    B.validate();
    const std::size_t r = B.rows.size();
    if (c == 0 || B.cols != c * r) throw std::invalid_argument("lns-gap: need r rows and cr columns");
    const std::size_t t = B.cols;
    GapInstance g;
    for (std::size_t j = 1; j <= t; ++j)
        for (std::size_t i = 1; i <= r; ++i)
            g.sigma.push_back(static_cast<Symbol>(B.rows[i - 1][j - 1] ? i - 1 : t + r - j));
    g.r = static_cast<std::uint32_t>(std::max<std::size_t>(1, t + r));
    g.dense = B.any_dense();
    g.bound = g.dense ? ceil_frac(B.alpha, t) : 2 * r + t / B.l;
    return g;
}

Text random_text(std::mt19937_64& rng, std::size_t n, std::uint32_t r) {
    Text t(n);
    for (auto& c : t) c = static_cast<Symbol>(rng() % r);
    return t;
}

Text plant_edits(std::mt19937_64& rng, Text x, std::size_t edits, std::uint32_t r) {
    for (std::size_t e = 0; e < edits; ++e) {
        const std::size_t pos = x.empty() ? 0 : rng() % x.size();
        switch (rng() % 3) {
            case 0:
                if (!x.empty() && r > 1) x[pos] = static_cast<Symbol>((x[pos] + 1 + rng() % (r - 1)) % r);
                break;
            case 1:
                if (!x.empty()) x.erase(x.begin() + static_cast<long>(pos));
                break;
            default:
                x.insert(x.begin() + static_cast<long>(pos), static_cast<Symbol>(rng() % r));
                break;
        }
    }
    return x;
}

}  // namespace asymstream
