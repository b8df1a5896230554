#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "asymstream/core.hpp"

namespace asymstream {

using Bits = std::vector<std::uint8_t>;

// Set-disjointness input. DIS = 1 iff no index carries a 1 in both vectors.
struct DisInput {
    Bits alpha;
    Bits beta;

    std::size_t m() const { return alpha.size(); }
    Bits alpha_prime() const;
    Bits beta_prime() const;
    bool disjoint() const;
};

DisInput dis_from_index(std::size_t m, std::uint64_t code);  // low m bits -> alpha, next m -> beta

// Symbols: the filler a is 0, numbers keep their value. Alphabet size 6m+1.
struct EdDisInstance {
    Text x1, x2, y;
    std::uint32_t r = 0;
    std::size_t low = 0;   // DIS = 1 implies ED >= low
    std::size_t high = 0;  // DIS = 0 implies ED <= high

    Text x() const;
};

EdDisInstance gen_ed_dis(const DisInput& dis);

// Equal-length variant; x = x1 ∘ x2 ∘ (6m+1..16m), y = (1..16m) ∘ a^{2m}.
EdDisInstance gen_ed_dis_equal(const DisInput& dis);

// Binary symbols: a = 0, b = 1.
struct FoolingBlockVector {
    std::size_t n = 0;
    std::vector<std::size_t> s;

    std::size_t l() const { return n / 30 - 1; }
    void validate() const;
};

struct FoolingInstance {
    Text x, fx, y;
    std::size_t lcs = 0;  // LCS(x ∘ fx, y)
};

FoolingInstance gen_lcs_fooling(const FoolingBlockVector& blocks);
FoolingBlockVector random_blocks(std::size_t n, std::mt19937_64& rng);
// Both cross concatenations x1 ∘ f(x2) and x2 ∘ f(x1).
std::pair<Text, Text> fooling_cross(const FoolingInstance& a, const FoolingInstance& b);

struct PermDisInstance {
    Text x, y;  // symbols 0..2n'-1
    std::uint32_t r = 0;
    bool disjoint = false;
    std::size_t expected_lis = 0;  // 3n'/4 + 1, plus 1 when the second half of z has a set even position
};

PermDisInstance gen_perm_dis(const Bits& z, std::size_t n_prime);
// Builds a valid z whose even positions in each half are z1 and z2 (each of length n'/4).
Bits perm_dis_vector(const Bits& z1, const Bits& z2);

struct GapMatrix {
    std::vector<Bits> rows;
    std::size_t cols = 0;
    std::vector<bool> dense;  // per-row regime label
    std::size_t l = 1;
    double alpha = 0.5;

    bool any_dense() const;
    void validate() const;
};

// Sparse rows keep at least l zeros between ones; dense rows hold at least ceil(alpha*cols) ones.
GapMatrix random_gap_matrix(std::size_t rows, std::size_t cols, std::size_t l, double alpha,
                            std::size_t dense_rows, std::mt19937_64& rng);

struct GapInstance {
    Text sigma;
    std::uint32_t r = 0;
    bool dense = false;
    std::size_t bound = 0;  // dense: lower bound; sparse: upper bound
};

// B has r/c rows and r columns; entry (i,j) is (i-1)(r/c)+j or 0.
GapInstance gen_lis_matrix(const GapMatrix& B, std::size_t c);
// B has r rows and cr columns; ones in row i become i, zeros in column j become cr+r+1-j (shifted to 0-based).
GapInstance gen_lns_matrix(const GapMatrix& B, std::size_t c);

Text random_text(std::mt19937_64& rng, std::size_t n, std::uint32_t r);
// Applies `edits` random substitutions, deletions and insertions.
Text plant_edits(std::mt19937_64& rng, Text x, std::size_t edits, std::uint32_t r);

}  // namespace asymstream
