#include <algorithm>
#include <random>

#include "asymstream/adversarial_gen.hpp"
#include "asymstream/oracles.hpp"
#include "doctest.h"

using namespace asymstream;

TEST_CASE("ed-dis single-bit instances") {
    auto far = gen_ed_dis(DisInput{{1}, {0}});
    CHECK(far.x1 == Text{1, 2, 4, 0});
    CHECK(far.x2 == Text{2, 3, 0, 6});
    CHECK(far.y == Text{1, 2, 3, 4, 5, 6});
    CHECK(far.r == 7);
    CHECK(ed_full(far.x(), far.y) == 5);

    auto near = gen_ed_dis(DisInput{{1}, {1}});
    CHECK(ed_full(near.x(), near.y) == 4);
}

TEST_CASE("ed-dis threshold separates all m=2 pairs") {
    for (std::uint64_t code = 0; code < 16; ++code) {
        DisInput d = dis_from_index(2, code);
        auto inst = gen_ed_dis(d);
        const std::size_t e = ed_full(inst.x(), inst.y);
        if (d.disjoint()) CHECK(e >= 12);
        else CHECK(e <= 11);
    }
}

TEST_CASE("ed-dis filler count matches zeros of the balanced vectors") {
    for (std::uint64_t code = 0; code < 64; ++code) {
        DisInput d = dis_from_index(3, code);
        auto inst = gen_ed_dis(d);
        Text x = inst.x();
        auto ap = d.alpha_prime(), bp = d.beta_prime();
        auto zeros = std::count(ap.begin(), ap.end(), 0) + std::count(bp.begin(), bp.end(), 0);
        CHECK(std::count(x.begin(), x.end(), 0) == zeros);
        CHECK(x.size() == 8 * 3);
    }
}

TEST_CASE("ed-dis equal length variant") {
    for (std::uint64_t code = 0; code < 4; ++code) {
        DisInput d = dis_from_index(1, code);
        auto inst = gen_ed_dis_equal(d);
        CHECK(inst.x().size() == 18);
        CHECK(inst.y.size() == 18);
        const std::size_t e = ed_full(inst.x(), inst.y);
        if (d.disjoint()) CHECK(e >= 7);
        else CHECK(e <= 6);
    }
    auto base = gen_ed_dis(DisInput{{1, 0}, {0, 1}});
    Text x = base.x(), y = base.y;
    const std::size_t before = ed_full(x, y);
    for (Symbol v = 13; v <= 20; ++v) {
        x.push_back(v);
        y.push_back(v);
    }
    CHECK(ed_full(x, y) == before);
}

TEST_CASE("lcs fooling instance at n=120") {
    auto a = gen_lcs_fooling(FoolingBlockVector{120, {9, 9, 7}});
    CHECK(a.x.size() == 65);
    CHECK(a.fx.size() == 55);
    CHECK(std::count(a.x.begin(), a.x.end(), 1) == 40);
    Text xf = a.x;
    xf.insert(xf.end(), a.fx.begin(), a.fx.end());
    CHECK(lcs_full(xf, a.y) == 65);

    auto b = gen_lcs_fooling(FoolingBlockVector{120, {9, 7, 9}});
    auto [ab, ba] = fooling_cross(a, b);
    CHECK(std::max(lcs_full(ab, a.y), lcs_full(ba, a.y)) >= 66);
}

TEST_CASE("lcs fooling rejects infeasible block vectors") {
    CHECK_THROWS(gen_lcs_fooling(FoolingBlockVector{60, {5}}));
    CHECK_THROWS(gen_lcs_fooling(FoolingBlockVector{120, {9, 9, 6}}));
    CHECK_THROWS(gen_lcs_fooling(FoolingBlockVector{120, {10, 8, 7}}));
}

TEST_CASE("random block vectors are feasible and exact") {
    std::mt19937_64 g(4);
    for (int rep = 0; rep < 5; ++rep) {
        auto b = random_blocks(240, g);
        CHECK_NOTHROW(b.validate());
        auto inst = gen_lcs_fooling(b);
        Text xf = inst.x;
        xf.insert(xf.end(), inst.fx.begin(), inst.fx.end());
        CHECK(lcs_full(xf, inst.y) == 125);
    }
}

TEST_CASE("perm-dis gap at n'=8") {
    auto disj = gen_perm_dis(perm_dis_vector({1, 0}, {0, 1}), 8);
    CHECK(disj.disjoint);
    Text sorted = disj.x;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == disj.y);
    CHECK(disj.x == Text{3, 2, 4, 5, 10, 11, 13, 12, 0, 1, 7, 6, 9, 8, 14, 15});
    CHECK(lis_exact(disj.x) == 8);

    auto hit = gen_perm_dis(perm_dis_vector({1, 0}, {1, 0}), 8);
    CHECK_FALSE(hit.disjoint);
    CHECK(lis_exact(hit.x) == 8);

    auto zero = gen_perm_dis(perm_dis_vector({1, 1}, {0, 0}), 8);
    CHECK(zero.disjoint);
    CHECK(lis_exact(zero.x) == 7);
}

TEST_CASE("perm-dis value depends only on the second half") {
    for (std::size_t np : {8u, 12u, 16u}) {
        const std::size_t q = np / 4;
        for (std::uint64_t code = 0; code < (1u << (2 * q)); ++code) {
            Bits z1, z2;
            for (std::size_t i = 0; i < q; ++i) z1.push_back((code >> i) & 1);
            for (std::size_t i = 0; i < q; ++i) z2.push_back((code >> (q + i)) & 1);
            auto inst = gen_perm_dis(perm_dis_vector(z1, z2), np);
            const bool second = std::find(z2.begin(), z2.end(), 1) != z2.end();
            CHECK(inst.expected_lis == 3 * np / 4 + 1 + (second ? 1 : 0));
            CHECK(lis_exact(inst.x) == inst.expected_lis);
        }
    }
    CHECK_THROWS(gen_perm_dis(Bits(8, 1), 8));
    CHECK_THROWS(gen_perm_dis(Bits(6, 0), 6));
}

TEST_CASE("lis gap matrices at r=24") {
    std::mt19937_64 g(12);
    auto dense = random_gap_matrix(6, 24, 6, 0.6, 1, g);
    auto gd = gen_lis_matrix(dense, 4);
    CHECK(gd.sigma.size() == 144);
    CHECK(gd.bound == 15);
    CHECK(lis_exact(gd.sigma) >= 15);

    auto sparse = random_gap_matrix(6, 24, 6, 0.6, 0, g);
    auto gs = gen_lis_matrix(sparse, 4);
    CHECK(gs.bound == 11);
    CHECK(lis_exact(gs.sigma) <= 11);

    GapMatrix empty = sparse;
    for (auto& row : empty.rows) std::fill(row.begin(), row.end(), 0);
    CHECK(lis_exact(gen_lis_matrix(empty, 4).sigma) == 1);
}

TEST_CASE("lns gap matrices") {
    std::mt19937_64 g(13);
    auto dense = random_gap_matrix(6, 24, 6, 0.6, 2, g);
    auto gd = gen_lns_matrix(dense, 4);
    CHECK(gd.bound == 15);
    CHECK(lns_exact(gd.sigma, gd.r) >= 15);

    auto sparse = random_gap_matrix(6, 24, 6, 0.6, 0, g);
    auto gs = gen_lns_matrix(sparse, 4);
    CHECK(gs.bound == 16);
    CHECK(lns_exact(gs.sigma, gs.r) <= 16);

    GapMatrix one;
    one.cols = 8;
    one.l = 2;
    one.rows = {Bits(8, 1)};
    one.dense = {true};
    auto g1 = gen_lns_matrix(one, 8);
    CHECK(lns_exact(g1.sigma, g1.r) == 8);
}

TEST_CASE("gap matrix labels are enforced") {
    GapMatrix B;
    B.cols = 6;
    B.l = 2;
    B.alpha = 0.5;
    B.rows = {Bits{1, 0, 1, 0, 0, 0}};
    B.dense = {false};
    CHECK_THROWS(B.validate());
    B.dense = {true};
    CHECK_THROWS(B.validate());
    B.rows = {Bits{1, 0, 0, 1, 0, 0}};
    B.dense = {false};
    CHECK_NOTHROW(B.validate());
}

TEST_CASE("planted edits stay within the requested distance") {
    std::mt19937_64 g(8);
    for (int rep = 0; rep < 50; ++rep) {
        Text y = random_text(g, 40, 3);
        const std::size_t k = g() % 6;
        Text x = plant_edits(g, y, k, 3);
        CHECK(ed_full(x, y) <= k);
    }
}
