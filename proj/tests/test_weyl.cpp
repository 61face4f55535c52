#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "weylcrit/weyl.hpp"

using namespace weylcrit;

namespace {

WeightVec random_G_dominant(std::mt19937& rng, int m, int bound) {
    std::uniform_int_distribution<int> top(0, bound);
    WeightVec v(m);
    v[0] = top(rng);
    for (int i = 1; i + 1 < m; ++i) v[i] = std::uniform_int_distribution<int>(0, v[i - 1])(rng);
    int cap = v[m - 2];
    v[m - 1] = std::uniform_int_distribution<int>(-cap, cap)(rng);
    return v;
}

}  // namespace

TEST_CASE("simple roots of D_m") {
    auto r3 = simple_roots(3);
    REQUIRE(r3.size() == 3);
    CHECK(r3[0] == RootD{0, 1, false, 1});
    CHECK(r3[1] == RootD{1, 2, false, 1});
    CHECK(r3[2] == RootD{1, 2, true, 1});

    auto r2 = simple_roots(2);
    CHECK(r2[0] == RootD{0, 1, false, 1});
    CHECK(r2[1] == RootD{0, 1, true, 1});

    CHECK(simple_roots(5).size() == 5);
    CHECK_THROWS_AS(simple_roots(1), std::invalid_argument);
}

TEST_CASE("rho pairs to one with every simple coroot") {
    CHECK(rho(3) == WeightVec{2, 1, 0});
    CHECK(rho(2) == WeightVec{1, 0});
    for (int m = 2; m <= 7; ++m)
        for (const RootD& a : simple_roots(m)) CHECK(pairing(rho(m), a) == 1);
}

TEST_CASE("lengths of distinguished elements") {
    CHECK(length(SignedPerm::identity(3)) == 0);
    int longest = 0;
    for (const auto& w : enumerate_weyl(3)) longest = std::max(longest, length(w));
    CHECK(longest == 6);  // |positive roots of D_3|
    CHECK(length(special_elements(2).w_P) == 4);
    CHECK(length(special_elements(4).w_P) == 8);
}

TEST_CASE("weyl group enumeration counts") {
    CHECK(enumerate_weyl(2).size() == 4);
    CHECK(enumerate_weyl(3).size() == 24);
    CHECK(enumerate_weyl(5).size() == 1920);
    CHECK(enumerate_weyl(6).size() == 23040);
    auto all = enumerate_weyl(4);
    CHECK(all.size() == 192);
    CHECK(std::set<SignedPerm>(all.begin(), all.end()).size() == all.size());
    CHECK_THROWS_AS(enumerate_weyl(9), std::invalid_argument);
}

TEST_CASE("group axioms on random elements") {
    auto all = enumerate_weyl(4);
    std::mt19937 rng(99);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == SignedPerm::identity(4));
        CHECK(a.inverse() * a == SignedPerm::identity(4));
        // action is a homomorphism
        WeightVec v = random_G_dominant(rng, 4, 5);
        CHECK((a * b).apply(v) == a.apply(b.apply(v)));
    }
}

TEST_CASE("odd sign count is rejected") {
    CHECK_THROWS_AS(SignedPerm({0, 1, 2}, {-1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignedPerm({0, 0, 2}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("special elements for n = 2") {
    auto se = special_elements(2);
    CHECK(se.w_P == SignedPerm({0, 1, 2}, {-1, 1, -1}));
    CHECK(se.w_P * se.w_P == SignedPerm::identity(3));
    CHECK(se.w_G * se.w_G == SignedPerm::identity(3));
    CHECK(se.w_M * se.w_M == SignedPerm::identity(3));
    // w^- sends e_1 to -e_2
    CHECK(se.w_minus.perm(1) == 2);
    CHECK(se.w_minus.sign(1) == -1);
    CHECK_THROWS_AS(special_elements(3), std::invalid_argument);
}

TEST_CASE("factorization of w_P") {
    CHECK(factor_w_P(2) == std::vector<int>{0, 2, 1, 0});
    for (int n : {2, 4, 6}) {
        auto word = factor_w_P(n);
        CHECK(static_cast<int>(word.size()) == 2 * n);
        CHECK(product_of_word(n + 1, word) == special_elements(n).w_P);
        // reduced: every prefix has length equal to its letter count
        std::vector<int> prefix;
        for (int k : word) {
            prefix.push_back(k);
            CHECK(length(product_of_word(n + 1, prefix)) == static_cast<int>(prefix.size()));
        }
    }
}

TEST_CASE("greedy reduced word matches the root-counting length") {
    for (int m : {3, 4, 5}) {
        for (const auto& w : enumerate_weyl(m)) {
            auto word = reduced_word(w);
            CHECK(static_cast<int>(word.size()) == length(w));
            CHECK(product_of_word(m, word) == w);
        }
    }
}

TEST_CASE("kostant representatives for n = 2") {
    auto reps = kostant_reps(2);
    REQUIRE(reps.size() == 6);
    std::multiset<int> lengths;
    for (const auto& w : reps) lengths.insert(length(w));
    CHECK(lengths == std::multiset<int>{0, 1, 2, 2, 3, 4});
    CHECK(std::find(reps.begin(), reps.end(), SignedPerm::identity(3)) != reps.end());

    auto se = special_elements(2);
    std::vector<SignedPerm> balanced;
    for (const auto& w : reps)
        if (is_balanced(w, 2)) balanced.push_back(w);
    REQUIRE(balanced.size() == 2);
    CHECK(((balanced[0] == se.w_plus && balanced[1] == se.w_minus) ||
           (balanced[0] == se.w_minus && balanced[1] == se.w_plus)));
    CHECK_THROWS_AS(kostant_reps(8), std::invalid_argument);
    CHECK_THROWS_AS(kostant_reps(3), std::invalid_argument);
}

TEST_CASE("dot action") {
    std::mt19937 rng(5);
    auto all = enumerate_weyl(3);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    WeightVec lam{2, 1, -1};
    CHECK(dot_action(SignedPerm::identity(3), lam) == lam);

    // (w^+)^{-1} . (d e_0 + mu) with mu = (3,2), d = -3
    auto se = special_elements(2);
    CHECK(dot_action(se.w_plus.inverse(), WeightVec{-3, 3, 2}) == WeightVec{2, 1, -1});

    for (int trial = 0; trial < 50; ++trial) {
        const auto& w = all[pick(rng)];
        WeightVec v = random_G_dominant(rng, 3, 6);
        CHECK(dot_action(w, dot_action(w.inverse(), v)) == v);
    }
    CHECK_THROWS_AS(dot_action(SignedPerm::identity(3), WeightVec{1, 2}), std::invalid_argument);
}

TEST_CASE("prime and vee maps") {
    auto se2 = special_elements(2);
    CHECK(prime_map(se2.w_plus, 2) == se2.w_minus);
    CHECK(vee_map(se2.w_plus, 2) == se2.w_plus);
    CHECK(vee_map(se2.w_minus, 2) == se2.w_minus);
    CHECK(prime_map(SignedPerm::identity(3), 2) == se2.w_P);
    CHECK(length(SignedPerm::identity(3)) + length(prime_map(SignedPerm::identity(3), 2)) == 4);

    for (int n : {2, 4}) {
        auto reps = kostant_reps(n);
        std::set<SignedPerm> seen_prime, seen_vee;
        for (const auto& w : reps) {
            SignedPerm wp = prime_map(w, n);
            SignedPerm wv = vee_map(w, n);
            CHECK(is_kostant_rep(wp, n));
            CHECK(is_kostant_rep(wv, n));
            CHECK(length(w) + length(wp) == 2 * n);
            CHECK(length(w) + length(wv) == 2 * n);
            CHECK(prime_map(wp, n) == w);
            CHECK(vee_map(wv, n) == w);
            CHECK(is_balanced(w, n) == is_balanced(wp, n));
            CHECK(is_balanced(w, n) == is_balanced(wv, n));
            seen_prime.insert(wp);
            seen_vee.insert(wv);
        }
        CHECK(seen_prime.size() == reps.size());
        CHECK(seen_vee.size() == reps.size());
    }
    // not a Kostant representative: the Levi reflection s_1
    CHECK_THROWS_AS(prime_map(SignedPerm::simple_reflection(3, 1), 2), std::invalid_argument);
}

TEST_CASE("dominance predicates") {
    CHECK(is_dominant_G(WeightVec{2, 1, -1}));
    CHECK(is_dominant_G(WeightVec{0, 0, 0}));
    CHECK_FALSE(is_dominant_G(WeightVec{1, 2, 0}));
    CHECK(is_dominant_M(WeightVec{-5, 2, 1}));   // GL_1 slot unconstrained
    CHECK_FALSE(is_dominant_G(WeightVec{-5, 2, 1}));
    CHECK_FALSE(is_dominant_M(WeightVec{0, 1, 2}));
}

TEST_CASE("kostant representatives take G-dominant weights to M-dominant ones") {
    std::mt19937 rng(17);
    for (int n : {2, 4}) {
        auto reps = kostant_reps(n);
        for (int trial = 0; trial < 40; ++trial) {
            WeightVec lam = random_G_dominant(rng, n + 1, 4);
            for (const auto& w : reps) CHECK(is_dominant_M(dot_action(w, lam)));
        }
    }
}

TEST_CASE("weyl dimension over the Levi D_n factor") {
    CHECK(weyl_dim_M(WeightVec{7, 0, 0}, 2) == 1);  // GL_1 slot contributes nothing
    CHECK(weyl_dim_M(WeightVec{0, 1, 0}, 2) == 4);

    // D_2 = A_1 x A_1 closed form: (a-b+1)(a+b+1)
    for (int a = 0; a <= 5; ++a)
        for (int b = -a; b <= a; ++b)
            CHECK(weyl_dim_M(WeightVec{0, a, b}, 2) == (a - b + 1) * (a + b + 1));

    // invariance under the kappa flip of the last entry
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        WeightVec lam = random_G_dominant(rng, 5, 4);
        lam[0] = -3;  // arbitrary GL_1 entry
        WeightVec flipped = lam;
        flipped[4] = -flipped[4];
        CHECK(weyl_dim_M(lam, 4) == weyl_dim_M(flipped, 4));
    }
    CHECK_THROWS_AS(weyl_dim_M(WeightVec{0, 1, 2}, 2), std::invalid_argument);
}

TEST_CASE("kostant euler characteristic vanishes") {
    CHECK(kostant_euler_check(WeightVec{2, 1, -1}, 2) == 0);
    CHECK(kostant_euler_check(WeightVec{0, 0, 0}, 2) == 0);
    CHECK(kostant_euler_check(rho(5), 4) == 0);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial)
        CHECK(kostant_euler_check(random_G_dominant(rng, 3, 6), 2) == 0);
}
