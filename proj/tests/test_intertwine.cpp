#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "weylcrit/critical.hpp"
#include "weylcrit/intertwine.hpp"

using namespace weylcrit;

TEST_CASE("discrete series parameter") {
    CHECK(ds_param(WeightVec{3, 2}, 2).ells == std::vector<int>{8, 4});
    CHECK(ds_param(WeightVec{1, 1}, 2).ells == std::vector<int>{4, 2});
    CHECK(ds_param(WeightVec{3, -2}, 2).ells == ds_param(WeightVec{3, 2}, 2).ells);
    CHECK(ds_param(WeightVec{5, 4, 3, 2}, 4).ells == std::vector<int>{16, 12, 8, 4});
    // strictly decreasing positive evens
    auto p = ds_param(WeightVec{4, 4, 2, 1}, 4);
    for (size_t i = 0; i < p.ells.size(); ++i) {
        CHECK(p.ells[i] > 0);
        CHECK(p.ells[i] % 2 == 0);
        if (i) CHECK(p.ells[i - 1] > p.ells[i]);
    }
    CHECK_THROWS_AS(ds_param(WeightVec{2, 0}, 2), std::invalid_argument);
}

TEST_CASE("two-dimensional parameter L-factor") {
    ProductValue v = l_factor_I(1, 2);  // 2 (2pi)^{-2} Gamma(2)
    CHECK(v.net_order == 0);
    CHECK(v.lead == PiValue(Rational(1, 2), -4));
    CHECK(l_factor_I(-1, 2).net_order == -1);  // Gamma(0)
    CHECK_THROWS_AS(l_factor_I(0, 3), std::invalid_argument);
}

TEST_CASE("product over summands reproduces the completed L-factor") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<int> top(1, 4), sgn(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        int m1 = top(rng);
        int m2 = std::uniform_int_distribution<int>(1, m1)(rng);
        if (sgn(rng)) m2 = -m2;
        WeightVec mu{m1, m2};
        CoeffWeight cw = CoeffWeight::make(MultiWeight{{mu}});
        DSParam p = ds_param(mu, 2);
        for (int s = -6; s <= 6; ++s) {
            std::vector<Factor> nums;
            for (int ell : p.ells) {
                ProductValue f = l_factor_I(s, ell);
                nums.emplace_back(f.net_order, f.lead);
            }
            ProductValue route1 = product_eval(nums, {});
            ProductValue route2 = arch_L_factor(s, cw, CharData::make(0, {0}), 0);
            CHECK(route1.net_order == route2.net_order);
            CHECK(route1.lead == route2.lead);
        }
    }
}

TEST_CASE("blattner parameter") {
    CHECK(blattner(WeightVec{3, 2}, 2) == WeightVec{5, 2});
    CHECK(blattner(WeightVec{5, 4, 3, 2}, 4) == WeightVec{9, 6, 5, 2});

    // oracle: enumerate the compact roots {e_i +- e_j : i < j, i = j mod 2}
    // and halve their sum; n = 2 has none, n = 4 has the pairs (1,3), (2,4)
    for (int n : {2, 4}) {
        WeightVec rho_K(n, 0);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if ((i - j) % 2 == 0) rho_K[i - 1] += 1;
        if (n == 2) CHECK(rho_K == WeightVec{0, 0});
        if (n == 4) CHECK(rho_K == WeightVec{1, 1, 0, 0});
        WeightVec mu(n);
        for (int j = 0; j < n; ++j) mu[j] = 2 * (n - j);  // strictly dominant
        WeightVec expect(n);
        for (int j = 1; j <= n; ++j)
            expect[j - 1] = mu[j - 1] + 2 * (n - j) - 2 * rho_K[j - 1];
        CHECK(blattner(mu, n) == expect);
    }

    // mu = (1,2) makes Lambda = (2,2), not regular
    CHECK_THROWS_WITH_AS(blattner(WeightVec{1, 2}, 2), doctest::Contains("regular"),
                         std::invalid_argument);
}

TEST_CASE("rank one steps") {
    auto steps = rank_one_steps(WeightVec{3, 2}, 0, -3, 2);
    REQUIRE(steps.size() == 4);
    CHECK(steps[0].exponent == -1);
    CHECK(steps[1].exponent == 1);
    CHECK(steps[2].exponent == 5);
    CHECK(steps[3].exponent == 7);
    CHECK(steps[0].parity == 1);
    CHECK(steps[1].parity == 0);
    CHECK(steps[2].parity == 0);
    CHECK(steps[3].parity == 1);
    CHECK(steps[0].beta == RootD{0, 1, false, 1});
    CHECK(steps[1].beta == RootD{0, 2, false, 1});
    CHECK(steps[2].beta == RootD{0, 2, true, 1});
    CHECK(steps[3].beta == RootD{0, 1, true, 1});

    // negative last entry: the exponents follow the signed formulas
    auto neg = rank_one_steps(WeightVec{3, -2}, 0, -3, 2);
    CHECK(neg[0].exponent == -1);
    CHECK(neg[1].exponent == 5);
    CHECK(neg[2].exponent == 1);
    CHECK(neg[3].exponent == 7);

    std::mt19937 rng(61);
    std::uniform_int_distribution<int> top(1, 5), dd(-8, 4), sgn(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        int m1 = top(rng);
        int m2 = std::uniform_int_distribution<int>(1, m1)(rng);
        if (sgn(rng)) m2 = -m2;
        auto st = rank_one_steps(WeightVec{m1, m2}, sgn(rng), dd(rng), 2);
        // parity mirror and per-half monotonicity hold unconditionally
        for (int j = 0; j < 4; ++j) CHECK(st[j].parity == st[3 - j].parity);
        CHECK(st[0].exponent < st[1].exponent);
        CHECK(st[2].exponent < st[3].exponent);
        // the full list is strictly increasing exactly on the mu_n >= 1 branch
        if (m2 >= 1) CHECK(st[1].exponent < st[2].exponent);
    }
}

TEST_CASE("M(z)_k correction") {
    CHECK(m_correction(5, 0, 0).lead == PiValue(1));
    CHECK(m_correction(5, 0, 0).net_order == 0);
    for (int z : {2, 3, 5}) {
        ProductValue v = m_correction(z, 0, 1);
        CHECK(v.net_order == 0);
        CHECK(v.lead == PiValue(Rational(z - 1, z + 1)));
    }
    // vanishing and polar linear factors
    CHECK(m_correction(1, 0, 1).net_order == 1);
    CHECK(m_correction(-1, 0, 1).net_order == -1);
    // k < 0 branch
    ProductValue neg = m_correction(4, 1, -1);
    CHECK(neg.net_order == 0);
    CHECK(neg.lead == PiValue(Rational(4, 4)));  // (z+eps-1)/(z-eps+1) at z=4, eps=1
}

TEST_CASE("sl2 scalar") {
    Sl2Scalar s = sl2_scalar(2, 0, 0);
    CHECK(s.phase_pow == 0);
    CHECK(s.magnitude.net_order == 0);
    CHECK(s.magnitude.lead == PiValue(2));

    // the phase is the exponent of (-i) reduced mod 4
    CHECK(sl2_scalar(4, 0, 2).phase_pow == 2);
    CHECK(sl2_scalar(4, 1, 5).phase_pow == 1);
    CHECK(sl2_scalar(4, 1, -3).phase_pow == 1);

    // k = 0 reduces to the minimal-type display
    for (int z = -4; z <= 6; ++z)
        for (int eps : {0, 1}) {
            Sl2Scalar a = sl2_scalar(z, eps, eps);
            ProductValue display =
                product_eval({gamma_at(1), gamma_at(z + eps)}, {gamma_at(z + eps + 1)});
            display.lead *= PiValue(Rational::pow2(-display.net_order));  // z-normalized
            CHECK(a.magnitude.net_order == display.net_order);
            CHECK(a.magnitude.lead == display.lead);
        }

    CHECK_THROWS_AS(sl2_scalar(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sl2_scalar(2, 1, 0), std::invalid_argument);
}

TEST_CASE("sl2 scalar pairing is independent of the type") {
    // The magnitude of value(z,eps,m) * value(-z,eps,m) depends only on (z,eps).
    // The second factor is evaluated through the substitution w = -z, which
    // reverses the orientation: its lead flips sign by the vanishing order.
    for (int z : {1, 2, 3, 4, 5}) {
        for (int eps : {0, 1}) {
            ProductValue base;
            bool have_base = false;
            for (int m = eps; m <= eps + 6; m += 2) {
                Sl2Scalar a = sl2_scalar(z, eps, m);
                Sl2Scalar b = sl2_scalar(-z, eps, m);
                PiValue b_lead = b.magnitude.lead;
                if (b.magnitude.net_order % 2 != 0) b_lead = -b_lead;
                ProductValue pair = product_eval(
                    {Factor(a.magnitude.net_order, a.magnitude.lead),
                     Factor(b.magnitude.net_order, b_lead)},
                    {});
                if (!have_base) {
                    base = pair;
                    have_base = true;
                } else {
                    CHECK(pair.net_order == base.net_order);
                    CHECK(pair.lead == base.lead);
                }
            }
        }
    }
}

TEST_CASE("phi and c at the point of evaluation") {
    PhiCResult pc = phi_and_c(WeightVec{3, 2}, -3, 0, 2);
    CHECK(pc.phi.net_order == 0);
    CHECK(pc.phi.lead == PiValue(Rational(-8, 15), 4));
    CHECK(pc.phase_sign == -1);
    CHECK(pc.c == PiValue(Rational(8, 15), 4));
    CHECK(pc.evens_low == 1);
    CHECK(pc.evens_high == 1);
    CHECK(pc.num_poles == 1);
    CHECK(pc.den_poles == 1);

    // flipping the character parity changes the rational, not the pi-power
    PhiCResult pc1 = phi_and_c(WeightVec{3, 2}, -3, 1, 2);
    CHECK(pc1.c == PiValue(Rational(2, 3), 4));

    // kappa-conjugate weight gives the same scalar here
    PhiCResult pcn = phi_and_c(WeightVec{3, -2}, -3, 0, 2);
    CHECK(pcn.c == pc.c);

    CHECK_THROWS_AS(phi_and_c(WeightVec{3, 2}, -4, 0, 2), std::domain_error);
    CHECK_THROWS_AS(phi_and_c(WeightVec{3, 2}, -1, 0, 2), std::domain_error);  // left of axis
}

TEST_CASE("c against the L-factor ratio") {
    PhiCResult pc = phi_and_c(WeightVec{3, 2}, -3, 0, 2);
    CoeffWeight cw = CoeffWeight::make(MultiWeight{{{3, 2}}});
    PiValue lr = ratio_L_inf(cw, CharData::make(-3, {0}));
    PiValue q = pc.c / lr;
    CHECK(q == PiValue(Rational(2)));
    CHECK(q.half_pi_exp == 0);
}
