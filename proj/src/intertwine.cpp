#include "weylcrit/intertwine.hpp"

#include <cstdlib>
#include <stdexcept>

namespace weylcrit {

namespace {

void check_mu_chain(const WeightVec& mu_v, int n) {
    if (static_cast<int>(mu_v.size()) != n)
        throw std::invalid_argument("expected an n-entry weight");
    for (int j = 0; j + 2 < n; ++j)
        if (mu_v[j] < mu_v[j + 1]) throw std::invalid_argument("weight chain violated");
    if (n >= 2 && mu_v[n - 2] < std::abs(mu_v[n - 1]))
        throw std::invalid_argument("weight chain violated at the signed slot");
}

/// Linear factor with value v at the evaluation point: vanishing factors have
/// unit slope, so they carry order 1 and leading coefficient 1.
Factor linear_at(long v) {
    if (v == 0) return Factor(1, PiValue(1));
    return Factor(0, PiValue(Rational(v)));
}

/// A product of Gamma((z+a)/2)-type factors carries leads expanded in the
/// half arguments; in the variable z each order picks up a factor 1/2, so the
/// z-Laurent lead is lead * 2^{-net_order}. No-op when the orders cancel.
ProductValue rescale_half_argument(ProductValue p) {
    p.lead *= PiValue(Rational::pow2(-p.net_order));
    return p;
}

}  // namespace

DSParam ds_param(const WeightVec& mu_v, int n) {
    check_mu_chain(mu_v, n);
    if (std::abs(mu_v[n - 1]) < 1)
        throw std::invalid_argument("ds_param: |mu_n| = 0 gives a reducible summand");
    DSParam p;
    p.ells.reserve(n);
    for (int j = 1; j < n; ++j) p.ells.push_back(2 * (mu_v[j - 1] + n - j));
    p.ells.push_back(2 * std::abs(mu_v[n - 1]));
    return p;
}

ProductValue l_factor_I(int s, int ell) {
    if (ell <= 0 || ell % 2 != 0) throw std::invalid_argument("l_factor_I: ell must be even > 0");
    int a = s + ell / 2;
    std::vector<Factor> nums;
    nums.emplace_back(PiValue(Rational(2)));
    nums.emplace_back(PiValue(Rational::pow2(-a), -2L * a));
    nums.emplace_back(gamma_at(2L * a));
    return product_eval(nums, {});
}

WeightVec blattner(const WeightVec& mu_v, int n) {
    if (static_cast<int>(mu_v.size()) != n)
        throw std::invalid_argument("blattner: expected an n-entry weight");
    WeightVec lam(n);
    for (int j = 1; j <= n; ++j) lam[j - 1] = mu_v[j - 1] + n - j;
    // regularity: |Lambda_i| pairwise distinct
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(lam[i]) == std::abs(lam[j]))
                throw std::invalid_argument("blattner: Lambda is not regular");
    // the standard system must be the positive one for Lambda
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lam[i] <= std::abs(lam[j]))
                throw std::invalid_argument("blattner: Lambda is not in the dominant chamber");

    // rho^c and the compact half-sum over {e_i +- e_j : i < j, i = j (mod 2)}
    WeightVec out(n);
    WeightVec rho_K(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((j - i) % 2 == 0) rho_K[i - 1] += 1;  // (e_i-e_j) + (e_i+e_j) = 2 e_i
    for (int j = 1; j <= n; ++j) out[j - 1] = lam[j - 1] + (n - j) - 2 * rho_K[j - 1];
    return out;
}

std::vector<RankOneStep> rank_one_steps(const WeightVec& mu_v, int eps0, int d, int n) {
    check_mu_chain(mu_v, n);
    if (eps0 != 0 && eps0 != 1) throw std::invalid_argument("rank_one_steps: eps0 must be 0 or 1");

    // character exponents: slot 0 carries -d, slot j carries mu_j + n - j
    std::vector<int> x(n + 1);
    x[0] = -d;
    for (int j = 1; j <= n; ++j) x[j] = mu_v[j - 1] + n - j;

    std::vector<RankOneStep> steps;
    steps.reserve(2 * n);
    for (int j = 1; j <= 2 * n; ++j) {
        RankOneStep st;
        st.j = j;
        int letter = (j <= n) ? j : 2 * n + 1 - j;
        st.beta = RootD{0, letter, j > n, 1};
        int from_pairing = (j <= n) ? x[0] - x[letter] : x[0] + x[letter];
        int from_branch = (j <= n) ? -d - (mu_v[j - 1] + n - j)
                                   : -d + (mu_v[2 * n - j] - n - 1 + j);
        if (from_pairing != from_branch)
            throw std::logic_error("rank_one_steps: branch formula disagrees with the pairing");
        st.exponent = from_pairing;
        int mu_letter = mu_v[letter - 1];
        st.parity = ((eps0 + mu_letter) % 2 + 2) % 2;
        steps.push_back(st);
    }
    for (int j = n + 1; j <= 2 * n; ++j)
        if (steps[j - 1].parity != steps[2 * n - j].parity)
            throw std::logic_error("rank_one_steps: parity mirror broken");
    return steps;
}

ProductValue m_correction(int z, int eps, int k) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("m_correction: eps must be 0 or 1");
    std::vector<Factor> nums, dens;
    if (k > 0) {
        for (int l = 1; l <= k; ++l) {
            nums.push_back(linear_at(z - eps - (2 * l - 1)));
            dens.push_back(linear_at(z + eps + (2 * l - 1)));
        }
    } else if (k < 0) {
        for (int l = 1; l <= -k; ++l) {
            nums.push_back(linear_at(z + eps - (2 * l - 1)));
            dens.push_back(linear_at(z - eps + (2 * l - 1)));
        }
    }
    return product_eval(nums, dens);
}

Sl2Scalar sl2_scalar(int z, int eps, int m) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("sl2_scalar: eps must be 0 or 1");
    if (((m - eps) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("sl2_scalar: parity mismatch, m and eps must agree mod 2");

    ProductValue direct = rescale_half_argument(product_eval(
        {gamma_at(1), gamma_at(z), gamma_at(z + 1)},
        {gamma_at(z + 1 + m), gamma_at(z + 1 - m)}));

    // the same scalar through the minimal type and the M(z)_k correction,
    // whose factors are already linear in z
    int k = (m - eps) / 2;
    ProductValue mk = m_correction(z, eps, k);
    ProductValue base = rescale_half_argument(
        product_eval({gamma_at(1), gamma_at(z + eps)}, {gamma_at(z + eps + 1)}));
    ProductValue via_min = product_eval(
        {Factor(base.net_order, base.lead), Factor(mk.net_order, mk.lead)}, {});
    if (!(direct == via_min))
        throw std::logic_error("sl2_scalar: the two evaluation routes disagree");

    Sl2Scalar out;
    out.phase_pow = ((m % 4) + 4) % 4;
    out.magnitude = direct;
    return out;
}

PhiCResult phi_and_c(const WeightVec& mu_v, int d, int eps0, int n) {
    check_mu_chain(mu_v, n);
    int abs_mun = std::abs(mu_v[n - 1]);
    if (abs_mun < 1) throw std::domain_error("phi_and_c: |mu_n| = 0");
    int t = -(d + n);
    if (!(1 - abs_mun <= t && t <= abs_mun - 1))
        throw std::domain_error("phi_and_c: combinatorial condition fails at this place");
    if (t < 0) throw std::domain_error("phi_and_c: point lies left of the unitary axis");

    auto steps = rank_one_steps(mu_v, eps0, d, n);
    PhiCResult res;
    std::vector<Factor> nums, dens;
    int phase = 0;
    for (const RankOneStep& st : steps) {
        int x = -n + st.exponent + st.parity;
        nums.emplace_back(PiValue(Rational(1), 1));  // sqrt(pi)
        GammaSym top = gamma_at(x);
        GammaSym bot = gamma_at(x + 1L);
        nums.emplace_back(top);
        dens.emplace_back(bot);
        if (top.pole_order < 0) ++res.num_poles;
        if (bot.pole_order < 0) ++res.den_poles;
        if (x % 2 == 0) {
            if (st.j <= n)
                ++res.evens_low;
            else
                ++res.evens_high;
        }
        phase += st.parity;
    }
    res.phi = product_eval(nums, dens);

    const int r = n / 2;
    if (res.phi.net_order != 0)
        throw std::logic_error("phi_and_c: product not holomorphic at s = -n");
    if (res.num_poles != r || res.den_poles != r)
        throw std::logic_error("phi_and_c: pole counts differ from r");
    if (res.evens_low != r || res.evens_high != r)
        throw std::logic_error("phi_and_c: parity counts differ from r");
    if (phase % 2 != 0) throw std::logic_error("phi_and_c: odd total parity");
    res.phase_sign = (phase % 4 == 0) ? 1 : -1;  // (-i)^{2t} = (-1)^t
    res.c = res.phi.lead;
    if (res.phase_sign < 0) res.c = -res.c;
    if (res.c.half_pi_exp != 2L * n || res.c.is_zero())
        throw std::logic_error("phi_and_c: c is not a nonzero multiple of pi^n");
    return res;
}

}  // namespace weylcrit
