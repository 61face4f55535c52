#include "weylcrit/critical.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace weylcrit {

CharData CharData::make(int d, std::vector<int> eps) {
    for (int e : eps)
        if (e != 0 && e != 1) throw std::invalid_argument("CharData: eps entries must be 0 or 1");
    return CharData{d, std::move(eps)};
}

CoeffWeight CoeffWeight::make(MultiWeight mu) {
    if (mu.factors.empty()) throw std::invalid_argument("CoeffWeight: no embeddings");
    const int n = mu.size();
    if (n < 1) throw std::invalid_argument("CoeffWeight: empty weight");
    int mu_min = -1;
    for (int t = 0; t < mu.r_F(); ++t) {
        const WeightVec& f = mu.factors[t];
        if (static_cast<int>(f.size()) != n)
            throw std::invalid_argument("CoeffWeight: embeddings of unequal size");
        for (int j = 0; j + 2 < n; ++j)
            if (f[j] < f[j + 1])
                throw std::invalid_argument(
                    "CoeffWeight: chain violated at embedding " + std::to_string(t + 1) +
                    ": mu_" + std::to_string(j + 1) + " (" + std::to_string(f[j]) + ") < mu_" +
                    std::to_string(j + 2) + " (" + std::to_string(f[j + 1]) + ")");
        if (n >= 2 && f[n - 2] < std::abs(f[n - 1]))
            throw std::invalid_argument(
                "CoeffWeight: chain violated at embedding " + std::to_string(t + 1) + ": mu_" +
                std::to_string(n - 1) + " (" + std::to_string(f[n - 2]) + ") < |mu_" +
                std::to_string(n) + "| (" + std::to_string(std::abs(f[n - 1])) + ")");
        int tail = std::abs(f[n - 1]);
        if (mu_min < 0 || tail < mu_min) mu_min = tail;
    }
    return CoeffWeight{std::move(mu), mu_min};
}

namespace {

void check_tau(const CoeffWeight& mu, const CharData& ch, int tau) {
    if (tau < 0 || tau >= mu.r_F()) throw std::invalid_argument("embedding index out of range");
    if (!ch.eps.empty() && static_cast<int>(ch.eps.size()) != mu.r_F())
        throw std::invalid_argument("CharData/CoeffWeight embedding count mismatch");
}

ProductValue arch_L_one_side(int s, int d, const WeightVec& mu_tau) {
    const int n = static_cast<int>(mu_tau.size());
    std::vector<Factor> nums;
    nums.emplace_back(PiValue(Rational::pow2(n)));
    for (int j = 1; j <= n; ++j) {
        int a = s - d + std::abs(mu_tau[j - 1]) + n - j;
        // (2 pi)^{-a}
        nums.emplace_back(PiValue(Rational::pow2(-a), -2L * a));
        nums.emplace_back(gamma_at(2L * a));
    }
    return product_eval(nums, {});
}

}  // namespace

ProductValue arch_L_factor(int s, const CoeffWeight& mu, const CharData& ch, int tau) {
    check_tau(mu, ch, tau);
    return arch_L_one_side(s, ch.d, mu.mu.factors[tau]);
}

ProductValue arch_L_factor_dual(int s, const CoeffWeight& mu, const CharData& ch, int tau) {
    check_tau(mu, ch, tau);
    return arch_L_one_side(1 - s, -ch.d, mu.mu.factors[tau]);
}

bool is_critical(int m, const CoeffWeight& mu, const CharData& ch) {
    for (int tau = 0; tau < mu.r_F(); ++tau) {
        if (arch_L_factor(m, mu, ch, tau).net_order != 0) return false;
        if (arch_L_factor_dual(m, mu, ch, tau).net_order != 0) return false;
    }
    return true;
}

CriticalSet critical_set(const CoeffWeight& mu, const CharData& ch) {
    if (mu.mu_min == 0)
        throw std::domain_error("critical_set: mu_min = 0, no critical points guaranteed");
    CriticalSet cs;
    for (int m = 1 + ch.d - mu.mu_min; m <= ch.d + mu.mu_min; ++m) cs.members.push_back(m);

    int mu_max = 0;
    for (const WeightVec& f : mu.mu.factors)
        for (int v : f) mu_max = std::max(mu_max, std::abs(v));
    std::vector<int> scanned;
    for (int m = ch.d - mu_max - mu.n(); m <= ch.d + mu_max + mu.n(); ++m)
        if (is_critical(m, mu, ch)) scanned.push_back(m);
    if (scanned != cs.members)
        throw std::logic_error("critical_set: closed form disagrees with holomorphy scan");
    return cs;
}

PiValue ratio_L_inf(const CoeffWeight& mu, const CharData& ch) {
    const int n = mu.n();
    if (!is_critical(-n, mu, ch) || !is_critical(1 - n, mu, ch))
        throw std::domain_error("ratio_L_inf: -n and 1-n are not both critical");
    PiValue ratio(1);
    for (int tau = 0; tau < mu.r_F(); ++tau) {
        ProductValue q = div(arch_L_factor(-n, mu, ch, tau), arch_L_factor(1 - n, mu, ch, tau));
        if (q.net_order != 0) throw std::logic_error("ratio_L_inf: unexpected pole or zero");
        ratio *= q.lead;
    }
    if (ratio.half_pi_exp != 2L * n * mu.r_F() || ratio.is_zero())
        throw std::logic_error("ratio_L_inf: pi-power check failed");
    return ratio;
}

MultiWeight kappa_flip(const MultiWeight& mu) {
    MultiWeight out = mu;
    for (WeightVec& f : out.factors) f.back() = -f.back();
    return out;
}

WeightVec kappa_flip(const WeightVec& mu) {
    WeightVec out = mu;
    out.back() = -out.back();
    return out;
}

CombLemmaResult comb_lemma(const CoeffWeight& mu, const CharData& ch) {
    if (mu.mu_min == 0) throw std::domain_error("comb_lemma: mu_min = 0");
    const int n = mu.n();
    const int rf = mu.r_F();
    if (rf > 16) throw std::invalid_argument("comb_lemma: 2^{r_F} search refused for r_F > 16");
    auto se = special_elements(n);

    CombLemmaResult res;
    res.cond_ii = (1 - mu.mu_min <= -(n + ch.d)) && (-(n + ch.d) <= mu.mu_min - 1);

    // Exhaustive search over the 2^{r_F} balanced candidates.
    int found = 0;
    for (unsigned mask = 0; mask < (1u << rf); ++mask) {
        MultiWeight lam;
        bool ok = true;
        std::vector<int> picks(rf);
        for (int t = 0; t < rf && ok; ++t) {
            bool plus = !(mask & (1u << t));
            picks[t] = plus ? 1 : -1;
            const SignedPerm& w = plus ? se.w_plus : se.w_minus;
            WeightVec weight = mu.mu.factors[t];
            weight.insert(weight.begin(), ch.d);  // d e_0 + mu^tau
            WeightVec l = dot_action(w.inverse(), weight);
            if (!is_dominant_G(l)) ok = false;
            lam.factors.push_back(std::move(l));
        }
        if (ok) {
            ++found;
            res.witness = picks;
            res.lambda = std::move(lam);
        }
    }
    if ((found > 0) != res.cond_ii)
        throw std::logic_error("comb_lemma: inequality and witness search disagree");
    if (found > 1) throw std::logic_error("comb_lemma: witness is not unique");
    if (found == 1) {
        // the closed-form choice: w^+ where mu_n >= 1, w^- where mu_n <= -1
        for (int t = 0; t < rf; ++t) {
            int expected = mu.mu.factors[t].back() >= 1 ? 1 : -1;
            if ((*res.witness)[t] != expected)
                throw std::logic_error("comb_lemma: witness differs from the closed form");
        }
    }
    return res;
}

PropIdentityReport prop_identities(const CoeffWeight& mu, const CharData& ch) {
    CombLemmaResult lem = comb_lemma(mu, ch);
    if (!lem.cond_ii || !lem.witness)
        throw std::domain_error("prop_identities: combinatorial lemma fails for this data");
    const int n = mu.n();
    const int rf = mu.r_F();
    auto se = special_elements(n);

    PropIdentityReport rep;
    rep.lambda = *lem.lambda;
    rep.id_prime = rep.id_vee = rep.id_vee_prime = true;

    for (int t = 0; t < rf; ++t) {
        const SignedPerm& w = (*lem.witness)[t] > 0 ? se.w_plus : se.w_minus;
        const WeightVec& lam = rep.lambda.factors[t];
        WeightVec lam_vee_raw = se.w_G.apply(lam);
        WeightVec lam_vee(lam_vee_raw.size());
        for (size_t i = 0; i < lam_vee.size(); ++i) lam_vee[i] = -lam_vee_raw[i];
        rep.lambda_vee.factors.push_back(lam_vee);

        const WeightVec& mu_t = mu.mu.factors[t];
        WeightVec kmu = kappa_flip(mu_t);

        WeightVec target1 = kmu;
        target1.insert(target1.begin(), -ch.d - 2 * n);
        WeightVec target2 = mu_t;
        target2.insert(target2.begin(), -ch.d - 2 * n);
        WeightVec target3 = kmu;
        target3.insert(target3.begin(), ch.d);

        SignedPerm w_prime = prime_map(w, n);
        SignedPerm w_vee = vee_map(w, n);
        SignedPerm w_vee_prime = prime_map(w_vee, n);

        if (dot_action(w_prime, lam) != target1) rep.id_prime = false;
        if (dot_action(w_vee, lam_vee) != target2) rep.id_vee = false;
        if (dot_action(w_vee_prime, lam_vee) != target3) rep.id_vee_prime = false;
    }
    return rep;
}

}  // namespace weylcrit
