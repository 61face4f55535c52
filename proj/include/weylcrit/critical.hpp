#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcrit/pivalue.hpp"
#include "weylcrit/weyl.hpp"

namespace weylcrit {

/// Algebraic Hecke-character surrogate: the integer twist d and one sign
/// parity per archimedean embedding.
struct CharData {
    int d = 0;
    std::vector<int> eps;  // entries in {0,1}, length r_F

    static CharData make(int d, std::vector<int> eps);
};

/// Coefficient weight mu = (mu^tau)_tau, each factor an n-entry dominance chain
/// mu_1 >= ... >= mu_{n-1} >= |mu_n|, with mu_min = min_tau |mu_n^tau| cached.
struct CoeffWeight {
    MultiWeight mu;
    int mu_min = 0;

    int n() const { return mu.size(); }
    int r_F() const { return mu.r_F(); }

    /// Validates every chain; messages name the violated inequality.
    static CoeffWeight make(MultiWeight mu);
};

/// Contiguous critical set {1+d-mu_min, ..., d+mu_min}.
struct CriticalSet {
    std::vector<int> members;
};

/// Completed archimedean L-factor at integer s for one embedding:
/// 2^n prod_j (2 pi)^{-(s-d+|mu_j|+n-j)} Gamma(s-d+|mu_j|+n-j).
ProductValue arch_L_factor(int s, const CoeffWeight& mu, const CharData& ch, int tau);

/// Dual-side factor at 1-s with d |-> -d (self-dual coefficient data).
ProductValue arch_L_factor_dual(int s, const CoeffWeight& mu, const CharData& ch, int tau);

/// m is critical iff both archimedean factors are pole-free at m, checked by
/// net_order == 0 on both products, never by the inequality shortcut.
bool is_critical(int m, const CoeffWeight& mu, const CharData& ch);

/// Closed-form critical set, cross-checked against the holomorphy scan over
/// [d - mu_max - n, d + mu_max + n]. Requires mu_min >= 1.
CriticalSet critical_set(const CoeffWeight& mu, const CharData& ch);

/// Exact ratio L_inf(-n)/L_inf(1-n); requires both points critical.
/// The result is q * pi^{n r_F} with q a nonzero rational.
PiValue ratio_L_inf(const CoeffWeight& mu, const CharData& ch);

/// Combinatorial-lemma record: the inequality condition, and the balanced
/// witness found by exhaustive search over per-embedding {w^+, w^-} choices.
struct CombLemmaResult {
    bool cond_ii = false;
    /// +1 for w^+, -1 for w^- per embedding, when a witness exists.
    std::optional<std::vector<int>> witness;
    std::optional<MultiWeight> lambda;  // w^{-1} . (d e_0 + mu), per embedding
};

CombLemmaResult comb_lemma(const CoeffWeight& mu, const CharData& ch);

/// The three dot-action identities for w', w^vee and (w^vee)' applied to
/// lambda and lambda^vee = -w_G lambda.
struct PropIdentityReport {
    bool id_prime = false;      // w' . lambda == (-d-2n) e_0 + kappa mu
    bool id_vee = false;        // w^vee . lambda^vee == (-d-2n) e_0 + mu
    bool id_vee_prime = false;  // (w^vee)' . lambda^vee == d e_0 + kappa mu
    MultiWeight lambda;
    MultiWeight lambda_vee;
    bool all() const { return id_prime && id_vee && id_vee_prime; }
};

PropIdentityReport prop_identities(const CoeffWeight& mu, const CharData& ch);

/// kappa flip: negate the last entry of every factor.
MultiWeight kappa_flip(const MultiWeight& mu);
WeightVec kappa_flip(const WeightVec& mu);

}  // namespace weylcrit
