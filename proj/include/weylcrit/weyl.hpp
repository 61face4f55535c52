#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weylcrit/rational.hpp"

namespace weylcrit {

/// Integer weight (lambda_0, ..., lambda_{m-1}) in the e_i coordinates.
using WeightVec = std::vector<int>;

/// One weight vector per embedding; all factors share one size.
struct MultiWeight {
    std::vector<WeightVec> factors;

    int r_F() const { return static_cast<int>(factors.size()); }
    int size() const { return factors.empty() ? 0 : static_cast<int>(factors[0].size()); }
    friend bool operator==(const MultiWeight& a, const MultiWeight& b) {
        return a.factors == b.factors;
    }
};

/// A root +-(e_i +- e_j), i < j, of the type-D root system.
/// `sum` distinguishes e_i + e_j from e_i - e_j; `sign` +1 for the positive root.
struct RootD {
    int i = 0;
    int j = 1;
    bool sum = false;
    int sign = 1;

    bool is_positive() const { return sign > 0; }
    friend bool operator==(const RootD& a, const RootD& b) {
        return a.i == b.i && a.j == b.j && a.sum == b.sum && a.sign == b.sign;
    }
    std::string str() const;
};

/// Element of the Weyl group of type D_m: a signed permutation of m letters
/// with an even number of sign changes. Acts by e_i |-> sign(i) * e_{perm(i)}.
class SignedPerm {
public:
    SignedPerm() = default;
    SignedPerm(std::vector<int> perm, std::vector<int> signs);

    static SignedPerm identity(int m);
    /// s_{alpha_k}: for k <= m-2 the transposition of e_k, e_{k+1};
    /// for k = m-1 the reflection e_{m-2} <-> -e_{m-1}.
    static SignedPerm simple_reflection(int m, int k);

    int size() const { return static_cast<int>(perm_.size()); }
    int perm(int i) const { return perm_[i]; }
    int sign(int i) const { return signs_[i]; }

    bool is_identity() const;
    SignedPerm inverse() const;
    /// Group product: (a*b)(v) = a(b(v)).
    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);

    WeightVec apply(const WeightVec& v) const;
    RootD apply(const RootD& r) const;

    friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
        return a.perm_ == b.perm_ && a.signs_ == b.signs_;
    }
    friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
        return a.perm_ != b.perm_ ? a.perm_ < b.perm_ : a.signs_ < b.signs_;
    }

    /// Signed 1-based images, e.g. w(e_0) = -e_2 prints as -3 in slot 0.
    std::vector<int> signed_images() const;
    std::string str() const;

private:
    std::vector<int> perm_;   // perm_[i] = image index of letter i
    std::vector<int> signs_;  // +-1 per source letter
};

/// Simple roots alpha_0..alpha_{m-1} of D_m:
/// e_0-e_1, ..., e_{m-2}-e_{m-1}, e_{m-2}+e_{m-1}.
std::vector<RootD> simple_roots(int m);

/// All positive roots e_i +- e_j, i < j.
std::vector<RootD> positive_roots(int m);

/// Half-sum of positive roots: (m-1, m-2, ..., 1, 0).
WeightVec rho(int m);

/// <v, alpha^vee>; type-D roots are self-dual under the standard pairing.
int pairing(const WeightVec& v, const RootD& alpha);

/// Coxeter length #{alpha > 0 : w(alpha) < 0}.
int length(const SignedPerm& w);

/// A reduced word for w by greedy descent; its size equals length(w).
std::vector<int> reduced_word(SignedPerm w);

/// Left-to-right product of simple reflections in D_m.
SignedPerm product_of_word(int m, const std::vector<int>& word);

/// Every element of W(D_m), 2^{m-1} * m! of them. Guarded by m <= 8.
std::vector<SignedPerm> enumerate_weyl(int m);

/// Visit every element of W(D_m) without materializing the list.
void for_each_weyl(int m, const std::function<void(const SignedPerm&)>& fn);

/// Distinguished elements on m = n+1 letters, n even:
/// w_P negates e_0 and e_n; w_G is the longest element; w_M the longest Levi
/// element; w_plus/w_minus the two balanced Kostant representatives.
struct SpecialElements {
    SignedPerm w_P, w_G, w_M, w_plus, w_minus;
};
SpecialElements special_elements(int n);

/// The 2n-letter word (alpha_0 .. alpha_{n-2}, alpha_n, alpha_{n-1}, alpha_{n-2} .. alpha_0)
/// multiplying to w_P; reduced.
std::vector<int> factor_w_P(int n);

/// Minimal-length coset representatives for the maximal parabolic obtained by
/// deleting alpha_0: all w with w^{-1}(alpha) > 0 for every simple Levi root alpha.
/// Sorted by (length, images). Guarded by n <= 6.
std::vector<SignedPerm> kostant_reps(int n);

bool is_kostant_rep(const SignedPerm& w, int n);
bool is_balanced(const SignedPerm& w, int n);

/// Twisted action w . lambda = w(lambda + rho) - rho.
WeightVec dot_action(const SignedPerm& w, const WeightVec& lambda);

/// w |-> w_P * w; an involutive bijection of W^P with complementary lengths.
SignedPerm prime_map(const SignedPerm& w, int n);
/// w |-> w_M * w * w_G; likewise.
SignedPerm vee_map(const SignedPerm& w, int n);

/// Full dominance chain lambda_0 >= ... >= lambda_{m-2} >= |lambda_{m-1}|.
bool is_dominant_G(const WeightVec& lambda);
/// Levi GL_1 x D_n dominance: the chain on entries 1..n only.
bool is_dominant_M(const WeightVec& lambda);

/// Weyl dimension formula over the D_n factor of the Levi (entries 1..n of an
/// (n+1)-entry M-weight); the GL_1 entry contributes 1.
mpz_class weyl_dim_M(const WeightVec& lambda, int n);

/// Sum over W^P of (-1)^{l(w)} dim_M(w . lambda); vanishes whenever dim U_P > 0.
mpz_class kostant_euler_check(const WeightVec& lambda, int n);

}  // namespace weylcrit
