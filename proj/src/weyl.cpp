#include "weylcrit/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weylcrit {

std::string RootD::str() const {
    std::string s = sign > 0 ? "" : "-(";
    s += "e" + std::to_string(i) + (sum ? "+" : "-") + "e" + std::to_string(j);
    if (sign < 0) s += ")";
    return s;
}

SignedPerm::SignedPerm(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
    const int m = static_cast<int>(perm_.size());
    if (static_cast<int>(signs_.size()) != m)
        throw std::invalid_argument("SignedPerm: size mismatch");
    std::vector<char> seen(m, 0);
    int negatives = 0;
    for (int i = 0; i < m; ++i) {
        if (perm_[i] < 0 || perm_[i] >= m || seen[perm_[i]])
            throw std::invalid_argument("SignedPerm: not a permutation");
        seen[perm_[i]] = 1;
        if (signs_[i] != 1 && signs_[i] != -1)
            throw std::invalid_argument("SignedPerm: signs must be +-1");
        if (signs_[i] < 0) ++negatives;
    }
    if (negatives % 2 != 0)
        throw std::invalid_argument("SignedPerm: odd number of sign changes");
}

SignedPerm SignedPerm::identity(int m) {
    std::vector<int> p(m), s(m, 1);
    std::iota(p.begin(), p.end(), 0);
    return SignedPerm(std::move(p), std::move(s));
}

SignedPerm SignedPerm::simple_reflection(int m, int k) {
    if (m < 2 || k < 0 || k >= m)
        throw std::invalid_argument("simple_reflection: index out of range");
    SignedPerm w = identity(m);
    if (k <= m - 2) {
        std::swap(w.perm_[k], w.perm_[k + 1]);
    } else {
        // reflection in e_{m-2}+e_{m-1}
        std::swap(w.perm_[m - 2], w.perm_[m - 1]);
        w.signs_[m - 2] = -1;
        w.signs_[m - 1] = -1;
    }
    return w;
}

bool SignedPerm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (perm_[i] != i || signs_[i] != 1) return false;
    return true;
}

SignedPerm SignedPerm::inverse() const {
    const int m = size();
    std::vector<int> p(m), s(m);
    for (int i = 0; i < m; ++i) {
        p[perm_[i]] = i;
        s[perm_[i]] = signs_[i];
    }
    return SignedPerm(std::move(p), std::move(s));
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("SignedPerm: size mismatch");
    const int m = a.size();
    std::vector<int> p(m), s(m);
    for (int i = 0; i < m; ++i) {
        // (a*b)(e_i) = a(b.signs[i] e_{b.perm[i]})
        p[i] = a.perm_[b.perm_[i]];
        s[i] = b.signs_[i] * a.signs_[b.perm_[i]];
    }
    return SignedPerm(std::move(p), std::move(s));
}

WeightVec SignedPerm::apply(const WeightVec& v) const {
    if (static_cast<int>(v.size()) != size())
        throw std::invalid_argument("SignedPerm::apply: size mismatch");
    WeightVec out(v.size());
    for (int i = 0; i < size(); ++i) out[perm_[i]] = signs_[i] * v[i];
    return out;
}

RootD SignedPerm::apply(const RootD& r) const {
    // image of sign*(e_i +- e_j)
    int ci = r.sign * signs_[r.i];
    int cj = r.sign * (r.sum ? 1 : -1) * signs_[r.j];
    int a = perm_[r.i], b = perm_[r.j];
    if (a > b) {
        std::swap(a, b);
        std::swap(ci, cj);
    }
    RootD out;
    out.i = a;
    out.j = b;
    out.sum = (ci == cj);
    out.sign = ci;  // positive iff the coefficient of the smaller index is +1
    return out;
}

std::vector<int> SignedPerm::signed_images() const {
    std::vector<int> out(size());
    for (int i = 0; i < size(); ++i) out[i] = signs_[i] * (perm_[i] + 1);
    return out;
}

std::string SignedPerm::str() const {
    std::string s = "[";
    auto im = signed_images();
    for (size_t i = 0; i < im.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(im[i]);
    }
    return s + "]";
}

std::vector<RootD> simple_roots(int m) {
    if (m < 2) throw std::invalid_argument("simple_roots: need m >= 2");
    std::vector<RootD> out;
    out.reserve(m);
    for (int k = 0; k + 1 < m; ++k) out.push_back(RootD{k, k + 1, false, 1});
    out.push_back(RootD{m - 2, m - 1, true, 1});
    return out;
}

std::vector<RootD> positive_roots(int m) {
    std::vector<RootD> out;
    out.reserve(m * (m - 1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            out.push_back(RootD{i, j, false, 1});
            out.push_back(RootD{i, j, true, 1});
        }
    return out;
}

WeightVec rho(int m) {
    if (m < 2) throw std::invalid_argument("rho: need m >= 2");
    WeightVec out(m);
    for (int i = 0; i < m; ++i) out[i] = m - 1 - i;
    return out;
}

int pairing(const WeightVec& v, const RootD& alpha) {
    int val = v[alpha.i] + (alpha.sum ? v[alpha.j] : -v[alpha.j]);
    return alpha.sign * val;
}

int length(const SignedPerm& w) {
    int len = 0;
    for (const RootD& alpha : positive_roots(w.size()))
        if (!w.apply(alpha).is_positive()) ++len;
    return len;
}

std::vector<int> reduced_word(SignedPerm w) {
    const int m = w.size();
    auto simples = simple_roots(m);
    std::vector<int> word;
    while (!w.is_identity()) {
        int descent = -1;
        for (int k = 0; k < m; ++k) {
            if (!w.apply(simples[k]).is_positive()) {
                descent = k;
                break;
            }
        }
        if (descent < 0) throw std::logic_error("reduced_word: no descent found");
        w = w * SignedPerm::simple_reflection(m, descent);
        word.push_back(descent);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

SignedPerm product_of_word(int m, const std::vector<int>& word) {
    SignedPerm w = SignedPerm::identity(m);
    for (int k : word) w = w * SignedPerm::simple_reflection(m, k);
    return w;
}

void for_each_weyl(int m, const std::function<void(const SignedPerm&)>& fn) {
    if (m < 2) throw std::invalid_argument("for_each_weyl: need m >= 2");
    if (m > 8) throw std::invalid_argument("for_each_weyl: m > 8 refused (group too large)");
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (__builtin_popcount(mask) % 2 != 0) continue;
            std::vector<int> signs(m, 1);
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) signs[i] = -1;
            fn(SignedPerm(perm, std::move(signs)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<SignedPerm> enumerate_weyl(int m) {
    std::vector<SignedPerm> out;
    for_each_weyl(m, [&](const SignedPerm& w) { out.push_back(w); });
    return out;
}

SpecialElements special_elements(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("special_elements: n must be even and >= 2");
    const int m = n + 1;
    SpecialElements se;

    std::vector<int> id(m), signs(m, 1);
    std::iota(id.begin(), id.end(), 0);

    signs.assign(m, 1);
    signs[0] = -1;
    signs[n] = -1;
    se.w_P = SignedPerm(id, signs);

    signs.assign(m, -1);
    signs[n] = 1;  // n even: the sign count stays even
    se.w_G = SignedPerm(id, signs);

    signs.assign(m, -1);
    signs[0] = 1;
    se.w_M = SignedPerm(id, signs);

    std::vector<int> cyc(m);
    for (int i = 0; i < n; ++i) cyc[i] = i + 1;
    cyc[n] = 0;
    signs.assign(m, 1);
    se.w_plus = SignedPerm(cyc, signs);

    signs.assign(m, 1);
    signs[n - 1] = -1;
    signs[n] = -1;
    se.w_minus = SignedPerm(cyc, signs);

    return se;
}

std::vector<int> factor_w_P(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("factor_w_P: n must be even and >= 2");
    std::vector<int> word;
    word.reserve(2 * n);
    for (int k = 0; k <= n - 2; ++k) word.push_back(k);
    word.push_back(n);
    for (int k = n - 1; k >= 0; --k) word.push_back(k);
    return word;
}

bool is_kostant_rep(const SignedPerm& w, int n) {
    // Levi simple roots: alpha_1..alpha_n on the letters 1..n.
    const int m = n + 1;
    if (w.size() != m) throw std::invalid_argument("is_kostant_rep: size mismatch");
    SignedPerm winv = w.inverse();
    auto simples = simple_roots(m);
    for (int k = 1; k < m; ++k)
        if (!winv.apply(simples[k]).is_positive()) return false;
    return true;
}

std::vector<SignedPerm> kostant_reps(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("kostant_reps: n must be even and >= 2");
    if (n > 6) throw std::invalid_argument("kostant_reps: n > 6 refused");
    std::vector<SignedPerm> out;
    for_each_weyl(n + 1, [&](const SignedPerm& w) {
        if (is_kostant_rep(w, n)) out.push_back(w);
    });
    std::sort(out.begin(), out.end(), [](const SignedPerm& a, const SignedPerm& b) {
        int la = length(a), lb = length(b);
        return la != lb ? la < lb : a < b;
    });
    return out;
}

bool is_balanced(const SignedPerm& w, int n) { return length(w) == n; }

WeightVec dot_action(const SignedPerm& w, const WeightVec& lambda) {
    if (static_cast<int>(lambda.size()) != w.size())
        throw std::invalid_argument("dot_action: size mismatch");
    WeightVec r = rho(w.size());
    WeightVec shifted(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) shifted[i] = lambda[i] + r[i];
    WeightVec out = w.apply(shifted);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= r[i];
    return out;
}

SignedPerm prime_map(const SignedPerm& w, int n) {
    if (!is_kostant_rep(w, n))
        throw std::invalid_argument("prime_map: input is not a Kostant representative");
    return special_elements(n).w_P * w;
}

SignedPerm vee_map(const SignedPerm& w, int n) {
    if (!is_kostant_rep(w, n))
        throw std::invalid_argument("vee_map: input is not a Kostant representative");
    auto se = special_elements(n);
    return se.w_M * w * se.w_G;
}

bool is_dominant_G(const WeightVec& lambda) {
    const int m = static_cast<int>(lambda.size());
    for (int i = 0; i + 2 < m; ++i)
        if (lambda[i] < lambda[i + 1]) return false;
    if (m >= 2 && lambda[m - 2] < std::abs(lambda[m - 1])) return false;
    return true;
}

bool is_dominant_M(const WeightVec& lambda) {
    // entry 0 is the GL_1 slot, unconstrained
    WeightVec tail(lambda.begin() + 1, lambda.end());
    return is_dominant_G(tail);
}

mpz_class weyl_dim_M(const WeightVec& lambda, int n) {
    if (static_cast<int>(lambda.size()) != n + 1)
        throw std::invalid_argument("weyl_dim_M: expected n+1 entries");
    if (!is_dominant_M(lambda))
        throw std::invalid_argument("weyl_dim_M: weight is not M-dominant");
    // D_n factor on the letters 1..n; rho restricted there is (n-1, ..., 0).
    WeightVec tail(lambda.begin() + 1, lambda.end());
    WeightVec r = rho(n);
    mpz_class numer = 1, denom = 1;
    for (const RootD& alpha : positive_roots(n)) {
        int top = pairing(tail, alpha) + pairing(r, alpha);
        int bot = pairing(r, alpha);
        numer *= top;
        denom *= bot;
    }
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    if (rem != 0) throw std::logic_error("weyl_dim_M: non-integral dimension");
    return q;
}

mpz_class kostant_euler_check(const WeightVec& lambda, int n) {
    if (!is_dominant_G(lambda))
        throw std::invalid_argument("kostant_euler_check: weight is not G-dominant");
    mpz_class total = 0;
    for (const SignedPerm& w : kostant_reps(n)) {
        WeightVec wl = dot_action(w, lambda);
        mpz_class d = weyl_dim_M(wl, n);
        if (length(w) % 2 == 0)
            total += d;
        else
            total -= d;
    }
    return total;
}

}  // namespace weylcrit
