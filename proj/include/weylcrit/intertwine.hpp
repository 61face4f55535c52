#pragma once

#include <vector>

#include "weylcrit/pivalue.hpp"
#include "weylcrit/weyl.hpp"

namespace weylcrit {

/// Discrete-series parameter: n strictly decreasing positive even integers.
struct DSParam {
    std::vector<int> ells;
};

/// ell_j = 2(mu_j + n - j) for j < n, ell_n = 2|mu_n|. Requires |mu_n| >= 1.
DSParam ds_param(const WeightVec& mu_v, int n);

/// L-factor of the 2-dimensional parameter: 2 (2 pi)^{-(s+ell/2)} Gamma(s+ell/2).
ProductValue l_factor_I(int s, int ell);

/// Highest weight of the minimal K-type: Lambda + rho^c - 2 rho_K^c, with
/// Lambda_j = mu_j + n - j and rho_K^c the half-sum of the compact positive
/// roots e_i^K +- e_j^K, i < j, i = j (mod 2).
WeightVec blattner(const WeightVec& mu_v, int n);

/// One rank-one factor of the intertwining operator: the root beta_j of the
/// enumeration e_0-e_1, ..., e_0-e_n, e_0+e_n, ..., e_0+e_1, its character
/// exponent <beta_j^vee, kappa>, and the parity eps_j.
struct RankOneStep {
    int j = 0;  // 1-based position
    RootD beta;
    int exponent = 0;
    int parity = 0;
};

/// All 2n steps. Exponents are computed both from the closed branch formulas
/// and from the pairing with the character exponent vector; the two must agree.
std::vector<RankOneStep> rank_one_steps(const WeightVec& mu_v, int eps0, int d, int n);

/// The rational correction M(z)_k of the weight-m SO(2)-type, m = 2k + eps,
/// evaluated at integer z as a leading Laurent datum (zero and pole aware).
ProductValue m_correction(int z, int eps, int k);

/// Scalar of the rank-one operator on the weight-m SO(2)-type: a power of (-i)
/// together with an exact Gamma-quotient magnitude. Requires m = eps (mod 2).
struct Sl2Scalar {
    int phase_pow = 0;  // exponent of (-i), reduced mod 4
    ProductValue magnitude;
};

Sl2Scalar sl2_scalar(int z, int eps, int m);

/// Product of the 2n rank-one scalars at the point of evaluation s = -n, on
/// the k = 0 diagonal entry, with exact pole cancellation and the phase sign.
struct PhiCResult {
    ProductValue phi;   // holomorphic: net_order == 0
    PiValue c;          // phase_sign * phi.lead; equals q * pi^n, q nonzero
    int phase_sign = 1; // product of the (-i)^{eps_j}, always +-1
    int evens_low = 0;  // even shifted arguments among j <= n (must be r)
    int evens_high = 0; // and among j > n (must be r)
    int num_poles = 0;  // Gamma poles in the numerator (must be r)
    int den_poles = 0;  // and in the denominator (must be r)
};

/// Requires 1-|mu_n| <= -(d+n) <= |mu_n|-1 and -(d+n) >= 0.
PhiCResult phi_and_c(const WeightVec& mu_v, int d, int eps0, int n);

}  // namespace weylcrit
