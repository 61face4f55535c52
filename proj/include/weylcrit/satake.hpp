#pragma once

#include <optional>
#include <vector>

#include "weylcrit/rational.hpp"

namespace weylcrit {

/// Unramified local datum: Satake parameter diag(theta_1..theta_n, inverses),
/// the character value theta_chi, and the residue cardinality q.
/// Rational specialization keeps every identity exact.
struct SatakeParam {
    std::vector<Rational> thetas;
    Rational theta_chi;
    long q = 2;

    static SatakeParam make(std::vector<Rational> thetas, Rational theta_chi, long q);
};

/// prod_j ((1 - t t_j q^{-s})(1 - t t_j^{-1} q^{-s}))^{-1} at integer s;
/// nullopt signals a pole (a vanishing Euler factor).
std::optional<Rational> local_L(int s, const SatakeParam& p);

/// L(s)/L(1+s): the spherical eigenvalue of the standard intertwining
/// operator. nullopt when either value is not finite.
std::optional<Rational> gk_ratio(int s, const SatakeParam& p);

}  // namespace weylcrit
