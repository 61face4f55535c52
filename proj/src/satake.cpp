#include "weylcrit/satake.hpp"

#include <stdexcept>

namespace weylcrit {

SatakeParam SatakeParam::make(std::vector<Rational> thetas, Rational theta_chi, long q) {
    if (q < 2) throw std::invalid_argument("SatakeParam: q must be >= 2");
    if (theta_chi.is_zero()) throw std::invalid_argument("SatakeParam: theta_chi must be nonzero");
    for (const Rational& t : thetas)
        if (t.is_zero()) throw std::invalid_argument("SatakeParam: thetas must be nonzero");
    return SatakeParam{std::move(thetas), std::move(theta_chi), q};
}

std::optional<Rational> local_L(int s, const SatakeParam& p) {
    // q^{-s} as an exact rational
    mpz_class qs;
    mpz_ui_pow_ui(qs.get_mpz_t(), static_cast<unsigned long>(p.q),
                  static_cast<unsigned long>(s < 0 ? -s : s));
    Rational q_pow = s >= 0 ? Rational(mpz_class(1), qs) : Rational(qs);

    Rational denom(1);
    for (const Rational& t : p.thetas) {
        Rational f1 = Rational(1) - p.theta_chi * t * q_pow;
        Rational f2 = Rational(1) - p.theta_chi * (Rational(1) / t) * q_pow;
        if (f1.is_zero() || f2.is_zero()) return std::nullopt;
        denom *= f1 * f2;
    }
    return Rational(1) / denom;
}

std::optional<Rational> gk_ratio(int s, const SatakeParam& p) {
    auto a = local_L(s, p);
    auto b = local_L(1 + s, p);
    if (!a || !b) return std::nullopt;
    return *a / *b;
}

}  // namespace weylcrit
