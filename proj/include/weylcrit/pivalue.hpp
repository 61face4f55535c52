#pragma once

#include <string>
#include <vector>

#include "weylcrit/rational.hpp"

namespace weylcrit {

/// Exact value coeff * pi^(half_pi_exp/2). Zero is stored canonically as 0 * pi^0.
struct PiValue {
    Rational coeff;
    long half_pi_exp = 0;

    PiValue() = default;
    PiValue(Rational c, long h = 0) : coeff(std::move(c)), half_pi_exp(h) {
        if (coeff.is_zero()) half_pi_exp = 0;
    }
    PiValue(long c) : coeff(c), half_pi_exp(0) {}

    bool is_zero() const { return coeff.is_zero(); }
    bool has_integer_pi_power() const { return half_pi_exp % 2 == 0; }

    PiValue& operator*=(const PiValue& o);
    PiValue& operator/=(const PiValue& o);  // throws on division by zero
    friend PiValue operator*(PiValue a, const PiValue& b) { return a *= b; }
    friend PiValue operator/(PiValue a, const PiValue& b) { return a /= b; }
    PiValue operator-() const { return PiValue(-coeff, half_pi_exp); }

    friend bool operator==(const PiValue& a, const PiValue& b) {
        return a.coeff == b.coeff && a.half_pi_exp == b.half_pi_exp;
    }
    friend bool operator!=(const PiValue& a, const PiValue& b) { return !(a == b); }

    /// Canonical text form "a/b * pi^(h/2)"; exact round-trip with parse_pi_value.
    std::string str() const;
};

PiValue parse_pi_value(const std::string& text);

/// Leading Laurent datum of Gamma at a half-integer argument.
/// pole_order is 0 (regular) or -1 (simple pole at an integer <= 0);
/// lead is the exact value, resp. the residue.
struct GammaSym {
    int pole_order = 0;
    PiValue lead;
};

/// Gamma(z) for 2z = two_z. Total on half-integers: the recursion
/// Gamma(z+1) = z*Gamma(z) is walked from Gamma(1) = 1 or Gamma(1/2) = sqrt(pi),
/// and dividing through a vanishing linear factor turns into a pole order.
GammaSym gamma_at(long two_z);

/// Accumulated leading datum of a product/quotient of Laurent factors.
/// net_order > 0: vanishes to that order; < 0: pole; 0: lead is the exact value.
struct ProductValue {
    long net_order = 0;
    PiValue lead = PiValue(1);
};

/// One multiplicative factor: a GammaSym or a plain nonzero PiValue constant.
struct Factor {
    long order = 0;
    PiValue lead;
    Factor(const GammaSym& g) : order(g.pole_order), lead(g.lead) {}
    Factor(const PiValue& v) : order(0), lead(v) {}
    Factor(long order_, PiValue lead_) : order(order_), lead(std::move(lead_)) {}
};

/// Exact product of numerator factors divided by denominator factors.
/// Empty lists are the empty product, i.e. 1.
/// A zero leading coefficient in either list signals malformed input.
ProductValue product_eval(const std::vector<Factor>& numerators,
                          const std::vector<Factor>& denominators);

inline ProductValue div(const ProductValue& a, const ProductValue& b) {
    return product_eval({Factor(a.net_order, a.lead)}, {Factor(b.net_order, b.lead)});
}

inline bool operator==(const ProductValue& a, const ProductValue& b) {
    return a.net_order == b.net_order && a.lead == b.lead;
}

}  // namespace weylcrit
