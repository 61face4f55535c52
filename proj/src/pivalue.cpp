#include "weylcrit/pivalue.hpp"

#include <cctype>
#include <stdexcept>

namespace weylcrit {

PiValue& PiValue::operator*=(const PiValue& o) {
    coeff *= o.coeff;
    half_pi_exp += o.half_pi_exp;
    if (coeff.is_zero()) half_pi_exp = 0;
    return *this;
}

PiValue& PiValue::operator/=(const PiValue& o) {
    if (o.is_zero()) throw std::domain_error("PiValue: division by zero");
    coeff /= o.coeff;
    half_pi_exp -= o.half_pi_exp;
    if (coeff.is_zero()) half_pi_exp = 0;
    return *this;
}

std::string PiValue::str() const {
    return coeff.str_slash() + " * pi^(" + std::to_string(half_pi_exp) + "/2)";
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

[[noreturn]] void parse_fail(const std::string& text) {
    throw std::invalid_argument("PiValue: cannot parse '" + text + "'");
}

void expect(const std::string& s, size_t& i, const std::string& token, const std::string& whole) {
    skip_ws(s, i);
    if (s.compare(i, token.size(), token) != 0) parse_fail(whole);
    i += token.size();
}

long parse_long(const std::string& s, size_t& i, const std::string& whole) {
    skip_ws(s, i);
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) parse_fail(whole);
    return std::stol(s.substr(start, i - start));
}

}  // namespace

PiValue parse_pi_value(const std::string& text) {
    size_t i = 0;
    skip_ws(text, i);
    size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                               text[i] == '-' || text[i] == '+' || text[i] == '/'))
        ++i;
    if (i == start) parse_fail(text);
    Rational coeff = Rational::parse(text.substr(start, i - start));
    expect(text, i, "*", text);
    expect(text, i, "pi^(", text);
    long h = parse_long(text, i, text);
    expect(text, i, "/2)", text);
    skip_ws(text, i);
    if (i != text.size()) parse_fail(text);
    PiValue v(coeff, h);
    if (coeff.is_zero() && h != 0) parse_fail(text);  // canonical zero only
    return v;
}

GammaSym gamma_at(long two_z) {
    // Walk the functional equation from the anchor Gamma(1) = 1 (even 2z)
    // or Gamma(1/2) = sqrt(pi) (odd 2z), tracking the leading Laurent datum.
    long anchor = (two_z % 2 == 0) ? 2 : 1;  // doubled argument of the anchor
    int order = 0;
    PiValue lead = (anchor == 2) ? PiValue(1) : PiValue(Rational(1), 1);
    long cur = anchor;
    while (cur < two_z) {
        // Gamma(z+1) = z * Gamma(z): multiply by cur/2
        lead *= PiValue(Rational(cur, 2));
        cur += 2;
    }
    while (cur > two_z) {
        // Gamma(z) = Gamma(z+1) / z: divide by (cur-2)/2
        cur -= 2;
        if (cur == 0) {
            order -= 1;  // the linear factor vanishes to first order with unit slope
        } else {
            lead /= PiValue(Rational(cur, 2));
        }
    }
    return GammaSym{order, lead};
}

ProductValue product_eval(const std::vector<Factor>& numerators,
                          const std::vector<Factor>& denominators) {
    ProductValue acc;
    for (const Factor& f : numerators) {
        if (f.lead.is_zero())
            throw std::invalid_argument("product_eval: zero leading coefficient in numerator");
        acc.net_order += f.order;
        acc.lead *= f.lead;
    }
    for (const Factor& f : denominators) {
        if (f.lead.is_zero())
            throw std::invalid_argument("product_eval: zero leading coefficient in denominator");
        acc.net_order -= f.order;
        acc.lead /= f.lead;
    }
    return acc;
}

}  // namespace weylcrit
