#include "weylcrit/weights_io.hpp"

#include <cstdlib>
#include <sstream>

namespace weylcrit {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_entry(const std::string& s, const std::string& whole) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw WeightParseError("weight '" + whole + "': bad integer entry '" + s + "'");
    }
}

}  // namespace

MultiWeight parse_multiweight(const std::string& text, int expected_len) {
    MultiWeight mw;
    for (const std::string& part : split(text, ';')) {
        WeightVec v;
        for (const std::string& e : split(part, ',')) v.push_back(parse_entry(e, text));
        if (v.empty()) throw WeightParseError("weight '" + text + "': empty embedding");
        mw.factors.push_back(std::move(v));
    }
    int len = static_cast<int>(mw.factors[0].size());
    if (expected_len >= 0 && len != expected_len)
        throw WeightParseError("weight '" + text + "': expected " + std::to_string(expected_len) +
                               " entries per embedding, got " + std::to_string(len));
    for (const WeightVec& f : mw.factors)
        if (static_cast<int>(f.size()) != len)
            throw WeightParseError("weight '" + text + "': embeddings of unequal size");
    return mw;
}

MultiWeight parse_dominant_multiweight(const std::string& text, int expected_len) {
    MultiWeight mw = parse_multiweight(text, expected_len);
    for (size_t t = 0; t < mw.factors.size(); ++t) {
        const WeightVec& f = mw.factors[t];
        const int k = static_cast<int>(f.size());
        for (int j = 0; j + 2 < k; ++j)
            if (f[j] < f[j + 1])
                throw WeightParseError("weight '" + text + "': embedding " + std::to_string(t + 1) +
                                       " violates entry" + std::to_string(j + 1) + " >= entry" +
                                       std::to_string(j + 2) + " (" + std::to_string(f[j]) + " < " +
                                       std::to_string(f[j + 1]) + ")");
        if (k >= 2 && f[k - 2] < std::abs(f[k - 1]))
            throw WeightParseError("weight '" + text + "': embedding " + std::to_string(t + 1) +
                                   " violates entry" + std::to_string(k - 1) + " >= |entry" +
                                   std::to_string(k) + "| (" + std::to_string(f[k - 2]) + " < |" +
                                   std::to_string(f[k - 1]) + "|)");
    }
    return mw;
}

std::string format_multiweight(const MultiWeight& mw) {
    std::ostringstream os;
    for (size_t t = 0; t < mw.factors.size(); ++t) {
        if (t) os << ";";
        for (size_t i = 0; i < mw.factors[t].size(); ++i) {
            if (i) os << ",";
            os << mw.factors[t][i];
        }
    }
    return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string norm = text;
    for (char& c : norm)
        if (c == ';') c = ',';
    std::vector<int> out;
    for (const std::string& e : split(norm, ',')) out.push_back(parse_entry(e, text));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const std::string& e : split(text, ',')) out.push_back(Rational::parse(e));
    return out;
}

}  // namespace weylcrit
