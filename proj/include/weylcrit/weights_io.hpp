#pragma once

#include <string>
#include <vector>

#include "weylcrit/rational.hpp"
#include "weylcrit/weyl.hpp"

namespace weylcrit {

/// Raised on malformed weight text; the message names the violated inequality.
struct WeightParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parse the shared weight grammar: embeddings separated by ';', integer
/// entries by ',', e.g. "3,2;4,1". When expected_len >= 0 every embedding
/// must have that many entries.
MultiWeight parse_multiweight(const std::string& text, int expected_len = -1);

/// Additionally enforce the dominance chain a_0 >= ... >= a_{k-2} >= |a_{k-1}|
/// on every embedding (negative entries only in the last slot).
MultiWeight parse_dominant_multiweight(const std::string& text, int expected_len = -1);

std::string format_multiweight(const MultiWeight& mw);

/// Comma- or semicolon-separated small integer list, e.g. parities "0,1".
std::vector<int> parse_int_list(const std::string& text);

/// Comma-separated rationals, e.g. "1,1/2,-3".
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace weylcrit
