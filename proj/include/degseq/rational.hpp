#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace degseq {

// Exact rational arithmetic. The backing type keeps values in lowest terms
// with a positive denominator, so == is exact value equality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// One rational weight per vertex.
using WeightVector = std::vector<Rational>;

// Parses "[sign]digits" or "[sign]digits/digits" with a positive denominator
// ("3", "-3/2", "+22/7"). Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

// Inverse of parse_rational: "num" when the denominator is 1, else "num/den".
std::string format_rational(const Rational& q);

} // namespace degseq
