#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace monotile {

// Exact rationals for every density and threshold comparison.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "3", "-2", "7/8" and decimal literals such as "0.35" (read exactly as 7/20).
Rational parse_rational(std::string_view text);

Rational ratio(std::int64_t num, std::int64_t den);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

// Smallest integer s with s >= q.
BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

// Smallest subset size s with s >= q * size, as used by the "|U| >= eps |V|" thresholds.
std::size_t min_qualifying_size(const Rational& q, std::size_t size);

} // namespace monotile
