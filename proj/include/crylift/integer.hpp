#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace crylift {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^exp, exact.
Integer ipow(const Integer& base, std::uint64_t exp);

/// Representative of a in [0, m). Requires m > 0.
Integer floor_mod(const Integer& a, const Integer& m);

/// Floor division, rounding toward negative infinity. Requires m > 0.
Integer floor_div(const Integer& a, const Integer& m);

Integer abs(const Integer& a);

bool is_prime(const Integer& n);

/// Strict decimal parse: optional leading '-', then digits only.
/// Throws MalformedInput on anything else.
Integer parse_integer(std::string_view text);

std::string to_decimal(const Integer& value);

/// Narrowing conversion; throws MalformedInput when the value does not fit.
std::int64_t to_int64(const Integer& value);
std::uint64_t to_uint64(const Integer& value);

}  // namespace crylift
