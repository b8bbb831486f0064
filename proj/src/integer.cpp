#include "crylift/integer.hpp"

#include "crylift/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <limits>

namespace crylift {

Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer result = 1;
  Integer b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer floor_div(const Integer& a, const Integer& m) {
  return (a - floor_mod(a, m)) / m;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned small : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  if (n < 37 * 37) return true;
  return boost::multiprecision::miller_rabin_test(n, 32);
}

Integer parse_integer(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && text.front() == '-') start = 1;
  if (start == text.size()) {
    throw MalformedInput("not a decimal integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw MalformedInput("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  return Integer(std::string(text));
}

std::string to_decimal(const Integer& value) { return value.str(); }

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw MalformedInput("integer out of 64-bit range: " + value.str());
  }
  return value.convert_to<std::int64_t>();
}

std::uint64_t to_uint64(const Integer& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw MalformedInput("integer out of unsigned 64-bit range: " + value.str());
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace crylift
