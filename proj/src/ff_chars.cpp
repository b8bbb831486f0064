#include "crylift/ff_chars.hpp"

#include "crylift/errors.hpp"

#include <algorithm>

namespace crylift::ff {

FiniteFieldSpec FiniteFieldSpec::make(const Integer& p, std::uint32_t f) {
  if (!is_prime(p)) throw MalformedInput("p = " + to_decimal(p) + " is not prime");
  if (f < 1) throw MalformedInput("residue degree f must be >= 1");
  return FiniteFieldSpec{p, f};
}

MultChar MultChar::make(const FiniteFieldSpec& field, const Integer& exponent) {
  const Integer top = field.group_order() - 1;
  if (exponent < 0 || exponent > top) {
    throw MalformedInput("character exponent " + to_decimal(exponent) +
                         " outside [0, " + to_decimal(top) + "]");
  }
  return MultChar{field, exponent};
}

DigitVector digits(const MultChar& c) {
  const Integer top = c.field.group_order() - 1;
  if (c.exponent < 0 || c.exponent > top) {
    throw MalformedInput("non-canonical character exponent " + to_decimal(c.exponent));
  }
  DigitVector out{c.field.p, {}};
  out.digits.reserve(c.field.f);
  Integer rest = c.exponent;
  for (std::uint32_t i = 0; i < c.field.f; ++i) {
    out.digits.push_back(rest % c.field.p);
    rest /= c.field.p;
  }
  ensure(rest == 0, "digit expansion left a carry");
  return out;
}

MultChar from_digits(const DigitVector& d, const FiniteFieldSpec& field) {
  if (d.p != field.p) throw MalformedInput("digit vector prime differs from field prime");
  if (d.digits.size() != field.f) {
    throw MalformedInput("expected " + std::to_string(field.f) + " digits, got " +
                         std::to_string(d.digits.size()));
  }
  const Integer top_digit = field.p - 1;
  for (const Integer& digit : d.digits) {
    if (digit < 0 || digit > top_digit) {
      throw MalformedInput("digit " + to_decimal(digit) + " outside [0, p-1]");
    }
  }
  const bool all_top = std::all_of(d.digits.begin(), d.digits.end(),
                                   [&](const Integer& x) { return x == top_digit; });
  if (all_top) throw MalformedInput("all digits equal p-1 (non-canonical)");

  Integer b = 0;
  for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) b = b * field.p + *it;
  return MultChar{field, b};
}

MultChar restrict_to(const MultChar& c, const FiniteFieldSpec& subfield) {
  if (subfield.p != c.field.p || subfield.f == 0 || c.field.f % subfield.f != 0) {
    throw MalformedInput("F_" + to_decimal(subfield.order()) + " is not a subfield of F_" +
                         to_decimal(c.field.order()));
  }
  return MultChar::make(subfield, c.exponent % subfield.group_order());
}

Integer norm_exponent(const Integer& q, std::uint32_t d) {
  Integer sum = 0;
  Integer power = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

}  // namespace crylift::ff
