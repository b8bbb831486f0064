#pragma once

// Multiplicative characters of finite fields, represented by discrete-log
// exponents relative to a fixed (unnamed) generator embedding sigma_0.
//
// Embedding order: sigma_i(x) = sigma_0(x^{p^i}) for i = 0..f-1. Digit i of a
// character is its exponent on sigma_i.

#include "crylift/integer.hpp"

#include <cstdint>
#include <vector>

namespace crylift::ff {

struct FiniteFieldSpec {
  Integer p;
  std::uint32_t f = 1;

  /// Validates p prime and f >= 1. Throws MalformedInput.
  static FiniteFieldSpec make(const Integer& p, std::uint32_t f);

  Integer order() const { return ipow(p, f); }
  /// Order of the multiplicative group, q - 1.
  Integer group_order() const { return order() - 1; }

  friend bool operator==(const FiniteFieldSpec&, const FiniteFieldSpec&) = default;
};

/// x -> sigma_0(x)^exponent on the multiplicative group of `field`.
struct MultChar {
  FiniteFieldSpec field;
  Integer exponent;

  /// Requires 0 <= exponent <= q - 2.
  static MultChar make(const FiniteFieldSpec& field, const Integer& exponent);

  friend bool operator==(const MultChar&, const MultChar&) = default;
};

struct DigitVector {
  Integer p;
  std::vector<Integer> digits;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

/// Base-p expansion of the character exponent. Throws MalformedInput if the
/// exponent is outside [0, q-2].
DigitVector digits(const MultChar& c);

/// Inverse of digits(). Rejects digits outside [0, p-1], the wrong length, a
/// different prime, and the all-(p-1) vector.
MultChar from_digits(const DigitVector& d, const FiniteFieldSpec& field);

/// Restriction of a character of F_{q^d} to its subfield F_q: the exponent
/// reduced modulo q - 1. Throws MalformedInput if `subfield` is not a subfield.
MultChar restrict_to(const MultChar& c, const FiniteFieldSpec& subfield);

/// (q^d - 1)/(q - 1) = 1 + q + ... + q^{d-1}: the exponent of the norm map
/// F_{q^d}^x -> F_q^x.
Integer norm_exponent(const Integer& q, std::uint32_t d);

}  // namespace crylift::ff
