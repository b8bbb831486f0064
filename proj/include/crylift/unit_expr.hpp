#pragma once

// Formal products  sign * prod label_i^{e_i}  with exact rational exponents.
// Labels are opaque unit symbols such as "psi(varpi_F)". The normal form
// keeps labels sorted and drops zero exponents, so equality is structural.

#include "crylift/integer.hpp"

#include <map>
#include <string>

namespace crylift {

class UnitExpr {
 public:
  UnitExpr() = default;

  static UnitExpr one() { return {}; }
  static UnitExpr minus_one();
  static UnitExpr symbol(const std::string& label, const Rational& exponent = 1);

  int sign() const { return sign_; }
  const std::map<std::string, Rational>& factors() const { return factors_; }
  bool is_one() const { return sign_ == 1 && factors_.empty(); }

  UnitExpr operator*(const UnitExpr& rhs) const;
  UnitExpr& operator*=(const UnitExpr& rhs);
  UnitExpr operator-() const;

  UnitExpr inverse() const;
  /// Integer power; the sign follows the parity of n.
  UnitExpr pow(const Integer& n) const;
  /// Formal n-th root. Only defined for sign +1; throws Infeasible otherwise.
  UnitExpr root(const Integer& n) const;

  /// Builds a normalized expression from raw parts. Throws MalformedInput for
  /// a sign other than +-1 or an empty label.
  static UnitExpr from_parts(int sign, const std::map<std::string, Rational>& factors);

  std::string to_string() const;

  friend bool operator==(const UnitExpr&, const UnitExpr&) = default;

 private:
  int sign_ = 1;
  std::map<std::string, Rational> factors_;
};

/// (-1)^n for integer n.
int parity_sign(const Integer& n);

}  // namespace crylift
