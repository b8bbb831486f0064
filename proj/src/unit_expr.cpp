#include "crylift/unit_expr.hpp"

#include "crylift/errors.hpp"

namespace crylift {

int parity_sign(const Integer& n) { return floor_mod(n, 2) == 0 ? 1 : -1; }

UnitExpr UnitExpr::minus_one() {
  UnitExpr u;
  u.sign_ = -1;
  return u;
}

UnitExpr UnitExpr::symbol(const std::string& label, const Rational& exponent) {
  return from_parts(1, {{label, exponent}});
}

UnitExpr UnitExpr::from_parts(int sign, const std::map<std::string, Rational>& factors) {
  if (sign != 1 && sign != -1) throw MalformedInput("unit sign must be +1 or -1");
  UnitExpr u;
  u.sign_ = sign;
  for (const auto& [label, e] : factors) {
    if (label.empty()) throw MalformedInput("empty unit label");
    if (e != 0) u.factors_[label] = e;
  }
  return u;
}

UnitExpr& UnitExpr::operator*=(const UnitExpr& rhs) {
  sign_ *= rhs.sign_;
  for (const auto& [label, e] : rhs.factors_) {
    Rational& slot = factors_[label];
    slot += e;
    if (slot == 0) factors_.erase(label);
  }
  return *this;
}

UnitExpr UnitExpr::operator*(const UnitExpr& rhs) const {
  UnitExpr out = *this;
  out *= rhs;
  return out;
}

UnitExpr UnitExpr::operator-() const {
  UnitExpr out = *this;
  out.sign_ = -out.sign_;
  return out;
}

UnitExpr UnitExpr::inverse() const { return pow(-1); }

UnitExpr UnitExpr::pow(const Integer& n) const {
  UnitExpr out;
  out.sign_ = (sign_ == -1) ? parity_sign(n) : 1;
  if (n == 0) return out;
  for (const auto& [label, e] : factors_) out.factors_[label] = e * Rational(n);
  return out;
}

UnitExpr UnitExpr::root(const Integer& n) const {
  if (n < 1) throw MalformedInput("root index must be >= 1");
  if (sign_ != 1) throw Infeasible("no root of a unit with sign -1 is modeled");
  UnitExpr out;
  for (const auto& [label, e] : factors_) out.factors_[label] = e / Rational(n);
  return out;
}

std::string UnitExpr::to_string() const {
  std::string out = sign_ == 1 ? "+1" : "-1";
  for (const auto& [label, e] : factors_) {
    out += " * " + label;
    if (e != 1) out += "^(" + e.str() + ")";
  }
  return out;
}

}  // namespace crylift
