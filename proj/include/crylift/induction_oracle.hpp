#pragma once

// Finite model of an induced character: G = C_M x| <phi>, M = q^d - 1, with
// phi of order d acting by phi^{-1} h phi = h^q. H = C_M is written
// additively (h is an exponent of a fixed generator). rho = Ind_H^G theta is
// realized on the basis f, phi f, ..., phi^{d-1} f as monomial matrices whose
// nonzero entries are zeta^{e}, zeta a primitive M-th root of unity.

#include "crylift/integer.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace crylift::induction {

/// Sign of a permutation given in one-line notation (image of each index).
int permutation_sign(std::span<const std::uint32_t> perm);

/// Sign of a d-cycle, (-1)^{d-1}, computed from its cycle structure.
int cycle_sign(std::uint32_t d);

struct FrobeniusModel {
  std::int64_t q = 2;
  std::uint32_t d = 1;
  std::int64_t modulus = 1;  // M = q^d - 1
  std::vector<std::int64_t> q_powers;  // q^j mod M, j < d

  static constexpr std::int64_t kDefaultMaxModulus = 1'000'000;

  /// Requires q >= 2, d >= 1, q^d - 1 <= max_modulus and gcd(q, M) = 1.
  static FrobeniusModel make(std::int64_t q, std::uint32_t d,
                             std::int64_t max_modulus = kDefaultMaxModulus);

  std::uint64_t group_order() const { return static_cast<std::uint64_t>(modulus) * d; }
};

/// phi^frob * h
struct GroupElement {
  std::uint32_t frob = 0;
  std::int64_t h = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement multiply(const FrobeniusModel& g, const GroupElement& x, const GroupElement& y);
GroupElement power(const FrobeniusModel& g, const GroupElement& x, std::uint64_t n);
/// Element number `index` in a fixed enumeration of G, index < |G|.
GroupElement element_at(const FrobeniusModel& g, std::uint64_t index);

/// Column i holds its single nonzero entry zeta^{exps[i]} in row perm[i];
/// `sign` is a global +-1 factor on the whole matrix.
struct MonomialMatrix {
  std::vector<std::uint32_t> perm;
  std::vector<std::int64_t> exps;
  int sign = 1;

  std::size_t dim() const { return perm.size(); }
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

MonomialMatrix identity_matrix(std::uint32_t d);
/// Product a * b with exponents reduced mod `modulus`.
MonomialMatrix multiply(const MonomialMatrix& a, const MonomialMatrix& b, std::int64_t modulus);
/// Same as multiply, writing into `out` (no allocation when sized). `out`
/// must not alias `a` or `b`.
void multiply_into(const MonomialMatrix& a, const MonomialMatrix& b, std::int64_t modulus,
                   MonomialMatrix& out);

struct Determinant {
  int sign = 1;
  std::int64_t exponent = 0;  // mod M

  friend bool operator==(const Determinant&, const Determinant&) = default;
};

Determinant determinant(const MonomialMatrix& m, std::int64_t modulus);

class MonomialRep {
 public:
  /// Induces theta: h -> zeta^{b h}. Throws MalformedInput unless 0 <= b < M.
  static MonomialRep induce(const FrobeniusModel& model, std::int64_t b);

  const FrobeniusModel& model() const { return model_; }
  std::int64_t character() const { return b_; }

  /// rho(h), diagonal with exponents b q^i h.
  MonomialMatrix of_subgroup(std::int64_t h) const;
  /// rho(phi): the d-cycle f_i -> f_{i+1}, wrapping with theta(phi^d) = theta(1).
  const MonomialMatrix& frobenius() const { return frobenius_; }
  MonomialMatrix of(const GroupElement& g) const;

 private:
  FrobeniusModel model_;
  std::int64_t b_ = 0;
  std::vector<std::int64_t> weights_;  // b q^i mod M
  MonomialMatrix frobenius_;
};

Determinant det_of(const MonomialRep& rep, const GroupElement& g);

struct Counterexample {
  std::string identity;  // "norm" or "generator"
  GroupElement element;
  Determinant expected;
  Determinant actual;
};

struct DetInductionReport {
  std::int64_t q = 0;
  std::uint32_t d = 0;
  std::int64_t b = 0;
  std::uint64_t subgroup_checks = 0;
  std::uint64_t generator_checks = 0;
  std::vector<Counterexample> counterexamples;  // capped at kMaxReported

  static constexpr std::size_t kMaxReported = 16;
  std::uint64_t counterexample_count = 0;
  bool ok() const { return counterexample_count == 0; }
};

/// For every h in H: det rho(h) = (+1, b * norm_exponent(q, d) * h). For every
/// gamma = phi^j h with j a unit mod d: det rho(gamma) = (-1)^{d-1} theta(gamma^d).
DetInductionReport verify_det_induction(const FrobeniusModel& model, std::int64_t b);

}  // namespace crylift::induction
