#pragma once

// Embedding bookkeeping for F, F_0 (max unramified subfield), E (unramified of
// degree d over F) and E_0, and the construction of the lifted character's
// weights and of the irreducible-case lift certificate.
//
// Canonical orderings (part of the certificate wire format):
//   Sigma_{F_0}: s = 0..f-1, sigma0_s = sigma0_0 o Frob^s.
//   Sigma_F:     index s*e + r, r = 0..e-1 runs over I_{sigma0_s}.
//   Sigma_{E_0}: index u = 0..fd-1, tau0_u = tau0_0 o Frob^u; tau0_u restricts
//                to sigma0_{u mod f}, so J_{sigma0_s} = {s + f*j : j < d}.
//   Sigma_E:     index s*e*d + r*d + j  <->  (sigma = s*e + r, tau0 = s + f*j).

#include "crylift/ff_chars.hpp"
#include "crylift/integer.hpp"
#include "crylift/unit_expr.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace crylift::lift {

struct LocalFieldShape {
  Integer p;
  std::uint32_t f = 1;
  std::uint32_t e = 1;
  std::uint32_t d = 1;
  Integer t = 1;  // |mu(F)|, supplied

  /// Throws MalformedInput unless p is prime, e, f, d, t >= 1 and (q-1) | t.
  void validate() const;

  Integer q() const { return ipow(p, f); }
  ff::FiniteFieldSpec residue_field() const { return {p, f}; }
  ff::FiniteFieldSpec extension_residue_field() const { return {p, f * d}; }

  friend bool operator==(const LocalFieldShape&, const LocalFieldShape&) = default;
};

struct TauPair {
  std::size_t sigma = 0;  // tau|_F
  std::size_t tau0 = 0;   // tau|_{E_0}

  friend bool operator==(const TauPair&, const TauPair&) = default;
};

class EmbeddingLayout {
 public:
  const LocalFieldShape& shape() const { return shape_; }

  std::size_t sigma_f0_count() const { return shape_.f; }
  std::size_t sigma_f_count() const { return std::size_t{shape_.e} * shape_.f; }
  std::size_t sigma_e0_count() const { return std::size_t{shape_.f} * shape_.d; }
  std::size_t sigma_e_count() const { return sigma_f_count() * shape_.d; }

  std::size_t sigma_index(std::size_t s, std::size_t r) const { return s * shape_.e + r; }
  std::size_t tau0_index(std::size_t s, std::size_t j) const { return s + shape_.f * j; }
  std::size_t tau_index(std::size_t s, std::size_t r, std::size_t j) const {
    return (s * shape_.e + r) * shape_.d + j;
  }

  /// I_{sigma0_s}, J_{sigma0_s}, Sigma_{E,sigma0_s} in canonical order.
  const std::vector<std::size_t>& inertia_block(std::size_t s) const { return rows_[s]; }
  const std::vector<std::size_t>& residue_block(std::size_t s) const { return cols_[s]; }
  const std::vector<std::size_t>& tau_block(std::size_t s) const { return taus_[s]; }

  /// tau -> (tau|_F, tau|_{E_0}) for every tau in Sigma_E.
  const std::vector<TauPair>& pairing() const { return pairing_; }

  friend EmbeddingLayout build_layout(const LocalFieldShape& shape);

 private:
  LocalFieldShape shape_;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<std::vector<std::size_t>> cols_;
  std::vector<std::vector<std::size_t>> taus_;
  std::vector<TauPair> pairing_;
};

EmbeddingLayout build_layout(const LocalFieldShape& shape);

/// psi(x) = prod_sigma sigma(x)^{a_sigma} on O_F^x, psi(varpi_F) = uniformizer.
struct DetSpec {
  std::vector<Integer> a;
  UnitExpr uniformizer = UnitExpr::symbol("psi(varpi_F)");
};

struct WeightAssignment {
  std::vector<Integer> k;  // indexed by Sigma_E

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// psi = theta-bar on O_F^x at exponent level:
///   sum_{I_s} a_sigma == c_s == sum_{J_s} b_tau0  (mod p-1) for every s,
/// c = digits of theta-bar restricted to k_F, b = digits of theta-bar.
/// theta_bar must live on the field with p^{fd} elements (MalformedInput).
bool compat_check(const ff::MultChar& theta_bar, const DetSpec& psi, const EmbeddingLayout& layout);

/// Pairwise-distinct weights k with exact sums a_sigma over tau|_F = sigma
/// and sums congruent to b_tau0 mod p-1 over tau|_{E_0} = tau0; the
/// sigma0-blocks are magnitude-separated in canonical order. For d = 1,
/// k_sigma = a_sigma. Throws Infeasible when compat_check fails.
WeightAssignment lift_theta(const ff::MultChar& theta_bar, const DetSpec& psi,
                            const LocalFieldShape& shape);

struct InducedWeights {
  std::vector<std::vector<Integer>> per_sigma;  // descending
  bool regular = true;
};

InducedWeights induce_weights(const WeightAssignment& k, const EmbeddingLayout& layout);

/// max |block s| < min |block s+1| for consecutive sigma0-blocks.
bool blocks_separated(const WeightAssignment& k, const EmbeddingLayout& layout);

enum class CheckStatus { kPass, kFail, kNotApplicable };

std::string to_string(CheckStatus status);
CheckStatus check_status_from_string(const std::string& text);

struct CheckRecord {
  std::string id;
  CheckStatus status = CheckStatus::kFail;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

// Identifiers of the recorded checks, in certificate order.
inline constexpr const char* kCheckCompat = "eq_one";
inline constexpr const char* kCheckDistinct = "distinct";
inline constexpr const char* kCheckLiftsResidual = "lifts_residual";
inline constexpr const char* kCheckRestriction = "four";
inline constexpr const char* kCheckUniformizer = "eq_three";
inline constexpr const char* kCheckDeterminant = "five";
inline constexpr const char* kCheckRegular = "regular";
inline constexpr const char* kCheckBlockSeparation = "block_separation";

inline constexpr const char* kHypothesisResidualUniformizer = "eq_two";

struct LiftCertificate {
  LocalFieldShape shape;
  EmbeddingLayout layout;
  ff::MultChar theta_bar;
  DetSpec psi;
  WeightAssignment weights;
  UnitExpr theta_uniformizer;  // theta(Art_E(varpi_E))
  std::vector<CheckRecord> checks;
  std::vector<std::string> hypotheses;
};

/// Lifted character theta with theta(varpi_E) = (-1)^{d-1} psi(varpi_F) and
/// weights from lift_theta, plus every recorded identity. Throws Infeasible
/// when (theta_bar, psi) are incompatible.
LiftCertificate irr_crys_lift(const ff::MultChar& theta_bar, const DetSpec& psi,
                              const LocalFieldShape& shape);

}  // namespace crylift::lift
