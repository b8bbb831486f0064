#pragma once

// Weight and determinant bookkeeping for crystalline characters chi_k, the
// cyclotomic shifts used when lifting an extension, the unramified d-th root
// correction, and the fixed-determinant twist.
//
// Convention: chi_cyc has Hodge-Tate weight +1.

#include "crylift/integer.hpp"
#include "crylift/lift_builder.hpp"
#include "crylift/unit_expr.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crylift::ledger {

/// chi_k times an unramified character: exponents over Sigma_F plus the
/// value at varpi_F (pure chi_k has value 1).
struct CrystCharSpec {
  std::vector<Integer> k;
  UnitExpr uniformizer;

  friend bool operator==(const CrystCharSpec&, const CrystCharSpec&) = default;
};

/// Per-embedding Hodge-Tate weights, each tuple sorted descending.
class WeightProfile {
 public:
  /// Throws MalformedInput if dim < 1, any tuple has length != dim or is not
  /// sorted descending.
  static WeightProfile make(std::uint32_t dim, std::vector<std::vector<Integer>> weights);

  std::uint32_t dim() const { return dim_; }
  std::size_t embeddings() const { return weights_.size(); }
  const std::vector<std::vector<Integer>>& weights() const { return weights_; }
  const std::vector<Integer>& at(std::size_t sigma) const { return weights_[sigma]; }

  /// Strictly descending for every embedding.
  bool regular() const;
  /// Weights of the determinant: per-embedding sums.
  std::vector<Integer> det_exponents() const;

  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;

 private:
  std::uint32_t dim_ = 1;
  std::vector<std::vector<Integer>> weights_;
};

/// Every weight shifted by m (twist by chi_cyc^m).
WeightProfile twist(const WeightProfile& profile, const Integer& m);

/// Weights of rho tensor chi_k: k_sigma added to every weight at sigma.
WeightProfile tensor_with(const WeightProfile& profile, const std::vector<Integer>& k);

/// How "slightly less" is read for the shifted pair. kReversedSign reads it
/// in the opposite sign convention (chi_cyc of weight -1): every weight of
/// p1' must exceed every weight of p2' at each embedding. kLiteral compares
/// as written: max p1' < min p2'.
enum class SlightlyLessConvention { kReversedSign, kLiteral };

bool slightly_less(const WeightProfile& lower, const WeightProfile& upper,
                   SlightlyLessConvention convention);

/// Ledger of the determinant twists in one extension step.
struct ExtensionLedger {
  Integer shift;  // d1 d2 (p-1) N
  std::vector<Integer> det1, det2;                  // weights of psi1, psi2
  std::vector<Integer> det1_shifted, det2_shifted;  // weights of psi1', psi2'
  UnitExpr psi1, psi2;                              // values at varpi_F
  UnitExpr psi1_shifted, psi2_shifted;
  UnitExpr psi;  // psi1 * psi2
  SlightlyLessConvention convention = SlightlyLessConvention::kReversedSign;
  bool slightly_less = false;
  // The extension theorem is an opaque step: it takes (p1', p2') and promises
  // rho_1'' with the weights of p1' and an extension rho. Recorded, not run.
  std::string assumption = "extension-lift";
};

struct ExtensionShift {
  Integer n;
  WeightProfile p1_shifted;
  WeightProfile p2_shifted;
  ExtensionLedger ledger;
};

/// Smallest N >= 0 with all weights of p1 + d2(p-1)N positive and all
/// weights of p2 - d1(p-1)N negative. The determinant shifts are recorded
/// at exponent and unit level and psi1' psi2' = psi1 psi2 is asserted.
ExtensionShift shift_for_extension(const WeightProfile& p1, const WeightProfile& p2,
                                   const Integer& p,
                                   const UnitExpr& psi1 = UnitExpr::symbol("psi_1(varpi_F)"),
                                   const UnitExpr& psi2 = UnitExpr::symbol("psi_2(varpi_F)"),
                                   SlightlyLessConvention convention =
                                       SlightlyLessConvention::kReversedSign);

/// eta^{1/d}. Requires sign +1 (eta trivial mod varpi); throws Infeasible
/// otherwise.
UnitExpr dth_root_correction(const UnitExpr& eta, const Integer& d);

/// Unramified correction after the extension step: with eta = psi1' /
/// psi1'' (psi1'' the determinant of the promised sub-lift), returns chi with
/// chi^d = eta and asserts det(rho (x) chi) = psi symbolically, where
/// det rho = psi1'' psi2'.
UnitExpr determinant_correction(const ExtensionLedger& ledger, const UnitExpr& psi1_double_prime,
                                const Integer& total_dim);

/// The twist theta with det(rho_x (x) theta) = psi: k_sigma = k_sigma(eta)/d
/// where k_sigma(eta) = sum_i (k_{sigma,i}(rho) - k_{sigma,i}(rho_x)), and
/// theta(varpi_F) = eta(varpi_F)^{1/d}.
///
/// Requires both profiles of dimension shape.d over e*f embeddings
/// (MalformedInput) and k_{sigma,i}(rho_x) = k_{sigma,i}(rho) mod d*t
/// (Infeasible otherwise).
CrystCharSpec twist_shout(const WeightProfile& rho, const WeightProfile& rho_x,
                          const lift::LocalFieldShape& shape,
                          const UnitExpr& eta = UnitExpr::symbol("eta(varpi_F)"));

}  // namespace crylift::ledger
