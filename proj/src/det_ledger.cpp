#include "crylift/det_ledger.hpp"

#include "crylift/errors.hpp"

#include <algorithm>

namespace crylift::ledger {

WeightProfile WeightProfile::make(std::uint32_t dim, std::vector<std::vector<Integer>> weights) {
  if (dim < 1) throw MalformedInput("profile dimension must be >= 1");
  for (std::size_t sigma = 0; sigma < weights.size(); ++sigma) {
    const auto& w = weights[sigma];
    if (w.size() != dim) {
      throw MalformedInput("embedding " + std::to_string(sigma) + " has " +
                           std::to_string(w.size()) + " weights, expected " + std::to_string(dim));
    }
    if (!std::is_sorted(w.begin(), w.end(), std::greater<>())) {
      throw MalformedInput("weights at embedding " + std::to_string(sigma) + " are not descending");
    }
  }
  WeightProfile out;
  out.dim_ = dim;
  out.weights_ = std::move(weights);
  return out;
}

bool WeightProfile::regular() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const auto& w) {
    return std::adjacent_find(w.begin(), w.end()) == w.end();
  });
}

std::vector<Integer> WeightProfile::det_exponents() const {
  std::vector<Integer> out;
  out.reserve(weights_.size());
  for (const auto& w : weights_) {
    Integer total = 0;
    for (const Integer& x : w) total += x;
    out.push_back(total);
  }
  return out;
}

WeightProfile twist(const WeightProfile& profile, const Integer& m) {
  return tensor_with(profile, std::vector<Integer>(profile.embeddings(), m));
}

WeightProfile tensor_with(const WeightProfile& profile, const std::vector<Integer>& k) {
  if (k.size() != profile.embeddings()) throw MalformedInput("twist length differs from profile");
  auto weights = profile.weights();
  for (std::size_t sigma = 0; sigma < weights.size(); ++sigma) {
    for (Integer& w : weights[sigma]) w += k[sigma];
  }
  return WeightProfile::make(profile.dim(), std::move(weights));
}

bool slightly_less(const WeightProfile& lower, const WeightProfile& upper,
                   SlightlyLessConvention convention) {
  if (lower.embeddings() != upper.embeddings()) return false;
  for (std::size_t sigma = 0; sigma < lower.embeddings(); ++sigma) {
    const auto& lo = lower.at(sigma);
    const auto& hi = upper.at(sigma);
    // Tuples are descending: front() is the max, back() the min.
    const bool ok = convention == SlightlyLessConvention::kLiteral ? lo.front() < hi.back()
                                                                   : lo.back() > hi.front();
    if (!ok) return false;
  }
  return true;
}

namespace {

bool all_positive(const WeightProfile& p) {
  return std::all_of(p.weights().begin(), p.weights().end(),
                     [](const auto& w) { return w.back() > 0; });
}

bool all_negative(const WeightProfile& p) {
  return std::all_of(p.weights().begin(), p.weights().end(),
                     [](const auto& w) { return w.front() < 0; });
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

}  // namespace

ExtensionShift shift_for_extension(const WeightProfile& p1, const WeightProfile& p2,
                                   const Integer& p, const UnitExpr& psi1, const UnitExpr& psi2,
                                   SlightlyLessConvention convention) {
  if (!is_prime(p)) throw MalformedInput("p = " + to_decimal(p) + " is not prime");
  if (p1.embeddings() != p2.embeddings()) {
    throw MalformedInput("profiles cover different embedding sets");
  }
  const Integer d1 = p1.dim();
  const Integer d2 = p2.dim();
  const Integer up = d2 * (p - 1);    // per-weight shift of p1 per unit N
  const Integer down = d1 * (p - 1);  // per-weight shift of p2 per unit N

  // Smallest N with min(p1) + up*N >= 1 and max(p2) - down*N <= -1.
  Integer n = 0;
  for (const auto& w : p1.weights()) n = std::max(n, ceil_div(1 - w.back(), up));
  for (const auto& w : p2.weights()) n = std::max(n, ceil_div(w.front() + 1, down));

  ExtensionShift out{n, twist(p1, up * n), twist(p2, -down * n), {}};
  ensure(all_positive(out.p1_shifted) && all_negative(out.p2_shifted),
         "shift did not separate the profiles");
  if (n > 0) {
    ensure(!(all_positive(twist(p1, up * (n - 1))) && all_negative(twist(p2, -down * (n - 1)))),
           "extension shift is not minimal");
  }

  ExtensionLedger& ledger = out.ledger;
  ledger.shift = d1 * d2 * (p - 1) * n;
  ledger.det1 = p1.det_exponents();
  ledger.det2 = p2.det_exponents();
  ledger.det1_shifted = out.p1_shifted.det_exponents();
  ledger.det2_shifted = out.p2_shifted.det_exponents();
  for (std::size_t sigma = 0; sigma < ledger.det1.size(); ++sigma) {
    ensure(ledger.det1_shifted[sigma] == ledger.det1[sigma] + ledger.shift &&
               ledger.det2_shifted[sigma] == ledger.det2[sigma] - ledger.shift,
           "determinant shift mismatch");
    ensure(ledger.det1_shifted[sigma] + ledger.det2_shifted[sigma] ==
               ledger.det1[sigma] + ledger.det2[sigma],
           "psi1' psi2' != psi at exponent level");
  }

  const UnitExpr cyc = UnitExpr::symbol("chi_cyc(varpi_F)");
  ledger.psi1 = psi1;
  ledger.psi2 = psi2;
  ledger.psi1_shifted = psi1 * cyc.pow(ledger.shift);
  ledger.psi2_shifted = psi2 * cyc.pow(-ledger.shift);
  ledger.psi = psi1 * psi2;
  ensure(ledger.psi1_shifted * ledger.psi2_shifted == ledger.psi, "psi1' psi2' != psi as units");
  ledger.convention = convention;
  ledger.slightly_less = slightly_less(out.p1_shifted, out.p2_shifted, convention);
  return out;
}

UnitExpr dth_root_correction(const UnitExpr& eta, const Integer& d) {
  if (d < 1) throw MalformedInput("root index must be >= 1");
  if (eta.sign() != 1) throw Infeasible("eta is not trivial mod varpi (sign -1)");
  UnitExpr root = eta.root(d);
  ensure(root.pow(d) == eta, "d-th root does not recover eta");
  return root;
}

UnitExpr determinant_correction(const ExtensionLedger& ledger, const UnitExpr& psi1_double_prime,
                                const Integer& total_dim) {
  const UnitExpr eta = ledger.psi1_shifted * psi1_double_prime.inverse();
  const UnitExpr chi = dth_root_correction(eta, total_dim);
  const UnitExpr det_rho = psi1_double_prime * ledger.psi2_shifted;
  ensure(det_rho * chi.pow(total_dim) == ledger.psi, "corrected determinant differs from psi");
  return chi;
}

CrystCharSpec twist_shout(const WeightProfile& rho, const WeightProfile& rho_x,
                          const lift::LocalFieldShape& shape, const UnitExpr& eta) {
  shape.validate();
  const std::size_t sigmas = std::size_t{shape.e} * shape.f;
  if (rho.dim() != shape.d || rho_x.dim() != shape.d) {
    throw MalformedInput("profiles must have dimension d = " + std::to_string(shape.d));
  }
  if (rho.embeddings() != sigmas || rho_x.embeddings() != sigmas) {
    throw MalformedInput("profiles must cover e*f = " + std::to_string(sigmas) + " embeddings");
  }

  const Integer d = shape.d;
  const Integer modulus = d * shape.t;
  for (std::size_t sigma = 0; sigma < sigmas; ++sigma) {
    for (std::size_t i = 0; i < shape.d; ++i) {
      if (floor_mod(rho.at(sigma)[i] - rho_x.at(sigma)[i], modulus) != 0) {
        throw Infeasible("weight (" + std::to_string(sigma) + ", " + std::to_string(i) +
                         ") of rho_x is not congruent to rho mod d*t = " + to_decimal(modulus));
      }
    }
  }

  const auto det_rho = rho.det_exponents();
  const auto det_rho_x = rho_x.det_exponents();
  CrystCharSpec theta;
  theta.k.reserve(sigmas);
  for (std::size_t sigma = 0; sigma < sigmas; ++sigma) {
    const Integer k_eta = det_rho[sigma] - det_rho_x[sigma];
    ensure(k_eta % modulus == 0, "d*t does not divide k_sigma(eta)");
    const Integer k = k_eta / d;
    ensure(k % shape.t == 0, "chi_k is not a t-th power");
    ensure(det_rho_x[sigma] + d * k == det_rho[sigma], "det(rho_x (x) theta) != det(rho)");
    theta.k.push_back(k);
  }
  theta.uniformizer = dth_root_correction(eta, d);
  return theta;
}

}  // namespace crylift::ledger
