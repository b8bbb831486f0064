#include "crylift/lift_builder.hpp"

#include "crylift/assign_solver.hpp"
#include "crylift/errors.hpp"
#include "crylift/induction_oracle.hpp"

#include <algorithm>
#include <functional>

namespace crylift::lift {

void LocalFieldShape::validate() const {
  if (!is_prime(p)) throw MalformedInput("p = " + to_decimal(p) + " is not prime");
  if (e < 1 || f < 1 || d < 1) throw MalformedInput("e, f, d must all be >= 1");
  if (t < 1) throw MalformedInput("t must be >= 1");
  if (t % (q() - 1) != 0) {
    throw MalformedInput("q - 1 = " + to_decimal(q() - 1) + " does not divide t = " + to_decimal(t));
  }
}

EmbeddingLayout build_layout(const LocalFieldShape& shape) {
  shape.validate();
  EmbeddingLayout layout;
  layout.shape_ = shape;
  const std::size_t f = shape.f;
  const std::size_t e = shape.e;
  const std::size_t d = shape.d;
  layout.rows_.resize(f);
  layout.cols_.resize(f);
  layout.taus_.resize(f);
  layout.pairing_.resize(e * f * d);
  for (std::size_t s = 0; s < f; ++s) {
    for (std::size_t r = 0; r < e; ++r) layout.rows_[s].push_back(layout.sigma_index(s, r));
    for (std::size_t j = 0; j < d; ++j) layout.cols_[s].push_back(layout.tau0_index(s, j));
    for (std::size_t r = 0; r < e; ++r) {
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t tau = layout.tau_index(s, r, j);
        layout.taus_[s].push_back(tau);
        layout.pairing_[tau] = {layout.sigma_index(s, r), layout.tau0_index(s, j)};
      }
    }
  }
  return layout;
}

namespace {

void require_residual_field(const ff::MultChar& theta_bar, const LocalFieldShape& shape) {
  if (theta_bar.field != shape.extension_residue_field()) {
    throw MalformedInput("residual character must live on F_" +
                         to_decimal(shape.extension_residue_field().order()));
  }
}

void require_det_length(const DetSpec& psi, const EmbeddingLayout& layout) {
  if (psi.a.size() != layout.sigma_f_count()) {
    throw MalformedInput("determinant exponents: expected " +
                         std::to_string(layout.sigma_f_count()) + " entries, got " +
                         std::to_string(psi.a.size()));
  }
}

Integer sum_over(const std::vector<Integer>& values, const std::vector<std::size_t>& indices) {
  Integer total = 0;
  for (std::size_t i : indices) total += values[i];
  return total;
}

}  // namespace

bool compat_check(const ff::MultChar& theta_bar, const DetSpec& psi, const EmbeddingLayout& layout) {
  const LocalFieldShape& shape = layout.shape();
  require_residual_field(theta_bar, shape);
  require_det_length(psi, layout);

  const Integer m = shape.p - 1;
  const auto b = ff::digits(theta_bar).digits;
  const auto c = ff::digits(ff::restrict_to(theta_bar, shape.residue_field())).digits;
  for (std::size_t s = 0; s < layout.sigma_f0_count(); ++s) {
    const Integer rows = sum_over(psi.a, layout.inertia_block(s));
    const Integer cols = sum_over(b, layout.residue_block(s));
    if (floor_mod(rows - c[s], m) != 0 || floor_mod(cols - c[s], m) != 0) return false;
  }
  return true;
}

WeightAssignment lift_theta(const ff::MultChar& theta_bar, const DetSpec& psi,
                            const LocalFieldShape& shape) {
  const EmbeddingLayout layout = build_layout(shape);
  if (!compat_check(theta_bar, psi, layout)) {
    throw Infeasible("psi and the residual character are incompatible on O_F^x");
  }

  WeightAssignment out;
  out.k.resize(layout.sigma_e_count());
  if (shape.d == 1) {
    for (std::size_t sigma = 0; sigma < layout.sigma_f_count(); ++sigma) out.k[sigma] = psi.a[sigma];
    return out;
  }

  const auto b = ff::digits(theta_bar).digits;
  const Integer m = shape.p - 1;
  Integer bound = 0;
  for (std::size_t s = 0; s < layout.sigma_f0_count(); ++s) {
    std::vector<Integer> rows;
    std::vector<Integer> cols;
    for (std::size_t sigma : layout.inertia_block(s)) rows.push_back(psi.a[sigma]);
    for (std::size_t tau0 : layout.residue_block(s)) cols.push_back(b[tau0]);

    const auto x = assign::regular_transport(rows, cols, m, bound).entries;
    for (std::size_t r = 0; r < shape.e; ++r) {
      for (std::size_t j = 0; j < shape.d; ++j) {
        out.k[layout.tau_index(s, r, j)] = x(r, j);
        bound = std::max(bound, crylift::abs(x(r, j)));
      }
    }
  }
  return out;
}

InducedWeights induce_weights(const WeightAssignment& k, const EmbeddingLayout& layout) {
  InducedWeights out;
  out.per_sigma.resize(layout.sigma_f_count());
  for (std::size_t tau = 0; tau < layout.pairing().size() && tau < k.k.size(); ++tau) {
    out.per_sigma[layout.pairing()[tau].sigma].push_back(k.k[tau]);
  }
  for (auto& weights : out.per_sigma) {
    std::sort(weights.begin(), weights.end(), std::greater<>());
    if (std::adjacent_find(weights.begin(), weights.end()) != weights.end()) out.regular = false;
  }
  return out;
}

bool blocks_separated(const WeightAssignment& k, const EmbeddingLayout& layout) {
  for (std::size_t s = 0; s + 1 < layout.sigma_f0_count(); ++s) {
    Integer previous_max = 0;
    for (std::size_t tau : layout.tau_block(s)) previous_max = std::max(previous_max, crylift::abs(k.k[tau]));
    for (std::size_t tau : layout.tau_block(s + 1)) {
      if (crylift::abs(k.k[tau]) <= previous_max) return false;
    }
  }
  return true;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "n/a";
  }
  return "fail";
}

CheckStatus check_status_from_string(const std::string& text) {
  if (text == "pass") return CheckStatus::kPass;
  if (text == "fail") return CheckStatus::kFail;
  if (text == "n/a") return CheckStatus::kNotApplicable;
  throw MalformedInput("unknown check status '" + text + "'");
}

LiftCertificate irr_crys_lift(const ff::MultChar& theta_bar, const DetSpec& psi,
                              const LocalFieldShape& shape) {
  LiftCertificate cert;
  cert.shape = shape;
  cert.layout = build_layout(shape);
  cert.theta_bar = theta_bar;
  cert.psi = psi;
  cert.weights = lift_theta(theta_bar, psi, shape);

  const EmbeddingLayout& layout = cert.layout;
  const bool degenerate = shape.d == 1;
  const int twist = induction::cycle_sign(shape.d);
  const UnitExpr twist_unit = twist == 1 ? UnitExpr::one() : UnitExpr::minus_one();
  cert.theta_uniformizer = twist_unit * psi.uniformizer;

  auto status = [](bool ok) { return ok ? CheckStatus::kPass : CheckStatus::kFail; };
  const auto& k = cert.weights.k;

  std::vector<Integer> sorted = k;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  std::vector<Integer> by_sigma(layout.sigma_f_count());
  std::vector<Integer> by_tau0(layout.sigma_e0_count());
  for (std::size_t tau = 0; tau < k.size(); ++tau) {
    by_sigma[layout.pairing()[tau].sigma] += k[tau];
    by_tau0[layout.pairing()[tau].tau0] += k[tau];
  }
  const auto b = ff::digits(theta_bar).digits;
  bool lifts = true;
  for (std::size_t u = 0; u < by_tau0.size(); ++u) {
    lifts = lifts && floor_mod(by_tau0[u] - b[u], shape.p - 1) == 0;
  }

  const UnitExpr det_at_uniformizer = twist_unit * cert.theta_uniformizer;

  cert.checks = {
      {kCheckCompat, status(compat_check(theta_bar, psi, layout))},
      {kCheckDistinct, degenerate ? CheckStatus::kNotApplicable : status(distinct)},
      {kCheckLiftsResidual, degenerate ? CheckStatus::kNotApplicable : status(lifts)},
      {kCheckRestriction, status(by_sigma == psi.a)},
      {kCheckUniformizer, status(cert.theta_uniformizer == twist_unit * psi.uniformizer)},
      {kCheckDeterminant, status(det_at_uniformizer == psi.uniformizer)},
      {kCheckRegular, status(induce_weights(cert.weights, layout).regular)},
      {kCheckBlockSeparation,
       degenerate ? CheckStatus::kNotApplicable : status(blocks_separated(cert.weights, layout))},
  };
  for (const auto& check : cert.checks) {
    ensure(check.status != CheckStatus::kFail, "lift certificate check '" + check.id + "' failed");
  }
  cert.hypotheses = {kHypothesisResidualUniformizer};
  return cert;
}

}  // namespace crylift::lift
