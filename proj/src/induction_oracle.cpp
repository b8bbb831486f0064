#include "crylift/induction_oracle.hpp"

#include "crylift/errors.hpp"
#include "crylift/ff_chars.hpp"

#include <numeric>

namespace crylift::induction {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  if (m <= 3'037'000'499) return a * b % m;  // a, b < m: the product fits
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t addmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const std::int64_t s = a + b;
  return s >= m ? s - m : s;
}

// (-1)^{n - #cycles}
inline int sign_of(const std::uint32_t* perm, std::size_t n) {
  std::size_t cycles = 0;
  if (n <= 64) {
    std::uint64_t seen = 0;
    for (std::size_t start = 0; start < n; ++start) {
      if (seen >> start & 1U) continue;
      ++cycles;
      for (std::size_t i = start; !(seen >> i & 1U); i = perm[i]) seen |= std::uint64_t{1} << i;
    }
  } else {
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (std::size_t i = start; !seen[i]; i = perm[i]) seen[i] = true;
    }
  }
  return ((n - cycles) % 2 == 0) ? 1 : -1;
}

// `out` must already have the right dimension.
inline void product(const MonomialMatrix& a, const MonomialMatrix& b, std::int64_t modulus, MonomialMatrix& out,
                    std::size_t d) {
  const std::uint32_t* __restrict a_perm = a.perm.data();
  const std::uint32_t* __restrict b_perm = b.perm.data();
  const std::int64_t* __restrict a_exps = a.exps.data();
  const std::int64_t* __restrict b_exps = b.exps.data();
  std::uint32_t* __restrict out_perm = out.perm.data();
  std::int64_t* __restrict out_exps = out.exps.data();
  // b sends column i to row b.perm[i]; a then sends that to a.perm[b.perm[i]].
  for (std::size_t i = 0; i < d; ++i) {
    const std::uint32_t mid = b_perm[i];
    out_perm[i] = a_perm[mid];
    out_exps[i] = addmod(a_exps[mid], b_exps[i], modulus);
  }
  out.sign = a.sign * b.sign;
}

inline Determinant det(const MonomialMatrix& m, std::int64_t modulus, std::size_t d) {
  Determinant out;
  out.sign = sign_of(m.perm.data(), d);
  if (m.sign == -1 && d % 2 == 1) out.sign = -out.sign;
  for (std::size_t i = 0; i < d; ++i) out.exponent = addmod(out.exponent, m.exps[i], modulus);
  return out;
}

inline GroupElement group_product(const FrobeniusModel& g, const GroupElement& x, const GroupElement& y) {
  // phi^{j1} h1 phi^{j2} h2 = phi^{j1+j2} (phi^{-j2} h1 phi^{j2}) h2 = phi^{j1+j2} h1^{q^{j2}} h2
  const std::uint32_t frob = x.frob + y.frob;
  return {frob >= g.d ? frob - g.d : frob, addmod(mulmod(x.h, g.q_powers[y.frob], g.modulus), y.h, g.modulus)};
}

inline GroupElement group_power(const FrobeniusModel& g, GroupElement base, std::uint64_t n) {
  GroupElement result{0, 0};
  while (n > 0) {
    if (n & 1U) result = group_product(g, result, base);
    n >>= 1U;
    if (n > 0) base = group_product(g, base, base);
  }
  return result;
}

}  // namespace

int permutation_sign(std::span<const std::uint32_t> perm) { return sign_of(perm.data(), perm.size()); }

int cycle_sign(std::uint32_t d) {
  std::vector<std::uint32_t> cycle(d);
  for (std::uint32_t i = 0; i < d; ++i) cycle[i] = (i + 1) % d;
  return permutation_sign(cycle);
}

FrobeniusModel FrobeniusModel::make(std::int64_t q, std::uint32_t d, std::int64_t max_modulus) {
  if (q < 2) throw MalformedInput("model needs q >= 2");
  if (d < 1) throw MalformedInput("model needs d >= 1");
  const Integer m = ipow(q, d) - 1;
  if (m > max_modulus) {
    throw MalformedInput("q^d - 1 = " + to_decimal(m) + " exceeds the enumeration cap " +
                         std::to_string(max_modulus));
  }
  if (m > (std::int64_t{1} << 40)) throw MalformedInput("q^d - 1 too large for the finite model");
  FrobeniusModel model;
  model.q = q;
  model.d = d;
  model.modulus = m.convert_to<std::int64_t>();
  ensure(std::gcd(q, model.modulus) == 1, "q not coprime to q^d - 1");
  model.q_powers.resize(d);
  std::int64_t power = 1 % model.modulus;
  for (std::uint32_t j = 0; j < d; ++j) {
    model.q_powers[j] = power;
    power = mulmod(power, q % model.modulus, model.modulus);
  }
  return model;
}

GroupElement multiply(const FrobeniusModel& g, const GroupElement& x, const GroupElement& y) {
  return group_product(g, x, y);
}

GroupElement power(const FrobeniusModel& g, const GroupElement& x, std::uint64_t n) {
  return group_power(g, x, n);
}

GroupElement element_at(const FrobeniusModel& g, std::uint64_t index) {
  const auto m = static_cast<std::uint64_t>(g.modulus);
  return {static_cast<std::uint32_t>(index / m), static_cast<std::int64_t>(index % m)};
}

MonomialMatrix identity_matrix(std::uint32_t d) {
  MonomialMatrix out;
  out.perm.resize(d);
  std::iota(out.perm.begin(), out.perm.end(), 0U);
  out.exps.assign(d, 0);
  return out;
}

void multiply_into(const MonomialMatrix& a, const MonomialMatrix& b, std::int64_t modulus,
                   MonomialMatrix& out) {
  out.perm.resize(b.dim());
  out.exps.resize(b.dim());
  product(a, b, modulus, out, b.dim());
}

MonomialMatrix multiply(const MonomialMatrix& a, const MonomialMatrix& b, std::int64_t modulus) {
  ensure(a.dim() == b.dim(), "monomial dimension mismatch");
  MonomialMatrix out;
  multiply_into(a, b, modulus, out);
  return out;
}

Determinant determinant(const MonomialMatrix& m, std::int64_t modulus) { return det(m, modulus, m.dim()); }

MonomialRep MonomialRep::induce(const FrobeniusModel& model, std::int64_t b) {
  if (b < 0 || b >= model.modulus) {
    throw MalformedInput("character exponent " + std::to_string(b) + " outside [0, " +
                         std::to_string(model.modulus) + ")");
  }
  MonomialRep rep;
  rep.model_ = model;
  rep.b_ = b;
  rep.weights_.resize(model.d);
  for (std::uint32_t i = 0; i < model.d; ++i) {
    rep.weights_[i] = mulmod(b, model.q_powers[i], model.modulus);
  }
  rep.frobenius_ = identity_matrix(model.d);
  for (std::uint32_t i = 0; i < model.d; ++i) rep.frobenius_.perm[i] = (i + 1) % model.d;
  // The wrap entry is theta(phi^d) = theta(1), exponent 0.
  return rep;
}

MonomialMatrix MonomialRep::of_subgroup(std::int64_t h) const {
  MonomialMatrix out = identity_matrix(model_.d);
  for (std::uint32_t i = 0; i < model_.d; ++i) out.exps[i] = mulmod(weights_[i], h, model_.modulus);
  return out;
}

MonomialMatrix MonomialRep::of(const GroupElement& g) const {
  MonomialMatrix out = of_subgroup(g.h);
  for (std::uint32_t j = 0; j < g.frob; ++j) out = multiply(frobenius_, out, model_.modulus);
  return out;
}

Determinant det_of(const MonomialRep& rep, const GroupElement& g) {
  return determinant(rep.of(g), rep.model().modulus);
}

namespace {

// D > 0 fixes the dimension at compile time so the short loops unroll; D = 0
// reads it from the model.
template <std::uint32_t D>
DetInductionReport walk(const FrobeniusModel& model, std::int64_t b) {
  const std::size_t d = D > 0 ? D : model.d;
  const MonomialRep rep = MonomialRep::induce(model, b);
  const std::int64_t m = model.modulus;
  const std::int64_t norm =
      (ff::norm_exponent(model.q, model.d) % m).convert_to<std::int64_t>();
  const std::int64_t det_step = mulmod(b, norm, m);
  const int twist = cycle_sign(model.d);

  std::vector<std::uint32_t> generator_cosets;
  std::vector<MonomialMatrix> frob_powers;
  frob_powers.push_back(identity_matrix(model.d));
  for (std::uint32_t j = 1; j < model.d; ++j) {
    frob_powers.push_back(multiply(rep.frobenius(), frob_powers.back(), m));
  }
  for (std::uint32_t j = 0; j < model.d; ++j) {
    if (std::gcd(j, model.d) == 1) generator_cosets.push_back(j);
  }

  DetInductionReport report;
  report.q = model.q;
  report.d = model.d;
  report.b = b;
  auto record = [&](std::string identity, GroupElement g, Determinant want, Determinant got) {
    ++report.counterexample_count;
    if (report.counterexamples.size() < DetInductionReport::kMaxReported) {
      report.counterexamples.push_back({std::move(identity), g, want, got});
    }
  };

  // Walk H = <1> by repeated multiplication with rho(1).
  const MonomialMatrix step = rep.of_subgroup(1 % m);
  MonomialMatrix rho_h = identity_matrix(model.d);
  MonomialMatrix scratch = identity_matrix(model.d);
  std::int64_t norm_exponent = 0;
  for (std::int64_t h = 0; h < m; ++h) {
    const Determinant norm_want{1, norm_exponent};
    norm_exponent = addmod(norm_exponent, det_step, m);
    const Determinant norm_got = det(rho_h, m, d);
    ++report.subgroup_checks;
    if (norm_got != norm_want) record("norm", {0, h}, norm_want, norm_got);

    for (std::uint32_t j : generator_cosets) {
      const GroupElement gamma{j, h};
      product(frob_powers[j], rho_h, m, scratch, d);
      const Determinant got = det(scratch, m, d);
      const GroupElement gamma_d = group_power(model, gamma, d);
      Determinant want{twist, mulmod(b, gamma_d.h, m)};
      if (gamma_d.frob != 0) want.sign = 0;  // gamma^d must land in H
      ++report.generator_checks;
      if (got != want) record("generator", gamma, want, got);
    }

    product(rho_h, step, m, scratch, d);
    std::swap(rho_h, scratch);
  }
  return report;
}

}  // namespace

DetInductionReport verify_det_induction(const FrobeniusModel& model, std::int64_t b) {
  switch (model.d) {
    case 1: return walk<1>(model, b);
    case 2: return walk<2>(model, b);
    case 3: return walk<3>(model, b);
    case 4: return walk<4>(model, b);
    case 5: return walk<5>(model, b);
    case 6: return walk<6>(model, b);
    default: return walk<0>(model, b);
  }
}

}  // namespace crylift::induction
