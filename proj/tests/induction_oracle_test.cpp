#include "crylift/errors.hpp"
#include "crylift/ff_chars.hpp"
#include "crylift/induction_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

namespace crylift::induction {
namespace {

// rho(phi^j h) f_i = theta(h q^i) f_{i+j}, straight from phi^j h phi^i = phi^{i+j} h^{q^i}.
MonomialMatrix oracle_matrix(const FrobeniusModel& g, std::int64_t b, const GroupElement& x) {
  MonomialMatrix m;
  std::int64_t qi = 1;
  for (std::uint32_t i = 0; i < g.d; ++i) {
    m.perm.push_back((i + x.frob) % g.d);
    m.exps.push_back(static_cast<std::int64_t>((__int128)b * x.h % g.modulus * qi % g.modulus));
    qi = qi * g.q % g.modulus;
  }
  return m;
}

int inversion_sign(const std::vector<std::uint32_t>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
  return inv % 2 ? -1 : 1;
}

Determinant oracle_det(const MonomialMatrix& m, std::int64_t modulus) {
  std::int64_t e = 0;
  for (auto x : m.exps) e = (e + x) % modulus;
  int sign = inversion_sign(m.perm);
  if (m.dim() % 2 == 1) sign *= m.sign;
  return {sign, e};
}

TEST(Permutation, SignMatchesInversionCount) {
  std::vector<std::uint32_t> perm{0, 1, 2, 3, 4, 5};
  do {
    ASSERT_EQ(permutation_sign(perm), inversion_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::uint32_t d = 1; d < 10; ++d) EXPECT_EQ(cycle_sign(d), d % 2 ? 1 : -1);
}

TEST(Model, Validation) {
  EXPECT_THROW(FrobeniusModel::make(1, 2), MalformedInput);
  EXPECT_THROW(FrobeniusModel::make(2, 0), MalformedInput);
  EXPECT_THROW(FrobeniusModel::make(10, 7, 1000), MalformedInput);
  const auto g = FrobeniusModel::make(3, 2);
  EXPECT_EQ(g.modulus, 8);
  EXPECT_EQ(g.group_order(), 16u);
  EXPECT_THROW(MonomialRep::induce(g, 8), MalformedInput);
  EXPECT_THROW(MonomialRep::induce(g, -1), MalformedInput);
}

TEST(Induce, ThreeSquaredExample) {
  const auto g = FrobeniusModel::make(3, 2);
  const auto rho = MonomialRep::induce(g, 1);
  for (std::int64_t h = 0; h < 8; ++h) {
    const auto m = rho.of_subgroup(h);
    EXPECT_EQ(m.exps, (std::vector<std::int64_t>{h, 3 * h % 8}));
    EXPECT_EQ(det_of(rho, {0, h}), (Determinant{1, 4 * h % 8}));
  }
  EXPECT_EQ(det_of(rho, {1, 0}), (Determinant{-1, 0}));
  EXPECT_TRUE(verify_det_induction(g, 1).ok());
}

TEST(Induce, TwoCubedExample) {
  const auto g = FrobeniusModel::make(2, 3);
  EXPECT_EQ(ff::norm_exponent(2, 3) % g.modulus, 0);
  const auto rho = MonomialRep::induce(g, 1);
  for (std::int64_t h = 0; h < 7; ++h) EXPECT_EQ(det_of(rho, {0, h}), (Determinant{1, 0}));
  EXPECT_EQ(det_of(rho, {1, 0}).sign, 1);
  EXPECT_TRUE(verify_det_induction(g, 1).ok());
}

TEST(Induce, DegenerateCases) {
  const auto g1 = FrobeniusModel::make(5, 1);
  const auto rho1 = MonomialRep::induce(g1, 3);
  EXPECT_EQ(rho1.of({0, 2}).exps, std::vector<std::int64_t>{6 % 4});
  EXPECT_TRUE(verify_det_induction(g1, 3).ok());

  const auto g = FrobeniusModel::make(4, 3);
  const auto rho0 = MonomialRep::induce(g, 0);
  for (std::uint64_t i = 0; i < g.group_order(); i += 7)
    for (auto x : rho0.of(element_at(g, i)).exps) EXPECT_EQ(x, 0);
}

TEST(Induce, DiagonalDeterminantIsSumOfExponents) {
  MonomialMatrix m{{0, 1, 2}, {3, 4, 5}, 1};
  EXPECT_EQ(determinant(m, 7), (Determinant{1, 5}));
}

struct SmallModel {
  std::int64_t q;
  std::uint32_t d;
};

// Every model here has |G| <= 2000 so all pairs are enumerated.
const SmallModel kFull[] = {{3, 2}, {2, 3}, {5, 2}, {2, 4}, {3, 3}, {4, 2}, {7, 2}, {2, 5},
                            {9, 2}, {2, 6}, {5, 3}, {4, 3}, {3, 4}, {8, 2}, {2, 1}, {7, 1}};

TEST(Induce, MatchesDefinitionOnEveryElement) {
  for (const auto [q, d] : kFull) {
    const auto g = FrobeniusModel::make(q, d);
    for (std::int64_t b : {std::int64_t{0}, std::int64_t{1}, g.modulus - 1, g.modulus / 2}) {
      b %= g.modulus;
      const auto rho = MonomialRep::induce(g, b);
      for (std::uint64_t i = 0; i < g.group_order(); ++i) {
        const auto x = element_at(g, i);
        const auto m = rho.of(x);
        ASSERT_EQ(m.sign, 1);
        ASSERT_EQ(m, oracle_matrix(g, b, x)) << q << " " << d << " " << b << " " << i;
        ASSERT_EQ(det_of(rho, x), oracle_det(m, g.modulus));
      }
    }
  }
}

TEST(Induce, HomomorphismAndDeterminantMultiplicativityFullEnumeration) {
  for (const auto [q, d] : kFull) {
    const auto g = FrobeniusModel::make(q, d);
    const std::int64_t b = (g.modulus * 5 / 7) % g.modulus;
    const auto rho = MonomialRep::induce(g, b);
    const auto n = g.group_order();
    std::vector<MonomialMatrix> mats;
    std::vector<GroupElement> elems;
    for (std::uint64_t i = 0; i < n; ++i) {
      elems.push_back(element_at(g, i));
      mats.push_back(rho.of(elems.back()));
    }
    MonomialMatrix prod;
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) {
        multiply_into(mats[i], mats[j], g.modulus, prod);
        const auto xy = multiply(g, elems[i], elems[j]);
        ASSERT_EQ(prod, rho.of(xy));
        const auto di = det_of(rho, elems[i]), dj = det_of(rho, elems[j]), dxy = det_of(rho, xy);
        ASSERT_EQ(dxy.sign, di.sign * dj.sign);
        ASSERT_EQ(dxy.exponent, (di.exponent + dj.exponent) % g.modulus);
      }
    }
  }
}

TEST(Induce, HomomorphismSpotCheckLargerModels) {
  std::mt19937_64 rng(17);
  for (const auto [q, d] : {SmallModel{3, 6}, SmallModel{7, 4}, SmallModel{9, 4}, SmallModel{8, 5}}) {
    const auto g = FrobeniusModel::make(q, d);
    const auto rho = MonomialRep::induce(g, static_cast<std::int64_t>(rng() % g.modulus));
    for (int it = 0; it < 20000; ++it) {
      const auto x = element_at(g, rng() % g.group_order());
      const auto y = element_at(g, rng() % g.group_order());
      ASSERT_EQ(multiply(rho.of(x), rho.of(y), g.modulus), rho.of(multiply(g, x, y)));
    }
  }
}

TEST(Model, FrobeniusHasOrderD) {
  for (const auto [q, d] : kFull) {
    const auto g = FrobeniusModel::make(q, d);
    EXPECT_EQ(power(g, {1 % d, 0}, d), (GroupElement{0, 0}));
    const auto rho = MonomialRep::induce(g, 1 % g.modulus);
    auto m = identity_matrix(d);
    for (std::uint32_t i = 0; i < d; ++i) m = multiply(m, rho.frobenius(), g.modulus);
    EXPECT_EQ(m, identity_matrix(d));
  }
}

TEST(VerifyDetInduction, AllCharactersOnSmallModels) {
  for (const auto [q, d] : kFull) {
    const auto g = FrobeniusModel::make(q, d);
    for (std::int64_t b = 0; b < g.modulus; ++b) {
      const auto report = verify_det_induction(g, b);
      ASSERT_TRUE(report.ok()) << q << " " << d << " " << b;
      ASSERT_EQ(report.subgroup_checks, static_cast<std::uint64_t>(g.modulus));
      ASSERT_GT(report.generator_checks, 0u);
    }
  }
}

}  // namespace
}  // namespace crylift::induction
