#include "crylift/errors.hpp"
#include "crylift/ff_chars.hpp"

#include <gtest/gtest.h>

#include <map>
#include <vector>

namespace crylift::ff {
namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// Every (p, f) with p^f <= limit.
std::vector<FiniteFieldSpec> small_fields(std::uint64_t limit) {
  std::vector<FiniteFieldSpec> out;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t order = p;
    for (std::uint32_t f = 1; order <= limit; ++f, order *= p) out.push_back({p, f});
  }
  return out;
}

// Multiplicative group of F_q modeled as Z/(q-1) under a fixed generator g:
// the element g^h. x^n has exponent n*h.
std::int64_t power_exponent(std::int64_t h, const Integer& n, std::int64_t group) {
  return static_cast<std::int64_t>((Integer(h) * n % group).convert_to<std::int64_t>());
}

TEST(Digits, Examples) {
  EXPECT_EQ(digits(MultChar::make({3, 2}, 5)).digits, ints({2, 1}));
  EXPECT_EQ(digits(MultChar::make({5, 1}, 0)).digits, ints({0}));
  EXPECT_EQ(digits(MultChar::make({2, 3}, 6)).digits, ints({0, 1, 1}));
}

TEST(Digits, RejectsNonCanonicalExponent) {
  const FiniteFieldSpec f9{3, 2};
  EXPECT_THROW(digits(MultChar{f9, 8}), MalformedInput);
  EXPECT_THROW(digits(MultChar{f9, -1}), MalformedInput);
  EXPECT_THROW(MultChar::make(f9, 8), MalformedInput);
}

TEST(FromDigits, Examples) {
  EXPECT_EQ(from_digits({3, ints({2, 1})}, {3, 2}).exponent, 5);
  EXPECT_EQ(from_digits({3, ints({0, 0})}, {3, 2}).exponent, 0);
  EXPECT_THROW(from_digits({2, ints({1, 1})}, {2, 2}), MalformedInput);
}

TEST(FromDigits, RejectsBadVectors) {
  EXPECT_THROW(from_digits({3, ints({3, 0})}, {3, 2}), MalformedInput);
  EXPECT_THROW(from_digits({3, ints({-1, 0})}, {3, 2}), MalformedInput);
  EXPECT_THROW(from_digits({3, ints({1})}, {3, 2}), MalformedInput);
  EXPECT_THROW(from_digits({5, ints({1, 1})}, {3, 2}), MalformedInput);
}

TEST(FiniteFieldSpec, Validation) {
  EXPECT_THROW(FiniteFieldSpec::make(4, 1), MalformedInput);
  EXPECT_THROW(FiniteFieldSpec::make(3, 0), MalformedInput);
  EXPECT_EQ(FiniteFieldSpec::make(7, 3).order(), 343);
}

TEST(Digits, RoundTripAndUniquenessExhaustive) {
  for (const auto& field : small_fields(1U << 12)) {
    const auto q = field.order().convert_to<std::int64_t>();
    // Brute-force uniqueness: enumerate every canonical digit vector once and
    // record which exponent it produces.
    std::map<std::int64_t, int> hits;
    std::vector<std::int64_t> vec(field.f, 0);
    const auto p = field.p.convert_to<std::int64_t>();
    for (;;) {
      bool all_top = true;
      std::int64_t value = 0;
      for (std::size_t i = field.f; i-- > 0;) {
        value = value * p + vec[i];
        all_top = all_top && vec[i] == p - 1;
      }
      if (!all_top) ++hits[value];
      std::size_t i = 0;
      while (i < vec.size() && ++vec[i] == p) vec[i++] = 0;
      if (i == vec.size()) break;
    }
    ASSERT_EQ(static_cast<std::int64_t>(hits.size()), q - 1) << "p=" << field.p << " f=" << field.f;
    for (std::int64_t b = 0; b <= q - 2; ++b) {
      ASSERT_EQ(hits[b], 1);
      const auto c = MultChar::make(field, b);
      ASSERT_EQ(from_digits(digits(c), field), c);
    }
  }
}

TEST(Digits, EvaluationAgreesAtGenerator) {
  // chi(g^h) via b directly versus via prod_i sigma_i(g^h)^{b_i} with
  // sigma_i(x) = sigma_0(x^{p^i}).
  for (const auto& field : small_fields(1U << 10)) {
    const auto group = field.group_order().convert_to<std::int64_t>();
    for (std::int64_t b = 0; b < group; ++b) {
      const auto d = digits(MultChar::make(field, b)).digits;
      for (std::int64_t h : {std::int64_t{1}, group / 2, group - 1}) {
        std::int64_t via_digits = 0;
        Integer frob = 1;
        for (const Integer& digit : d) {
          via_digits = (via_digits + power_exponent(power_exponent(h, frob, group), digit, group)) % group;
          frob *= field.p;
        }
        ASSERT_EQ(via_digits, power_exponent(h, b, group));
      }
    }
  }
}

TEST(Restrict, Examples) {
  EXPECT_EQ(restrict_to(MultChar::make({3, 2}, 5), {3, 1}).exponent, 1);
  EXPECT_EQ(restrict_to(MultChar::make({3, 2}, 0), {3, 1}).exponent, 0);
  EXPECT_EQ(restrict_to(MultChar::make({2, 4}, 3), {2, 2}).exponent, 0);
}

TEST(Restrict, RejectsIncompatibleFields) {
  const auto c = MultChar::make({3, 2}, 5);
  EXPECT_THROW(restrict_to(c, {5, 1}), MalformedInput);
  EXPECT_THROW(restrict_to(MultChar::make({2, 3}, 1), {2, 2}), MalformedInput);
}

TEST(Restrict, ExhaustiveOnSubfieldElements) {
  // The subfield F_q sits in F_{q^d}^x as the powers of g^{(q^d-1)/(q-1)}.
  for (const auto& big : small_fields(1U << 10)) {
    for (std::uint32_t f = 1; f <= big.f; ++f) {
      if (big.f % f != 0) continue;
      const FiniteFieldSpec sub{big.p, f};
      const auto big_group = big.group_order().convert_to<std::int64_t>();
      const auto sub_group = sub.group_order().convert_to<std::int64_t>();
      const std::int64_t embed = big_group / sub_group;
      for (std::int64_t b = 0; b < big_group; ++b) {
        const auto r = restrict_to(MultChar::make(big, b), sub);
        for (std::int64_t y = 0; y < sub_group; ++y) {
          // x = gen_sub^y = g^{embed*y}; chi(x) as an exponent of g, and the
          // restricted character's value lifted back through the embedding.
          ASSERT_EQ((b * embed * y) % big_group, (r.exponent.convert_to<std::int64_t>() * y % sub_group) * embed);
        }
      }
    }
  }
}

TEST(NormExponent, Examples) {
  EXPECT_EQ(norm_exponent(3, 2), 4);
  EXPECT_EQ(norm_exponent(2, 3), 7);
  EXPECT_EQ(norm_exponent(5, 1), 1);
  EXPECT_EQ(norm_exponent(1000003, 40) * (Integer(1000003) - 1), ipow(1000003, 40) - 1);
}

}  // namespace
}  // namespace crylift::ff
