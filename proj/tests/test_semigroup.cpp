#include <gtest/gtest.h>

#include <random>

#include "numsg/semigroup.hpp"
#include "oracles.hpp"

using namespace numsg;

namespace {

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::io_error;
}

}  // namespace

TEST(Semigroup, MinimalizesAndKeepsRawInput) {
  const auto s = Semigroup::make({9, 4, 6, 8, 12});
  EXPECT_EQ(s.generators(), (std::vector<std::int64_t>{4, 6, 9}));
  EXPECT_EQ(s.raw_generators(), (std::vector<std::int64_t>{4, 6, 8, 9, 12}));
  EXPECT_EQ(s.edim(), 3u);
  EXPECT_EQ(s.multiplicity(), 4);
}

TEST(Semigroup, RejectsInvalidInput) {
  EXPECT_EQ(code_of([] { Semigroup::make(std::span<const std::int64_t>{}); }), errc::empty_input);
  EXPECT_EQ(code_of([] { Semigroup::make({1, 5}); }), errc::domain_error);
  EXPECT_EQ(code_of([] { Semigroup::make({4, 6}); }), errc::gcd_not_one);
  EXPECT_EQ(code_of([] { Semigroup::make({3, 10'000'001}); }), errc::value_too_large);
  EXPECT_EQ(code_of([] { Semigroup::make({8, 9, 10, 11, 12, 13, 14}); }), errc::edim_too_large);
}

TEST(Semigroup, SevenRawGeneratorsCollapsingToSixAreAccepted) {
  const auto s = Semigroup::make({7, 9, 11, 12, 13, 15, 18});
  EXPECT_EQ(s.edim(), 6u);
}

TEST(Semigroup, AperySetOfInnerV5Base) {
  const auto s = Semigroup::make({6, 10, 14, 15, 19});
  const auto ap = apery_set(s, 6);
  EXPECT_EQ(ap.values, (std::vector<std::int64_t>{0, 19, 14, 15, 10, 29}));
  EXPECT_EQ(ap.max() - 6, 23);
  EXPECT_EQ(frobenius(s), 23);
}

TEST(Semigroup, AperySetForOtherModulus) {
  const auto s = Semigroup::make({3, 5});
  const auto ap = apery_set(s, 5);
  EXPECT_EQ(ap.values, (std::vector<std::int64_t>{0, 6, 12, 3, 9}));
  EXPECT_EQ(code_of([&] { apery_set(s, 7); }), errc::modulus_not_in_semigroup);
  EXPECT_EQ(code_of([&] { apery_set(s, 0); }), errc::modulus_not_in_semigroup);
}

TEST(Semigroup, SmallExamples) {
  const auto two_three = Semigroup::make({3, 5});
  EXPECT_EQ(frobenius(two_three), 7);
  EXPECT_EQ(genus(two_three), 4);
  EXPECT_TRUE(is_symmetric(two_three));

  const auto interval = Semigroup::make({6, 7, 8, 9, 10, 11});
  EXPECT_EQ(frobenius(interval), 5);
  EXPECT_EQ(genus(interval), 5);
  EXPECT_FALSE(is_symmetric(interval));

  const auto v1 = Semigroup::make({7, 9, 11, 12, 13, 15});
  EXPECT_EQ(frobenius(v1), 17);
  EXPECT_TRUE(is_symmetric(v1));
  EXPECT_EQ(2 * genus(v1), frobenius(v1) + 1);
  EXPECT_FALSE(contains(v1, 17));
  EXPECT_TRUE(contains(v1, 18));
  EXPECT_EQ(to_string(v1), "<7,9,11,12,13,15>");
}

TEST(Semigroup, ProductOfGenerators) {
  const auto v1 = Semigroup::make({7, 9, 11, 12, 13, 15});
  EXPECT_TRUE(v1.pi() == u128{1621620});
  EXPECT_DOUBLE_EQ(v1.pi_real(), 1621620.0);
}

TEST(SemigroupProperty, AperyPipelineMatchesBruteForce) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const auto raw = oracle::random_generators(rng, 1, 6, 40);
    if (*std::min_element(raw.begin(), raw.end()) < 2) continue;
    const auto s = Semigroup::make(raw);
    const auto brute = oracle::gaps(s.generators());
    const auto in = oracle::members(raw, 400);
    SCOPED_TRACE(to_string(s));
    for (std::int64_t x = 0; x <= 400; ++x) ASSERT_EQ(s.contains(x), in[static_cast<std::size_t>(x)]) << x;
    EXPECT_EQ(frobenius(s), brute.frobenius);
    EXPECT_EQ(genus(s), brute.genus);
    EXPECT_EQ(is_symmetric(s), oracle::symmetric(s.generators()));
  }
}

TEST(SemigroupProperty, MinimalGeneratorsAreNotRedundant) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = Semigroup::make(oracle::random_generators(rng, 2, 6, 40));
    const auto& g = s.generators();
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<std::int64_t> others;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (j != i) others.push_back(g[j]);
      }
      EXPECT_FALSE(oracle::members(others, g[i])[static_cast<std::size_t>(g[i])]) << to_string(s);
    }
  }
}
