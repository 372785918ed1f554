#include <gtest/gtest.h>

#include "oracle.hpp"
#include "unitysum/errors.hpp"
#include "unitysum/vanishing.hpp"

namespace us = unitysum;

TEST(IsVanishing, Pentagon) {
  const auto d = us::is_vanishing(us::RootConfig(5, {0, 1, 2, 3, 4}));
  EXPECT_EQ(d.kind, us::VanishKind::kPentagon);
  ASSERT_EQ(d.parts.size(), 1u);
  EXPECT_EQ(d.parts[0], (std::vector<std::int64_t>{0, 1, 2, 3, 4}));
}

TEST(IsVanishing, TrianglePlusPair) {
  const auto d = us::is_vanishing(us::RootConfig(12, {0, 4, 8, 3, 9}));
  EXPECT_EQ(d.kind, us::VanishKind::kTrianglePlusPair);
  ASSERT_EQ(d.parts.size(), 2u);
  EXPECT_EQ(d.parts[0], (std::vector<std::int64_t>{0, 4, 8}));
  EXPECT_EQ(d.parts[1], (std::vector<std::int64_t>{3, 9}));
}

TEST(IsVanishing, NotVanishing) {
  EXPECT_EQ(us::is_vanishing(us::RootConfig(5, {0, 0, 0, 0, 0})).kind, us::VanishKind::kNotVanishing);
  EXPECT_EQ(us::is_vanishing(us::RootConfig(7, {0, 1, 2, 3, 4})).kind, us::VanishKind::kNotVanishing);
  // Right spacing, wrong n: no pentagon unless 5 | n.
  EXPECT_FALSE(us::is_vanishing(us::RootConfig(12, {0, 2, 4, 6, 8})).vanishes());
}

TEST(IsVanishing, SmallerKinds) {
  EXPECT_EQ(us::is_vanishing(us::RootConfig(8, {1, 5})).kind, us::VanishKind::kPair);
  EXPECT_EQ(us::is_vanishing(us::RootConfig(9, {2, 5, 8})).kind, us::VanishKind::kTriangle);
  EXPECT_EQ(us::is_vanishing(us::RootConfig(4, {0, 1, 2, 3})).kind, us::VanishKind::kTwoPairs);
  EXPECT_EQ(us::is_vanishing(us::RootConfig(6, {0, 3, 3, 0})).kind, us::VanishKind::kTwoPairs);
  EXPECT_FALSE(us::is_vanishing(us::RootConfig(6, {0, 2})).vanishes());
  EXPECT_FALSE(us::is_vanishing(us::RootConfig(1, {0})).vanishes());
}

TEST(IsVanishing, RejectsLargeK) {
  try {
    us::is_vanishing(us::RootConfig(6, {0, 1, 2, 3, 4, 5}));
    FAIL();
  } catch (const us::Error& e) {
    EXPECT_EQ(e.code(), us::ErrorCode::kUnsupportedK);
  }
}

TEST(IsVanishing, PartsAreVanishingSubsums) {
  for (std::int64_t n : {6, 10, 12, 30}) {
    oracle::multisets_with_zero(5, n, [&](const std::vector<std::int64_t>& a) {
      const auto d = us::is_vanishing(us::RootConfig(n, a));
      std::vector<std::int64_t> all;
      for (const auto& p : d.parts) {
        EXPECT_LT(oracle::magnitude(p, n), oracle::Float("1e-40"));
        all.insert(all.end(), p.begin(), p.end());
      }
      std::sort(all.begin(), all.end());
      if (d.vanishes()) EXPECT_EQ(all, a);
    });
  }
}

// Exhaustive agreement with the numeric zero test for every k <= 5.
class ClassifierExhaustive : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(ClassifierExhaustive, AgreesWithOracle) {
  const std::int64_t n = GetParam();
  const oracle::Table t(n);
  const oracle::Float zero("1e-40");
  for (int k = 1; k <= 5; ++k) {
    oracle::multisets_with_zero(k, n, [&](const std::vector<std::int64_t>& a) {
      oracle::Float x = 0;
      oracle::Float y = 0;
      for (auto v : a) {
        x += t.c[static_cast<std::size_t>(v)];
        y += t.s[static_cast<std::size_t>(v)];
      }
      const bool zero_sum = x * x + y * y < zero * zero;
      const us::RootConfig c(n, a);
      ASSERT_EQ(us::is_vanishing(c).vanishes(), zero_sum) << c.to_string();
      ASSERT_EQ(us::vanishes_sorted(c.angles(), n), zero_sum);
    });
  }
}

INSTANTIATE_TEST_SUITE_P(SmallN, ClassifierExhaustive, ::testing::Range<std::int64_t>(1, 31));
