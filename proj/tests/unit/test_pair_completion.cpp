#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "unitysum/errors.hpp"
#include "unitysum/pair_completion.hpp"
#include "unitysum/search.hpp"

namespace us = unitysum;

namespace {

using C = std::complex<double>;

C root(std::int64_t a, std::int64_t n) { return std::polar(1.0, 2.0 * std::numbers::pi * a / n); }

std::vector<C> grid() {
  std::vector<C> out;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 40; ++j) out.push_back(std::polar(3.2 * i / 4.0, 2.0 * std::numbers::pi * (j + 0.3) / 40.0));
  }
  return out;
}

}  // namespace

TEST(CompletePair, AlignedPairAtTwo) {
  // (4, 4) gives 2 - 1 - 1 = 0; the best nonzero completion is (3, 5).
  const auto list = us::complete_pair(C(2.0, 0.0), 8, 2);
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].u, 4);
  EXPECT_EQ(list[0].v, 4);
  EXPECT_LT(list[0].total, 1e-15);
  EXPECT_EQ(list[1].u, 3);
  EXPECT_EQ(list[1].v, 5);
  EXPECT_NEAR(list[1].total, 4 * std::pow(std::sin(std::numbers::pi / 8), 2), 1e-15);

  const auto ctx = us::complete_pair(us::RootConfig(8, {0, 0}), 2);
  EXPECT_TRUE(ctx[0].vanishing);
  EXPECT_FALSE(ctx[1].vanishing);
}

TEST(CompletePair, ZeroTargetGivesAntipodesThenF2) {
  const auto list = us::complete_pair(C(0.0, 0.0), 6, 4);
  EXPECT_EQ(list[0].v - list[0].u, 3);
  EXPECT_LT(list[0].total, 1e-15);
  const auto full = us::complete_pair(C(0.0, 0.0), 6, 8);
  double first_nonzero = -1;
  for (const auto& c : full) {
    if (c.total > 1e-12) {
      first_nonzero = c.total;
      break;
    }
  }
  EXPECT_NEAR(first_nonzero, 1.0, 1e-15);
}

TEST(CompletePair, PentagonContext) {
  const auto list = us::complete_pair(us::RootConfig(5, {0, 2, 3}), 2);
  EXPECT_EQ(list[0].u, 1);
  EXPECT_EQ(list[0].v, 4);
  EXPECT_TRUE(list[0].vanishing);
  EXPECT_GT(list[1].total, 1e-12);
  EXPECT_FALSE(list[1].vanishing);
}

TEST(CompletePair, MatchesOracleSmallExamples) {
  const C y = -1.9 * root(1, 7);
  EXPECT_EQ(us::complete_pair(y, 7, 3), us::complete_pair_oracle(y, 7, 3));
  for (const C& p : grid()) EXPECT_EQ(us::complete_pair(p, 12, 4), us::complete_pair_oracle(p, 12, 4));
}

TEST(CompletePair, OracleMatchesDirectScan) {
  // The oracle itself against a plain loop with std::polar roots.
  for (std::int64_t n : {5, 13, 40}) {
    for (const C& y : grid()) {
      const auto o = us::complete_pair_oracle(y, n, 8);
      std::vector<double> all;
      for (std::int64_t u = 0; u < n; ++u) {
        for (std::int64_t v = u; v < n; ++v) all.push_back(std::abs(y + root(u, n) + root(v, n)));
      }
      std::sort(all.begin(), all.end());
      for (std::size_t i = 0; i < o.size(); ++i) ASSERT_NEAR(o[i].total, all[i], 1e-13);
    }
  }
}

TEST(CompletePair, GridEquivalenceAndWidening) {
  const auto g = grid();
  for (std::int64_t n = 2; n <= 120; ++n) {
    const us::PairCompleter pc(n);
    for (const C& y : g) {
      const auto oracle = us::complete_pair_oracle(y, n, 8);
      for (int m : {1, 4, 8}) {
        const auto fast = pc.best(y, m);
        ASSERT_EQ(fast.size(), std::min<std::size_t>(static_cast<std::size_t>(m), oracle.size()));
        for (std::size_t i = 0; i < fast.size(); ++i) ASSERT_EQ(fast[i], oracle[i]) << "n=" << n << " y=" << y;
        ASSERT_EQ(pc.best(y, m, 3), fast);
      }
    }
  }
}

TEST(CompletePair, ConjugateSymmetry) {
  for (std::int64_t n : {7, 30, 101}) {
    for (const C& y : grid()) {
      const auto a = us::complete_pair(y, n, 8);
      const auto b = us::complete_pair(std::conj(y), n, 8);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_NEAR(a[i].total, b[i].total, 1e-13);
      }
      // The best reflected pair of y is a pair for conj(y) with the same total.
      const std::int64_t u = (n - a[0].v) % n;
      const std::int64_t v = (n - a[0].u) % n;
      const us::PairCompleter pc(n);
      ASSERT_NEAR(pc.total(std::conj(y), std::min(u, v), std::max(u, v)), b[0].total, 1e-13);
    }
  }
}

TEST(CompletePair, ScanVisitsEveryPairUnderThreshold) {
  const us::PairCompleter pc(50);
  for (const C& y : grid()) {
    for (double tau : {0.01, 0.2, 1.0}) {
      std::size_t seen = 0;
      pc.scan(y, tau, [&](std::int64_t, std::int64_t, double) { ++seen; });
      std::size_t expect = 0;
      for (std::int64_t u = 0; u < 50; ++u) {
        for (std::int64_t v = u; v < 50; ++v) expect += pc.total(y, u, v) <= tau;
      }
      ASSERT_EQ(seen, expect);
    }
  }
}

TEST(CompletePair, Errors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const us::Error& e) {
      return e.code();
    }
    return us::ErrorCode::kIo;
  };
  EXPECT_EQ(code([] { us::complete_pair(C(1, 0), 10, 0); }), us::ErrorCode::kInvalidArgument);
  EXPECT_EQ(code([] { us::complete_pair(C(1, 0), 10, 33); }), us::ErrorCode::kInvalidArgument);
  EXPECT_EQ(code([] { us::complete_pair(C(NAN, 0), 10, 1); }), us::ErrorCode::kInvalidArgument);
  EXPECT_EQ(code([] { us::complete_pair_oracle(C(1, 0), 5001, 1); }), us::ErrorCode::kOracleTooLarge);
  EXPECT_EQ(code([] { us::complete_pair(us::RootConfig(9, {0, 1, 2, 3}), 1); }), us::ErrorCode::kUnsupportedK);
}

TEST(CompletePair, ShortListForTinyN) {
  // n = 2 has three unordered pairs only.
  EXPECT_EQ(us::complete_pair(C(0.5, 0.1), 2, 8).size(), 3u);
}
