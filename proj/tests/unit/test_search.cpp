#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "unitysum/closed_forms.hpp"
#include "unitysum/errors.hpp"
#include "unitysum/results_store.hpp"
#include "unitysum/search.hpp"
#include "unitysum/vanishing.hpp"

namespace us = unitysum;

namespace {

us::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const us::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return us::ErrorCode::kIo;
}

void expect_matches_oracle(const us::MinRecord& rec) {
  const oracle::Minimum ref = oracle::brute_min(rec.k, rec.n);
  const double rv = ref.value.convert_to<double>();
  EXPECT_NEAR(rec.value.approx(), rv, 1e-14 * rv) << "k=" << rec.k << " n=" << rec.n;
  EXPECT_TRUE(std::equal(rec.witness.angles().begin(), rec.witness.angles().end(), ref.witness.begin(),
                         ref.witness.end()))
      << rec.witness.to_string();
}

void expect_record_invariants(const us::MinRecord& rec) {
  ASSERT_TRUE(rec.found);
  EXPECT_GT(rec.value.approx(), 0.0);
  EXPECT_EQ(us::canonicalize(rec.witness), rec.witness);
  EXPECT_EQ(rec.witness.size(), static_cast<std::size_t>(rec.k));
  const us::Magnitude m = us::eval_magnitude(rec.witness, rec.stage2_digits);
  EXPECT_LE(us::abs(m.value - rec.value.value).to_double(), 2 * m.err_bound);
  if (rec.k <= 5) EXPECT_FALSE(us::is_vanishing(rec.witness).vanishes());
}

}  // namespace

TEST(ExactMinNaive, Examples) {
  const auto r1 = us::exact_min_naive(1, 9);
  EXPECT_NEAR(r1.value.approx(), 1.0, 1e-15);
  EXPECT_EQ(r1.witness, us::RootConfig(9, {0}));
  const auto r2 = us::exact_min_naive(2, 3);
  EXPECT_NEAR(r2.value.approx(), 1.0, 1e-15);
  EXPECT_EQ(r2.witness, us::RootConfig(3, {0, 1}));
}

// f(5,5): the pentagon is excluded and {0,1,1,4,4} sums to sqrt5, so the
// minimum is attained elsewhere; frozen from the 50-digit brute force.
TEST(ExactMinNaive, FiveFifthRoots) {
  const auto r = us::exact_min_naive(5, 5);
  EXPECT_EQ(r.value.str(), "7.26542528005360885895466757481e-01");
  EXPECT_EQ(r.witness, us::RootConfig(5, {0, 0, 1, 3, 3}));
  expect_matches_oracle(r);
  EXPECT_NEAR(us::eval_magnitude(us::RootConfig(5, {0, 1, 1, 4, 4})).approx(), std::sqrt(5.0), 1e-15);
}

TEST(ExactMinNaive, MatchesBruteForce) {
  for (std::int64_t n = 1; n <= 14; ++n) {
    for (int k = 1; k <= 5; ++k) expect_matches_oracle(us::exact_min_naive(k, n));
  }
  for (std::int64_t n = 15; n <= 30; ++n) expect_matches_oracle(us::exact_min_naive(5, n));
  for (std::int64_t n = 2; n <= 9; ++n) expect_matches_oracle(us::exact_min_naive(6, n));
}

TEST(ExactMinNaive, Guards) {
  EXPECT_EQ(code_of([] { us::exact_min_naive(0, 5); }), us::ErrorCode::kUnsupportedK);
  EXPECT_EQ(code_of([] { us::exact_min_naive(8, 5); }), us::ErrorCode::kUnsupportedK);
  EXPECT_EQ(code_of([] { us::exact_min_naive(5, 5000); }), us::ErrorCode::kCostGuard);
}

TEST(ExactMin5, SmallCases) {
  const auto r6 = us::exact_min_5(6);
  EXPECT_NEAR(r6.value.approx(), 1.0, 1e-15);
  EXPECT_EQ(r6.witness, us::RootConfig(6, {0, 0, 0, 3, 3}));
  EXPECT_EQ(code_of([] { us::exact_min_5(4); }), us::ErrorCode::kInvalidArgument);
}

TEST(ExactMin5, MatchesBruteForce) {
  for (std::int64_t n = 5; n <= 36; ++n) {
    const auto r = us::exact_min_5(n);
    expect_record_invariants(r);
    expect_matches_oracle(r);
  }
}

// Values frozen from the brute force (n <= 60) and from the pruned/unpruned
// agreement at larger n.
TEST(ExactMin5, FrozenValues) {
  struct Row {
    std::int64_t n;
    const char* value;
    std::vector<std::int64_t> witness;
  };
  const std::vector<Row> rows = {
      {7, "1.09916264174742", {0, 0, 2, 4, 4}},
      {10, "2.36067977499789", {0, 0, 3, 6, 6}},
      {30, "4.37047985323887", {0, 0, 9, 16, 19}},
      {60, "1.09562092634533", {0, 0, 19, 31, 39}},
      {117, "1.07274047872028", {0, 17, 43, 69, 86}},
      {120, "1.60981926242362", {0, 19, 45, 71, 90}},
      {5000, "7.18240217175452", {0, 579, 1755, 2931, 3510}},
  };
  for (const auto& row : rows) {
    const auto r = us::exact_min_5(row.n);
    EXPECT_EQ(r.value.str().substr(0, 16), row.value) << row.n;
    EXPECT_EQ(r.witness, us::RootConfig(row.n, row.witness)) << row.n;
  }
  EXPECT_EQ(us::exact_min_naive(5, 60).value.str(), us::exact_min_5(60).value.str());
}

TEST(ExactMin5, PruneIsSound) {
  for (std::int64_t n = 50; n <= 150; ++n) {
    us::SearchOptions off;
    off.prune_enabled = false;
    const auto a = us::exact_min_5(n);
    const auto b = us::exact_min_5(n, off);
    ASSERT_EQ(a.value.str(), b.value.str()) << n;
    ASSERT_EQ(a.witness, b.witness) << n;
    EXPECT_GE(b.evaluated_count, a.evaluated_count);
  }
}

TEST(ExactMin5, BiasedPruneIsCaught) {
  // The verifier's fault hook must actually change some result.
  bool differs = false;
  for (std::int64_t n = 50; n <= 120 && !differs; ++n) {
    us::SearchOptions bad;
    bad.prune_bias = 0.5;
    differs = us::format_record(us::exact_min_5(n, bad)) != us::format_record(us::exact_min_5(n));
  }
  EXPECT_TRUE(differs);
}

TEST(ExactMin5, DeterministicAcrossThreadsAndShards) {
  for (std::int64_t n : {97, 600, 2023}) {
    const std::string base = us::format_record(us::exact_min_5(n));
    for (int t : {2, 4, 8}) {
      us::SearchOptions o;
      o.threads = t;
      EXPECT_EQ(us::format_record(us::exact_min_5(n, o)), base);
    }
    for (int total : {2, 5, 7}) {
      std::vector<us::MinRecord> parts;
      for (int i = total - 1; i >= 0; --i) {
        us::SearchOptions o;
        o.shard = {i, total};
        parts.push_back(us::exact_min_5(n, o));
      }
      EXPECT_EQ(us::format_record(us::merge_records(parts)), base);
    }
  }
}

TEST(ExactMin5, MonotoneInB) {
  for (std::int64_t n = 40; n <= 80; ++n) {
    for (std::int64_t a = 0; 5 * a <= n; ++a) {
      oracle::Float prev(100);
      for (std::int64_t b = 2 * a; 5 * b <= 2 * n; ++b) {
        const oracle::Float v = oracle::magnitude({0, a, b}, n);
        ASSERT_LE(v, prev) << "n=" << n << " a=" << a << " b=" << b;
        prev = v;
      }
    }
  }
}

TEST(ExactMin5, ArcLimit) {
  EXPECT_EQ(us::arc_limit(5), 2);
  EXPECT_EQ(us::arc_limit(6), 3);
  EXPECT_EQ(us::arc_limit(10), 4);
  EXPECT_EQ(us::arc_limit(11), 5);
}

TEST(ExactMinMitm, MatchesNaive) {
  for (std::int64_t n = 7; n <= 14; ++n) {
    const auto a = us::exact_min_mitm(6, n);
    const auto b = us::exact_min_naive(6, n);
    EXPECT_EQ(a.value.str(), b.value.str()) << n;
    EXPECT_EQ(a.witness, b.witness) << n;
    expect_record_invariants(a);
  }
  EXPECT_EQ(us::exact_min_mitm(7, 9).witness, us::exact_min_naive(7, 9).witness);
  EXPECT_NEAR(us::exact_min_mitm(6, 7).value.approx(), 0.246979603717467, 1e-14);
}

TEST(ExactMinMitm, Guards) {
  EXPECT_EQ(code_of([] { us::exact_min_mitm(4, 10); }), us::ErrorCode::kUnsupportedK);
  EXPECT_EQ(code_of([] { us::exact_min_mitm(9, 10); }), us::ErrorCode::kUnsupportedK);
  EXPECT_EQ(code_of([] { us::exact_min_mitm(6, 2001); }), us::ErrorCode::kCostGuard);
}

TEST(SearchOptions, Validation) {
  auto bad = [](auto mutate) {
    us::SearchOptions o;
    mutate(o);
    return code_of([&] { o.validate(); });
  };
  EXPECT_EQ(bad([](us::SearchOptions& o) { o.threads = 0; }), us::ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](us::SearchOptions& o) { o.refine_margin = 1.0; }), us::ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](us::SearchOptions& o) { o.shard = {3, 3}; }), us::ErrorCode::kInvalidArgument);
  EXPECT_EQ(bad([](us::SearchOptions& o) { o.refine_digits = 70; }), us::ErrorCode::kPrecisionUnachievable);
}

TEST(ComputeMin, Dispatch) {
  EXPECT_NEAR(us::compute_min(4, 4).value.approx(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(us::compute_min(5, 60).witness, us::exact_min_naive(5, 60).witness);
  EXPECT_EQ(us::compute_min(5, 3).witness, us::exact_min_naive(5, 3).witness);
  EXPECT_EQ(us::compute_min(6, 9).witness, us::exact_min_naive(6, 9).witness);
  EXPECT_EQ(code_of([] { us::compute_min(9, 10); }), us::ErrorCode::kUnsupportedK);
}

TEST(Sweep, TwoRootsMatchClosedForm) {
  us::SweepRange r;
  r.k = 2;
  r.from = 2;
  r.to = 100;
  std::size_t count = 0;
  us::sweep(r, {}, nullptr, [&](const us::MinRecord& rec) {
    EXPECT_NEAR(rec.value.approx(), us::f2_closed(rec.n).value.approx(), 1e-15);
    ++count;
  });
  EXPECT_EQ(count, 99u);
}

TEST(Sweep, FilterAndSkip) {
  us::SweepRange r;
  r.k = 5;
  r.from = 12;
  r.to = 240;
  r.filter = std::make_pair(std::int64_t{6}, std::int64_t{0});
  std::vector<std::int64_t> seen;
  us::sweep(r, {}, [](std::int64_t n) { return n == 24; }, [&](const us::MinRecord& rec) {
    seen.push_back(rec.n);
    const double lift = 4 * std::pow(std::sin(M_PI / static_cast<double>(rec.n)), 2);
    EXPECT_LE(rec.value.approx(), lift + 1e-12);
  });
  EXPECT_EQ(seen.front(), 12);
  EXPECT_EQ(seen.size(), 38u);
  EXPECT_EQ(std::count(seen.begin(), seen.end(), 24), 0);
}

TEST(SweepRange, Validation) {
  us::SweepRange r;
  r.from = 10;
  r.to = 5;
  EXPECT_EQ(code_of([&] { r.values(); }), us::ErrorCode::kInvalidArgument);
  r.to = 20;
  r.stride = 0;
  EXPECT_EQ(code_of([&] { r.values(); }), us::ErrorCode::kInvalidArgument);
  r.stride = 3;
  EXPECT_EQ(r.values(), (std::vector<std::int64_t>{10, 13, 16, 19}));
}
