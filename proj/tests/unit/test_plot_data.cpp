#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "unitysum/errors.hpp"
#include "unitysum/plot_data.hpp"

namespace us = unitysum;

namespace {

std::vector<us::MinRecord> sweep(std::int64_t from, std::int64_t to, std::int64_t step = 1) {
  std::vector<us::MinRecord> out;
  for (std::int64_t n = from; n <= to; n += step) out.push_back(us::compute_min(5, n));
  return out;
}

}  // namespace

TEST(PlotData, LnTransformRoundTrip) {
  const auto recs = sweep(10, 60);
  const auto s = us::make_series(recs, us::Transform::kLn, {}, false);
  ASSERT_EQ(s.rows.size(), 51u);
  EXPECT_EQ(s.columns, (std::vector<std::string>{"n", "ln_value"}));
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(s.rows[i][0], static_cast<double>(recs[i].n));
    EXPECT_DOUBLE_EQ(s.rows[i][1], std::log(recs[i].value.approx()));
  }
  std::stringstream io;
  us::write_series(io, s);
  const auto back = us::read_series(io);
  EXPECT_EQ(back.label, s.label);
  EXPECT_EQ(back.columns, s.columns);
  ASSERT_EQ(back.rows.size(), s.rows.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i) EXPECT_EQ(back.rows[i], s.rows[i]);
}

TEST(PlotData, LogLogWithOverlaysAndReference) {
  const auto recs = sweep(30, 120, 6);
  std::vector<us::Overlay> ov;
  ov.push_back({us::Family::kLift6, {}, ""});
  ov.push_back({us::Family::kZ3rQuad, {}, "quad"});
  const auto s = us::make_series(recs, us::Transform::kLogLog, ov, true);
  EXPECT_EQ(s.columns, (std::vector<std::string>{"ln_n", "ln_value", "lift6", "quad", "slope_-2", "slope_-3"}));
  const auto& mid = s.rows[s.rows.size() / 2];
  EXPECT_DOUBLE_EQ(mid[4], mid[1]);
  EXPECT_DOUBLE_EQ(mid[5], mid[1]);
  EXPECT_NEAR((s.rows.back()[4] - s.rows.front()[4]) / (s.rows.back()[0] - s.rows.front()[0]), -2.0, 1e-12);
  EXPECT_NEAR((s.rows.back()[5] - s.rows.front()[5]) / (s.rows.back()[0] - s.rows.front()[0]), -3.0, 1e-12);
  EXPECT_THROW(us::make_series(recs, us::Transform::kLn, ov, true), us::Error);
}

TEST(PlotData, LiftOverlayBoundsData) {
  const auto recs = sweep(12, 300, 6);
  const auto s = us::make_series(recs, us::Transform::kLn, {{us::Family::kLift6, {}, ""}}, false);
  for (const auto& row : s.rows) EXPECT_GE(row[2], row[1] - 1e-12);
}

TEST(PlotData, IllegalOverlayIsNan) {
  const auto recs = sweep(10, 14);
  const auto s = us::make_series(recs, us::Transform::kRaw, {{us::Family::kLift6, {}, ""}}, false);
  EXPECT_TRUE(std::isnan(s.rows[0][2]));   // n = 10
  EXPECT_FALSE(std::isnan(s.rows[2][2]));  // n = 12
  std::stringstream io;
  us::write_series(io, s);
  EXPECT_NE(io.str().find("nan"), std::string::npos);
  EXPECT_TRUE(std::isnan(us::read_series(io).rows[0][2]));
}

TEST(PlotData, Errors) {
  try {
    us::make_series({}, us::Transform::kRaw, {}, false);
    FAIL();
  } catch (const us::Error& e) {
    EXPECT_EQ(e.code(), us::ErrorCode::kEmptySelection);
  }
  EXPECT_THROW(us::parse_transform("log"), us::Error);
  EXPECT_EQ(us::parse_transform("loglog"), us::Transform::kLogLog);
}
