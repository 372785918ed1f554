#include "unitysum/plot_data.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "unitysum/errors.hpp"

namespace unitysum {

Transform parse_transform(std::string_view name) {
  if (name == "raw") return Transform::kRaw;
  if (name == "ln") return Transform::kLn;
  if (name == "loglog") return Transform::kLogLog;
  fail(ErrorCode::kInvalidArgument, "transform must be raw, ln or loglog");
}

const char* to_string(Transform t) {
  switch (t) {
    case Transform::kRaw: return "raw";
    case Transform::kLn: return "ln";
    case Transform::kLogLog: return "loglog";
  }
  return "unknown";
}

namespace {

double apply(Transform t, double v) { return t == Transform::kRaw ? v : std::log(v); }

}  // namespace

PlotSeries make_series(const std::vector<MinRecord>& records, Transform transform,
                       const std::vector<Overlay>& overlays, bool reference) {
  if (records.empty()) fail(ErrorCode::kEmptySelection, "no records to plot");
  if (reference && transform != Transform::kLogLog) {
    fail(ErrorCode::kInvalidArgument, "reference lines need the loglog transform");
  }
  PlotSeries s;
  s.label = "f(" + std::to_string(records.front().k) + ",n)";
  s.columns = {transform == Transform::kLogLog ? "ln_n" : "n",
               std::string(transform == Transform::kRaw ? "" : "ln_") + "value"};
  for (const auto& o : overlays) s.columns.push_back(o.label.empty() ? to_string(o.family) : o.label);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::int64_t last = 0;
  for (const auto& rec : records) {
    if (rec.n <= last) fail(ErrorCode::kInvalidArgument, "records must have increasing n");
    last = rec.n;
    const auto n = static_cast<double>(rec.n);
    std::vector<double> row{transform == Transform::kLogLog ? std::log(n) : n,
                            apply(transform, rec.value.approx())};
    for (const auto& o : overlays) {
      const FamilyBound fb = family_bound(o.family, rec.n, o.params);
      row.push_back(fb.legal ? apply(transform, fb.value.approx()) : nan);
    }
    s.rows.push_back(std::move(row));
  }
  if (reference) {
    const auto& mid = s.rows[s.rows.size() / 2];
    const double x0 = mid[0];
    const double y0 = mid[1];
    s.columns.emplace_back("slope_-2");
    s.columns.emplace_back("slope_-3");
    for (auto& row : s.rows) {
      row.push_back(y0 - 2.0 * (row[0] - x0));
      row.push_back(y0 - 3.0 * (row[0] - x0));
    }
  }
  return s;
}

void write_series(std::ostream& out, const PlotSeries& series) {
  out << "# " << series.label << ':';
  for (const auto& c : series.columns) out << ' ' << c;
  out << '\n';
  char buf[32];
  for (const auto& row : series.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (std::isnan(row[i])) {
        out << (i ? " " : "") << "nan";
        continue;
      }
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out << (i ? " " : "") << buf;
    }
    out << '\n';
  }
}

void write_series(const std::filesystem::path& path, const PlotSeries& series) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  write_series(out, series);
  if (!out) fail(ErrorCode::kIo, "write failed on " + path.string());
}

PlotSeries read_series(std::istream& in) {
  PlotSeries s;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) fail(ErrorCode::kIo, "missing plot header");
  const auto colon = line.find(':');
  if (colon == std::string::npos) fail(ErrorCode::kIo, "bad plot header");
  s.label = line.substr(2, colon - 2);
  std::istringstream head(line.substr(colon + 1));
  for (std::string c; head >> c;) s.columns.push_back(c);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<double> vals;
    for (std::string tok; row >> tok;) vals.push_back(tok == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(tok));
    if (vals.size() != s.columns.size()) fail(ErrorCode::kIo, "plot row has the wrong width");
    s.rows.push_back(std::move(vals));
  }
  return s;
}

}  // namespace unitysum
