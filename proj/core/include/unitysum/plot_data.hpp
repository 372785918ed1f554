#pragma once

// Plot-ready text: '#' header naming the columns, then whitespace-separated
// rows. Overlay entries where a family is illegal are written as "nan".

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "unitysum/constructions.hpp"
#include "unitysum/search.hpp"

namespace unitysum {

enum class Transform { kRaw, kLn, kLogLog };

Transform parse_transform(std::string_view name);
const char* to_string(Transform t);

struct Overlay {
  Family family;
  FamilyParams params;
  std::string label;
};

struct PlotSeries {
  std::string label;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Columns: x, value, then one per overlay; with `reference` (loglog only)
// two more lines of slope -2 and -3 through the median data point.
// Throws kEmptySelection when `records` is empty.
PlotSeries make_series(const std::vector<MinRecord>& records, Transform transform,
                       const std::vector<Overlay>& overlays, bool reference);

void write_series(std::ostream& out, const PlotSeries& series);
void write_series(const std::filesystem::path& path, const PlotSeries& series);
PlotSeries read_series(std::istream& in);

}  // namespace unitysum
