#pragma once

// CSV store of MinRecords with resume support.
//
//   k,n,value,digits,a1,a2,a3,a4,a5,extra_angles
//
// value has exactly `digits` significant decimals (round-to-nearest-even);
// a1..a5 hold the canonical witness, empty past k; roots six and up go to
// extra_angles separated by ';'. Timestamps never enter the CSV; they go to
// the sidecar "<path>.log".

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitysum/search.hpp"

namespace unitysum {

inline constexpr std::string_view kCsvHeader = "k,n,value,digits,a1,a2,a3,a4,a5,extra_angles";

std::string format_record(const MinRecord& rec);
// Throws kIo on a malformed row.
MinRecord parse_record(std::string_view line);

class ResultsStore {
 public:
  // Loads an existing file; a missing file is an empty store. Throws kIo
  // on unreadable or corrupt content.
  explicit ResultsStore(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }
  bool contains(int k, std::int64_t n) const { return index_.count({k, n}) != 0; }
  const MinRecord* find(int k, std::int64_t n) const;
  const std::vector<MinRecord>& rows() const { return rows_; }

  // Records of one k, sorted by n, one per n (the last appended wins).
  std::vector<MinRecord> select(int k) const;

  // One line, one write, then flush.
  void append(const MinRecord& rec);

  // Rewrites the file sorted by (k, n) with one row per key, via a
  // temporary file and rename.
  void compact();

  // Appends "<timestamp> <message>" to the sidecar log.
  void log(std::string_view message) const;

 private:
  std::filesystem::path path_;
  std::vector<MinRecord> rows_;
  std::map<std::pair<int, std::int64_t>, std::size_t> index_;
};

}  // namespace unitysum
