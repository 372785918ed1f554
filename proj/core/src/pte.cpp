#include "unitysum/pte.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "unitysum/errors.hpp"

namespace unitysum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t to_int(std::string_view s, int line) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorCode::kInvalidArgument, "line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::int64_t> to_list(std::string_view s, int line) {
  std::vector<std::int64_t> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(to_int(s.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::vector<PteSolution> parse_pte(std::istream& in) {
  std::vector<PteSolution> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto colon = text.find(':');
    const auto bar = text.find('|');
    if (colon == std::string_view::npos || bar == std::string_view::npos || bar < colon) {
      fail(ErrorCode::kInvalidArgument, "line " + std::to_string(line) + ": expected 'm: a,... | b,...'");
    }
    const std::int64_t m = to_int(text.substr(0, colon), line);
    PteSolution s{to_list(text.substr(colon + 1, bar - colon - 1), line), to_list(text.substr(bar + 1), line)};
    if (m < 1 || static_cast<std::size_t>(m) != s.a.size() || s.a.size() != s.b.size()) {
      fail(ErrorCode::kInvalidArgument, "line " + std::to_string(line) + ": list lengths do not match m");
    }
    if (!is_pte(s)) fail(ErrorCode::kNotPte, "line " + std::to_string(line));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<PteSolution> load_pte_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path.string());
  return parse_pte(in);
}

std::string format_pte(const PteSolution& s) {
  std::ostringstream os;
  os << s.m() << ":";
  for (std::size_t i = 0; i < s.a.size(); ++i) os << (i ? "," : " ") << s.a[i];
  os << " |";
  for (std::size_t i = 0; i < s.b.size(); ++i) os << (i ? "," : " ") << s.b[i];
  return os.str();
}

const PteSolution& curated_pte(int m) {
  static const std::vector<PteSolution> table = {
      {{0, 3}, {1, 2}},
      {{0, 4, 5}, {1, 2, 6}},
      {{0, 4, 7, 11}, {1, 2, 9, 10}},
  };
  if (m < 2 || m > 4) fail(ErrorCode::kInvalidArgument, "curated PTE solutions exist for m in {2,3,4}");
  return table[static_cast<std::size_t>(m - 2)];
}

}  // namespace unitysum
