#include "unitysum/results_store.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "unitysum/errors.hpp"

namespace unitysum {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

template <class T>
T number(std::string_view s, std::string_view line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorCode::kIo, "corrupt row '" + std::string(line) + "'");
  }
  return v;
}

}  // namespace

std::string format_record(const MinRecord& rec) {
  std::ostringstream os;
  const int digits = rec.value.digits;
  os << rec.k << ',' << rec.n << ',' << rec.value.value.sci(digits) << ',' << digits;
  const auto angles = rec.witness.angles();
  for (std::size_t i = 0; i < 5; ++i) {
    os << ',';
    if (i < angles.size()) os << angles[i];
  }
  os << ',';
  for (std::size_t i = 5; i < angles.size(); ++i) os << (i > 5 ? ";" : "") << angles[i];
  return os.str();
}

MinRecord parse_record(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = split(line, ',');
  if (f.size() != 10) fail(ErrorCode::kIo, "corrupt row '" + std::string(line) + "'");
  MinRecord rec;
  rec.k = number<int>(f[0], line);
  rec.n = number<std::int64_t>(f[1], line);
  const int digits = number<int>(f[3], line);
  if (rec.k < 1 || rec.n < 1 || digits < 1 || digits > kMaxDigits) {
    fail(ErrorCode::kIo, "corrupt row '" + std::string(line) + "'");
  }
  std::vector<std::int64_t> angles;
  for (std::size_t i = 4; i < 9; ++i) {
    if (!f[i].empty()) angles.push_back(number<std::int64_t>(f[i], line));
  }
  if (!f[9].empty()) {
    for (auto part : split(f[9], ';')) angles.push_back(number<std::int64_t>(part, line));
  }
  if (angles.size() != static_cast<std::size_t>(rec.k)) {
    fail(ErrorCode::kIo, "row has " + std::to_string(angles.size()) + " angles for k=" + std::to_string(rec.k));
  }
  try {
    rec.witness = RootConfig(rec.n, std::move(angles));
    const Real v = Real::parse(f[2], Real::bits_for_digits(digits));
    // Half a unit in the last printed place.
    const double ulp = v.is_zero() ? 0.0 : std::pow(10.0, std::floor(std::log10(std::abs(v.to_double()))) - digits + 1);
    rec.value = Magnitude{v, digits, 0.5 * ulp};
  } catch (const Error&) {
    fail(ErrorCode::kIo, "corrupt row '" + std::string(line) + "'");
  }
  rec.stage2_digits = digits;
  rec.found = true;
  return rec;
}

ResultsStore::ResultsStore(std::filesystem::path path) : path_(std::move(path)) {
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return;
  std::ifstream in(path_);
  if (!in) fail(ErrorCode::kIo, "cannot read " + path_.string());
  std::string line;
  if (!std::getline(in, line)) return;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) fail(ErrorCode::kIo, path_.string() + ": unexpected header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    MinRecord rec = parse_record(line);
    index_[{rec.k, rec.n}] = rows_.size();
    rows_.push_back(std::move(rec));
  }
}

const MinRecord* ResultsStore::find(int k, std::int64_t n) const {
  const auto it = index_.find({k, n});
  return it == index_.end() ? nullptr : &rows_[it->second];
}

std::vector<MinRecord> ResultsStore::select(int k) const {
  std::vector<MinRecord> out;
  for (const auto& [key, row] : index_) {
    if (key.first == k) out.push_back(rows_[row]);
  }
  return out;
}

void ResultsStore::append(const MinRecord& rec) {
  if (!rec.found) fail(ErrorCode::kInvalidArgument, "cannot store an empty record");
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path_, ec) || std::filesystem::file_size(path_, ec) == 0;
  std::ofstream out(path_, std::ios::app);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path_.string());
  std::string text;
  if (fresh) text.append(kCsvHeader).push_back('\n');
  text += format_record(rec);
  text.push_back('\n');
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) fail(ErrorCode::kIo, "write failed on " + path_.string());
  index_[{rec.k, rec.n}] = rows_.size();
  rows_.push_back(rec);
}

void ResultsStore::compact() {
  std::vector<MinRecord> kept;
  kept.reserve(index_.size());
  for (const auto& [key, row] : index_) kept.push_back(rows_[row]);
  const std::filesystem::path tmp = path_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(ErrorCode::kIo, "cannot write " + tmp.string());
    out << kCsvHeader << '\n';
    for (const auto& rec : kept) out << format_record(rec) << '\n';
    out.flush();
    if (!out) fail(ErrorCode::kIo, "write failed on " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) fail(ErrorCode::kIo, "cannot replace " + path_.string() + ": " + ec.message());
  rows_ = std::move(kept);
  index_.clear();
  for (std::size_t i = 0; i < rows_.size(); ++i) index_[{rows_[i].k, rows_[i].n}] = i;
}

void ResultsStore::log(std::string_view message) const {
  std::ofstream out(path_.string() + ".log", std::ios::app);
  if (!out) return;
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  out << secs << ' ' << message << '\n';
}

}  // namespace unitysum
