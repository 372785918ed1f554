#pragma once

// Stage-1 candidate pool shared by the search engines.

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "unitysum/search.hpp"

namespace unitysum::detail {

struct Candidate {
  double stage1;
  std::uint8_t k;
  std::array<std::int64_t, 8> angles;
};

class Collector {
 public:
  explicit Collector(double margin) : margin_(margin) {}

  double minimum() const { return min_; }
  double tau() const { return tau_for(min_); }
  double tau_for(double m) const {
    return m == std::numeric_limits<double>::infinity() ? m : m * margin_ + kStage1Slack;
  }

  void offer(double stage1, std::span<const std::int64_t> angles);
  void absorb(const Collector& other);

  // Refines every candidate within the final threshold and returns the
  // winner; found = false if nothing was offered.
  MinRecord finish(int k, std::int64_t n, int digits);

 private:
  void compact();

  double margin_;
  double min_ = std::numeric_limits<double>::infinity();
  std::vector<Candidate> pool_;
  std::size_t compact_at_ = 4096;
};

// Zero test for a stage-1 value small enough to be suspicious. Exact for
// k <= 5, 40-digit numeric (< 1e-35) for larger k.
bool is_zero_sum(std::span<const std::int64_t> sorted, std::int64_t n, double stage1);

// Stage-1 value below which is_zero_sum must be consulted.
inline constexpr double kZeroSuspect = 1e-9;

// Deterministic preference between two refined records of the same (k, n).
bool record_better(const MinRecord& a, const MinRecord& b);

}  // namespace unitysum::detail
