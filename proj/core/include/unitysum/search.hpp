#pragma once

// Exact minima f(k, n): exhaustive oracle, the reduced k = 5 search, and
// meet-in-the-middle for k = 6..8.
//
// Every engine ranks candidates in double precision (stage 1), keeps all
// configurations within refine_margin of the running minimum, and decides
// among them with eval_magnitude at refine_digits (stage 2). The winner is
// the smallest stage-2 value; values that agree within their error bounds
// are broken by the canonical witness, so the record does not depend on
// thread count or shard split.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "unitysum/angles.hpp"

namespace unitysum {

struct MinRecord {
  int k = 0;
  std::int64_t n = 0;
  Magnitude value;
  RootConfig witness;
  int stage1_digits = 15;
  int stage2_digits = 30;
  // Diagnostics only; they vary with threading and are not persisted.
  std::uint64_t pruned_count = 0;
  std::uint64_t evaluated_count = 0;
  bool found = false;
};

struct Shard {
  int index = 0;
  int total = 1;
};

struct SearchOptions {
  int threads = 1;
  int refine_digits = 30;
  double refine_margin = 1.0 + 1e-6;
  bool prune_enabled = true;
  Shard shard;
  // Fault injection for the verifier: shrinks the pruning radius by this
  // amount, which makes pruning unsound. Leave at 0.
  double prune_bias = 0.0;

  // Throws kInvalidArgument on bad values.
  void validate() const;
};

// Absolute slack added to the stage-1 collection threshold; several times
// the worst stage-1 rounding error of a 16-term sum.
inline constexpr double kStage1Slack = 0x1p-46;

// Cost guard of the exhaustive oracle: n^(k-1)/(k-1)! multisets.
inline constexpr double kNaiveCostLimit = 1e9;

// k in [1, 7]; throws kCostGuard or kUnsupportedK.
MinRecord exact_min_naive(int k, std::int64_t n, const SearchOptions& opts = {});

// Throws kInvalidArgument for n < 5 or an invalid shard.
MinRecord exact_min_5(std::int64_t n, const SearchOptions& opts = {});

inline constexpr std::int64_t kMitmMaxN = 2000;
inline constexpr std::size_t kMitmMaxTable = std::size_t{1} << 25;

// k in [6, 8], n <= 2000; throws kUnsupportedK or kCostGuard.
MinRecord exact_min_mitm(int k, std::int64_t n, const SearchOptions& opts = {});

// Combines shard results of the same (k, n) deterministically.
MinRecord merge_records(const std::vector<MinRecord>& parts);

// Largest b of the reduced k = 5 search: ceil(2n/5).
std::int64_t arc_limit(std::int64_t n);

// Picks the engine: closed forms for k <= 4 above their thresholds,
// exact_min_5 for k = 5, mitm for k >= 6, the oracle otherwise.
MinRecord compute_min(int k, std::int64_t n, const SearchOptions& opts = {});

struct SweepRange {
  int k = 5;
  std::int64_t from = 1;
  std::int64_t to = 1;
  std::int64_t stride = 1;
  std::optional<std::pair<std::int64_t, std::int64_t>> filter;  // n = r mod m

  std::vector<std::int64_t> values() const;
};

// Emits compute_min(k, n) in increasing n, skipping n where skip(n) holds.
void sweep(const SweepRange& range, const SearchOptions& opts,
           const std::function<bool(std::int64_t)>& skip,
           const std::function<void(const MinRecord&)>& sink);

}  // namespace unitysum
