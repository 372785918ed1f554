#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "collector.hpp"
#include "unitysum/closed_forms.hpp"
#include "unitysum/errors.hpp"
#include "unitysum/pair_completion.hpp"
#include "unitysum/search.hpp"
#include "unitysum/vanishing.hpp"

namespace unitysum {

void SearchOptions::validate() const {
  if (threads < 1) fail(ErrorCode::kInvalidArgument, "threads must be >= 1");
  if (!(refine_margin > 1.0)) fail(ErrorCode::kInvalidArgument, "refine_margin must exceed 1");
  if (refine_digits < kMinDigits || refine_digits > kMaxDigits) {
    fail(refine_digits > kMaxDigits ? ErrorCode::kPrecisionUnachievable : ErrorCode::kInvalidArgument,
         "refine_digits must lie in [15, 60]");
  }
  if (shard.total < 1 || shard.index < 0 || shard.index >= shard.total) {
    fail(ErrorCode::kInvalidArgument, "shard index must lie in [0, total)");
  }
}

namespace detail {

void Collector::offer(double stage1, std::span<const std::int64_t> angles) {
  if (stage1 > tau()) return;
  min_ = std::min(min_, stage1);
  Candidate c{stage1, static_cast<std::uint8_t>(angles.size()), {}};
  std::copy(angles.begin(), angles.end(), c.angles.begin());
  pool_.push_back(c);
  if (pool_.size() >= compact_at_) compact();
}

void Collector::compact() {
  const double t = tau();
  std::erase_if(pool_, [t](const Candidate& c) { return c.stage1 > t; });
  compact_at_ = std::max<std::size_t>(4096, 2 * pool_.size());
}

void Collector::absorb(const Collector& other) {
  min_ = std::min(min_, other.min_);
  pool_.insert(pool_.end(), other.pool_.begin(), other.pool_.end());
  compact();
}

bool record_better(const MinRecord& a, const MinRecord& b) {
  if (!b.found) return a.found;
  if (!a.found) return false;
  const Real diff = abs(a.value.value - b.value.value);
  if (diff.to_double() > a.value.err_bound + b.value.err_bound) return a.value.value < b.value.value;
  return a.witness < b.witness;
}

MinRecord Collector::finish(int k, std::int64_t n, int digits) {
  MinRecord best;
  best.k = k;
  best.n = n;
  best.stage2_digits = digits;
  if (pool_.empty()) return best;
  const double t = tau();
  std::vector<RootConfig> configs;
  for (const auto& c : pool_) {
    if (c.stage1 > t) continue;
    configs.push_back(canonicalize(RootConfig(n, {c.angles.begin(), c.angles.begin() + c.k})));
  }
  std::sort(configs.begin(), configs.end());
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
  for (auto& cfg : configs) {
    MinRecord r = best;
    r.value = eval_magnitude(cfg, digits);
    r.witness = std::move(cfg);
    r.found = true;
    if (record_better(r, best)) best = std::move(r);
  }
  return best;
}

bool is_zero_sum(std::span<const std::int64_t> sorted, std::int64_t n, double stage1) {
  if (stage1 > kZeroSuspect) return false;
  if (sorted.size() <= kMaxClassifiedRoots) return vanishes_sorted(sorted, n);
  if (stage1 > 1e-12) return false;
  const Magnitude m = eval_magnitude(RootConfig(n, {sorted.begin(), sorted.end()}), 40);
  return m.value < Real(1e-35, m.value.precision());
}

}  // namespace detail

using detail::Collector;

namespace {

// Sum of k roots with the first fixed at 0, over all multisets.
class NaiveWalker {
 public:
  NaiveWalker(int k, std::int64_t n, Collector& pool) : k_(k), n_(n), table_(n), pool_(pool) {}

  std::uint64_t run() {
    angles_.assign(static_cast<std::size_t>(k_), 0);
    walk(1, 0, 1.0, 0.0);
    return evaluated_;
  }

 private:
  void walk(int depth, std::int64_t start, double x, double y) {
    if (depth == k_) {
      ++evaluated_;
      const double t = std::sqrt(x * x + y * y);
      if (t > pool_.tau()) return;
      if (detail::is_zero_sum(angles_, n_, t)) return;
      pool_.offer(t, angles_);
      return;
    }
    for (std::int64_t a = start; a < n_; ++a) {
      angles_[static_cast<std::size_t>(depth)] = a;
      walk(depth + 1, a, x + table_.cos(a), y + table_.sin(a));
    }
  }

  int k_;
  std::int64_t n_;
  RootTable table_;
  Collector& pool_;
  std::vector<std::int64_t> angles_;
  std::uint64_t evaluated_ = 0;
};

double naive_cost(int k, std::int64_t n) {
  double c = 1.0;
  for (int i = 1; i <= k - 1; ++i) c *= static_cast<double>(n) / i;
  return c;
}

}  // namespace

MinRecord exact_min_naive(int k, std::int64_t n, const SearchOptions& opts) {
  opts.validate();
  if (k < 1 || k > 7) fail(ErrorCode::kUnsupportedK, "exhaustive oracle supports k in [1, 7]");
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (naive_cost(k, n) > kNaiveCostLimit) fail(ErrorCode::kCostGuard, "exhaustive search too large");
  Collector pool(opts.refine_margin);
  NaiveWalker walker(k, n, pool);
  const std::uint64_t evaluated = walker.run();
  MinRecord rec = pool.finish(k, n, opts.refine_digits);
  rec.evaluated_count = evaluated;
  return rec;
}

std::int64_t arc_limit(std::int64_t n) { return (2 * n + 4) / 5; }

namespace {

struct Arc5 {
  std::int64_t n;
  std::int64_t b_max;
  const PairCompleter& pc;
  const SearchOptions& opts;
  std::atomic<double>& shared_min;

  std::complex<double> partial(std::int64_t a, std::int64_t b) const {
    const RootTable& t = pc.roots();
    return {1.0 + t.cos(a) + t.cos(b), t.sin(a) + t.sin(b)};
  }

  double tau(const Collector& pool) const {
    return pool.tau_for(std::min(pool.minimum(), shared_min.load(std::memory_order_relaxed)));
  }

  void publish(const Collector& pool) const {
    double cur = shared_min.load(std::memory_order_relaxed);
    const double mine = pool.minimum();
    while (mine < cur && !shared_min.compare_exchange_weak(cur, mine, std::memory_order_relaxed)) {
    }
  }

  void complete(std::int64_t a, std::int64_t b, double tau, Collector& pool, std::uint64_t& evaluated) const {
    std::array<std::int64_t, 5> cfg{};
    pc.scan(partial(a, b), tau, [&](std::int64_t u, std::int64_t v, double t) {
      ++evaluated;
      if (t > pool.tau()) return;
      cfg = {0, a, b, u, v};
      std::sort(cfg.begin(), cfg.end());
      if (detail::is_zero_sum(cfg, n, t)) return;
      pool.offer(t, cfg);
    });
  }

  // Least b in [lo, b_max] with |y(a, b)| <= radius; |y| is nonincreasing in b.
  std::int64_t first_reachable(std::int64_t a, std::int64_t lo, double radius) const {
    std::int64_t hi = b_max + 1;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (std::abs(partial(a, mid)) <= radius) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }

  void run_a(std::int64_t a, Collector& pool, std::uint64_t& evaluated, std::uint64_t& pruned) const {
    std::int64_t b = 2 * a;
    if (opts.prune_enabled) {
      const double radius = 2.0 + tau(pool) + kScanSlack - opts.prune_bias;
      const std::int64_t first = first_reachable(a, b, radius);
      pruned += static_cast<std::uint64_t>(first - b);
      b = first;
    }
    for (; b <= b_max; ++b) {
      complete(a, b, tau(pool), pool, evaluated);
      publish(pool);
    }
  }

  // A few full completions give a finite threshold before the scan starts.
  void seed(std::int64_t a, Collector& pool) const {
    for (std::int64_t b = b_max; b >= 2 * a && b > b_max - 4; --b) {
      for (const auto& c : pc.best(partial(a, b), 8)) {
        std::array<std::int64_t, 5> cfg{0, a, b, c.u, c.v};
        std::sort(cfg.begin(), cfg.end());
        if (!detail::is_zero_sum(cfg, n, c.total)) pool.offer(c.total, cfg);
      }
    }
    publish(pool);
  }
};

}  // namespace

MinRecord exact_min_5(std::int64_t n, const SearchOptions& opts) {
  opts.validate();
  if (n < 5) fail(ErrorCode::kInvalidArgument, "exact_min_5 needs n >= 5");
  const PairCompleter pc(n);
  const std::int64_t b_max = arc_limit(n);
  // a runs over 0 <= 2a <= b_max; shards take contiguous blocks.
  const std::int64_t a_count = b_max / 2 + 1;
  const std::int64_t a_from = a_count * opts.shard.index / opts.shard.total;
  const std::int64_t a_to = a_count * (opts.shard.index + 1) / opts.shard.total;

  std::atomic<double> shared_min{std::numeric_limits<double>::infinity()};
  const Arc5 arc{n, b_max, pc, opts, shared_min};
  const int workers = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(opts.threads, a_to - a_from)));
  std::vector<Collector> pools(static_cast<std::size_t>(workers), Collector(opts.refine_margin));
  std::vector<std::uint64_t> evaluated(static_cast<std::size_t>(workers), 0);
  std::vector<std::uint64_t> pruned(static_cast<std::size_t>(workers), 0);
  std::atomic<std::int64_t> next{a_from};

  if (a_from < a_to) arc.seed(a_from, pools[0]);
  auto work = [&](std::size_t w) {
    for (std::int64_t a = next.fetch_add(1); a < a_to; a = next.fetch_add(1)) {
      arc.run_a(a, pools[w], evaluated[w], pruned[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, static_cast<std::size_t>(w));
  }
  for (std::size_t w = 1; w < pools.size(); ++w) pools[0].absorb(pools[w]);
  MinRecord rec = pools[0].finish(5, n, opts.refine_digits);
  for (std::size_t w = 0; w < pools.size(); ++w) {
    rec.evaluated_count += evaluated[w];
    rec.pruned_count += pruned[w];
  }
  return rec;
}

MinRecord merge_records(const std::vector<MinRecord>& parts) {
  MinRecord best;
  std::uint64_t evaluated = 0;
  std::uint64_t pruned = 0;
  for (const auto& p : parts) {
    evaluated += p.evaluated_count;
    pruned += p.pruned_count;
    if (!best.found && best.k == 0) {
      best.k = p.k;
      best.n = p.n;
      best.stage2_digits = p.stage2_digits;
    }
    if (detail::record_better(p, best)) best = p;
  }
  best.evaluated_count = evaluated;
  best.pruned_count = pruned;
  return best;
}

namespace {

MinRecord from_closed(const ClosedFormResult& cf) {
  MinRecord rec;
  rec.k = cf.k;
  rec.n = cf.n;
  rec.value = cf.value;
  rec.witness = canonicalize(cf.witness);
  rec.stage1_digits = cf.value.digits;
  rec.stage2_digits = cf.value.digits;
  rec.found = true;
  return rec;
}

}  // namespace

MinRecord compute_min(int k, std::int64_t n, const SearchOptions& opts) {
  if (k < 1 || k > 8) fail(ErrorCode::kUnsupportedK, "k must lie in [1, 8]");
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  opts.validate();
  if (k == 2) return from_closed(f2_closed(n, opts.refine_digits));
  if (k == 3 && n >= kF3MinN) return from_closed(f3_closed(n, opts.refine_digits));
  if (k == 4 && n >= kF4MinN) return from_closed(f4_closed(n, opts.refine_digits));
  if (k == 5 && n >= 5) return exact_min_5(n, opts);
  if (k >= 6 && n <= kMitmMaxN) return exact_min_mitm(k, n, opts);
  return exact_min_naive(k, n, opts);
}

std::vector<std::int64_t> SweepRange::values() const {
  if (stride < 1) fail(ErrorCode::kInvalidArgument, "stride must be >= 1");
  if (from < 1 || to < from) fail(ErrorCode::kInvalidArgument, "range must satisfy 1 <= from <= to");
  if (filter && (filter->first < 1 || filter->second < 0 || filter->second >= filter->first)) {
    fail(ErrorCode::kInvalidArgument, "filter must be m >= 1, 0 <= r < m");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t n = from; n <= to; n += stride) {
    if (filter && n % filter->first != filter->second) continue;
    out.push_back(n);
  }
  return out;
}

void sweep(const SweepRange& range, const SearchOptions& opts, const std::function<bool(std::int64_t)>& skip,
           const std::function<void(const MinRecord&)>& sink) {
  for (std::int64_t n : range.values()) {
    if (skip && skip(n)) continue;
    sink(compute_min(range.k, n, opts));
  }
}

}  // namespace unitysum
