#include <algorithm>
#include <cmath>
#include <numbers>

#include "collector.hpp"
#include "unitysum/errors.hpp"
#include "unitysum/search.hpp"

namespace unitysum {

namespace {

constexpr int kBuckets = 4096;

// Negated sums of ceil(k/2) roots with the first at 0, bucketed by argument
// and sorted by modulus inside each bucket.
class HalfTable {
 public:
  HalfTable(int h, std::int64_t n, const RootTable& roots) : h_(h) {
    std::vector<std::int64_t> cur(static_cast<std::size_t>(h), 0);
    collect(roots, n, cur, 1, 0, -1.0, 0.0);
    std::vector<std::size_t> order(entries_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const Entry& x = entries_[a];
      const Entry& y = entries_[b];
      if (x.bucket != y.bucket) return x.bucket < y.bucket;
      return x.mag < y.mag;
    });
    std::vector<Entry> sorted;
    sorted.reserve(entries_.size());
    for (std::size_t i : order) sorted.push_back(entries_[i]);
    entries_ = std::move(sorted);
    starts_.assign(kBuckets + 1, 0);
    for (const Entry& e : entries_) ++starts_[static_cast<std::size_t>(e.bucket) + 1];
    for (int b = 0; b < kBuckets; ++b) starts_[b + 1] += starts_[b];
  }

  struct Entry {
    double x;
    double y;
    double mag;
    int bucket;
    std::size_t slot;  // into angles_, h - 1 values
  };

  std::span<const Entry> bucket(int b) const {
    return {entries_.data() + starts_[static_cast<std::size_t>(b)],
            entries_.data() + starts_[static_cast<std::size_t>(b) + 1]};
  }
  std::span<const std::int64_t> angles(const Entry& e) const {
    return {angles_.data() + e.slot, static_cast<std::size_t>(h_ - 1)};
  }

  static int bucket_of(double x, double y) {
    double t = std::atan2(y, x) / (2.0 * std::numbers::pi);
    if (t < 0) t += 1.0;
    return std::min(kBuckets - 1, static_cast<int>(t * kBuckets));
  }

 private:
  void collect(const RootTable& roots, std::int64_t n, std::vector<std::int64_t>& cur, int depth,
               std::int64_t start, double x, double y) {
    if (depth == h_) {
      const std::size_t slot = angles_.size();
      angles_.insert(angles_.end(), cur.begin() + 1, cur.end());
      entries_.push_back({x, y, std::hypot(x, y), bucket_of(x, y), slot});
      return;
    }
    for (std::int64_t a = start; a < n; ++a) {
      cur[static_cast<std::size_t>(depth)] = a;
      collect(roots, n, cur, depth + 1, a, x - roots.cos(a), y - roots.sin(a));
    }
  }

  int h_;
  std::vector<Entry> entries_;
  std::vector<std::int64_t> angles_;
  std::vector<std::size_t> starts_;
};

double multiset_count(std::int64_t n, int r) {
  double c = 1.0;
  for (int i = 1; i <= r; ++i) c *= static_cast<double>(n + i - 1) / i;
  return c;
}

struct Query {
  int k;
  int l;
  std::int64_t n;
  const RootTable& roots;
  const HalfTable& table;
  detail::Collector& pool;
  double cap;
  std::uint64_t evaluated = 0;
  std::vector<std::int64_t> cur;
  std::vector<std::int64_t> cfg;

  double tau() const { return std::min(cap, pool.tau()); }

  void run() {
    cur.assign(static_cast<std::size_t>(l), 0);
    walk(0, 0, 0.0, 0.0);
  }

  void walk(int depth, std::int64_t start, double x, double y) {
    if (depth == l) {
      match(x, y);
      return;
    }
    for (std::int64_t a = start; a < n; ++a) {
      cur[static_cast<std::size_t>(depth)] = a;
      walk(depth + 1, a, x + roots.cos(a), y + roots.sin(a));
    }
  }

  void scan_bucket(int b, double x, double y, double lo, double hi) {
    auto entries = table.bucket(b);
    auto it = std::lower_bound(entries.begin(), entries.end(), lo,
                               [](const HalfTable::Entry& e, double v) { return e.mag < v; });
    for (; it != entries.end() && it->mag <= hi; ++it) {
      ++evaluated;
      const double t = std::hypot(x - it->x, y - it->y);
      if (t > tau()) continue;
      cfg.assign(1, 0);
      const auto rest = table.angles(*it);
      cfg.insert(cfg.end(), rest.begin(), rest.end());
      cfg.insert(cfg.end(), cur.begin(), cur.end());
      std::sort(cfg.begin(), cfg.end());
      if (detail::is_zero_sum(cfg, n, t)) continue;
      pool.offer(t, cfg);
    }
  }

  // Every stored point within tau of q = (x, y).
  void match(double x, double y) {
    const double t = tau() + 1e-12;
    const double q = std::hypot(x, y);
    const double lo = q - t;
    const double hi = q + t;
    if (q <= t) {
      for (int b = 0; b < kBuckets; ++b) scan_bucket(b, x, y, lo, hi);
      return;
    }
    const double half = std::asin(std::min(1.0, t / q)) / (2.0 * std::numbers::pi);
    const int span = static_cast<int>(std::ceil(half * kBuckets)) + 1;
    if (2 * span + 1 >= kBuckets) {
      for (int b = 0; b < kBuckets; ++b) scan_bucket(b, x, y, lo, hi);
      return;
    }
    const int center = HalfTable::bucket_of(x, y);
    for (int off = -span; off <= span; ++off) {
      scan_bucket(((center + off) % kBuckets + kBuckets) % kBuckets, x, y, lo, hi);
    }
  }
};

}  // namespace

MinRecord exact_min_mitm(int k, std::int64_t n, const SearchOptions& opts) {
  opts.validate();
  if (k < 6 || k > 8) fail(ErrorCode::kUnsupportedK, "meet-in-the-middle supports k in [6, 8]");
  if (n < 1 || n > kMitmMaxN) fail(ErrorCode::kCostGuard, "meet-in-the-middle limited to n <= 2000");
  const int h = (k + 1) / 2;
  const int l = k / 2;
  if (multiset_count(n, h - 1) > static_cast<double>(kMitmMaxTable)) {
    fail(ErrorCode::kCostGuard, "half-sum table exceeds the memory guard");
  }
  const RootTable roots(n);
  const HalfTable table(h, n, roots);

  // Radius doubles until a nonzero sum shows up; the pool's own threshold
  // takes over once it has one.
  std::uint64_t evaluated = 0;
  double cap = 1.0 / static_cast<double>(n);
  for (;;) {
    detail::Collector pool(opts.refine_margin);
    Query query{k, l, n, roots, table, pool, cap, 0, {}, {}};
    query.run();
    evaluated += query.evaluated;
    if (pool.tau() <= cap || cap > 2.0 * k) {
      MinRecord rec = pool.finish(k, n, opts.refine_digits);
      rec.evaluated_count = evaluated;
      return rec;
    }
    cap *= 16.0;
  }
}

}  // namespace unitysum
