#include "verify.hpp"

#include <chrono>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "unitysum/closed_forms.hpp"
#include "unitysum/constructions.hpp"
#include "unitysum/errors.hpp"
#include "unitysum/pair_completion.hpp"
#include "unitysum/results_store.hpp"
#include "unitysum/search.hpp"
#include "unitysum/vanishing.hpp"

namespace unitysum::cli {

namespace {

struct Check {
  std::string name;
  std::function<std::string()> run;  // empty string on success
};

std::string fmt(const std::string& what, std::int64_t n) { return what + " at n=" + std::to_string(n); }

template <class F>
void for_each_multiset(int k, std::int64_t n, F&& f) {
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k), 0);
  std::function<void(int, std::int64_t)> rec = [&](int depth, std::int64_t start) {
    if (depth == k) {
      f(cur);
      return;
    }
    for (std::int64_t a = start; a < n; ++a) {
      cur[static_cast<std::size_t>(depth)] = a;
      rec(depth + 1, a);
    }
  };
  cur[0] = 0;
  rec(1, 0);
}

std::string check_symmetry(bool full) {
  std::mt19937_64 rng(20240611);
  const int trials = full ? 2000 : 300;
  for (int t = 0; t < trials; ++t) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 1000);
    const std::size_t k = 1 + rng() % kMaxRoots;
    std::vector<std::int64_t> a(k);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    const RootConfig c(n, a);
    const Magnitude base = eval_magnitude(c, 30);
    const auto shift = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    for (const RootConfig& other : {c.rotated(shift), c.reflected(), canonicalize(c)}) {
      const Magnitude m = eval_magnitude(other, 30);
      if (abs(m.value - base.value).to_double() > 2 * base.err_bound) return "mismatch for " + c.to_string();
    }
  }
  return {};
}

std::string check_classifier(std::int64_t n_max) {
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= 5; ++k) {
      std::string bad;
      for_each_multiset(k, n, [&](const std::vector<std::int64_t>& a) {
        if (!bad.empty()) return;
        const RootConfig c(n, a);
        const bool zero = eval_magnitude(c, 40).value < Real(1e-35, 200);
        if (zero != is_vanishing(c).vanishes()) bad = "disagreement on " + c.to_string();
      });
      if (!bad.empty()) return bad;
    }
  }
  return {};
}

std::string check_closed_forms(std::int64_t n2, std::int64_t n3, std::int64_t n4) {
  auto close = [](const Magnitude& a, const Magnitude& b) {
    const double x = a.approx();
    const double y = b.approx();
    return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y));
  };
  for (std::int64_t n = 2; n <= n2; ++n) {
    if (!close(f2_closed(n).value, exact_min_naive(2, n).value)) return fmt("f2", n);
  }
  for (std::int64_t n = std::max<std::int64_t>(kF3MinN, 1); n <= n3; ++n) {
    if (!close(f3_closed(n).value, exact_min_naive(3, n).value)) return fmt("f3", n);
  }
  for (std::int64_t n = 2; n <= n4; ++n) {
    if (!close(f4_closed(n).value, exact_min_naive(4, n).value)) return fmt("f4", n);
  }
  return {};
}

std::vector<std::complex<double>> y_grid() {
  std::vector<std::complex<double>> out;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 40; ++j) {
      out.push_back(std::polar(3.2 * i / 4.0, 2.0 * std::numbers::pi * (j + 1.0 / 3.0) / 40.0));
    }
  }
  return out;
}

std::string check_pairs(std::int64_t n_max, int y_step) {
  const auto grid = y_grid();
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const PairCompleter pc(n);
    for (std::size_t i = 0; i < grid.size(); i += static_cast<std::size_t>(y_step)) {
      const auto oracle = complete_pair_oracle(grid[i], n, 8);
      for (int m : {1, 4, 8}) {
        const auto fast = pc.best(grid[i], m);
        const auto wide = pc.best(grid[i], m, 3);
        for (std::size_t t = 0; t < fast.size(); ++t) {
          if (!(fast[t] == oracle[t]) || !(wide[t] == fast[t])) return fmt("list differs", n);
        }
      }
    }
  }
  return {};
}

std::string same_record(const MinRecord& a, const MinRecord& b) {
  if (a.value.str() != b.value.str() || !(a.witness == b.witness)) {
    return a.witness.to_string() + " vs " + b.witness.to_string();
  }
  return {};
}

std::string check_prune(std::int64_t from, std::int64_t to, double bias) {
  for (std::int64_t n = from; n <= to; ++n) {
    SearchOptions on;
    on.prune_bias = bias;
    SearchOptions off;
    off.prune_enabled = false;
    if (auto d = same_record(exact_min_5(n, on), exact_min_5(n, off)); !d.empty()) return fmt(d, n);
  }
  return {};
}

std::string check_reduction(const std::vector<std::int64_t>& ns) {
  for (std::int64_t n : ns) {
    if (auto d = same_record(exact_min_5(n), exact_min_naive(5, n)); !d.empty()) return fmt(d, n);
  }
  return {};
}

std::string check_monotone() {
  for (std::int64_t n = 40; n <= 80; ++n) {
    const RootTable t(n);
    for (std::int64_t a = 0; 5 * a <= n; ++a) {
      double prev = std::numeric_limits<double>::infinity();
      for (std::int64_t b = 2 * a; b <= 2 * n / 5; ++b) {
        const double v = std::hypot(1 + t.cos(a) + t.cos(b), t.sin(a) + t.sin(b));
        if (v > prev + 1e-12) return fmt("increase at a=" + std::to_string(a) + " b=" + std::to_string(b), n);
        prev = v;
      }
    }
  }
  return {};
}

std::string check_determinism(std::int64_t n, const std::vector<int>& threads) {
  const MinRecord base = exact_min_5(n);
  for (int t : threads) {
    SearchOptions o;
    o.threads = t;
    if (format_record(exact_min_5(n, o)) != format_record(base)) return fmt("threads=" + std::to_string(t), n);
  }
  std::vector<MinRecord> parts;
  for (int i = 0; i < 5; ++i) {
    SearchOptions o;
    o.shard = {i, 5};
    parts.push_back(exact_min_5(n, o));
  }
  if (format_record(merge_records(parts)) != format_record(base)) return fmt("shards=5", n);
  return {};
}

std::string check_lemma() {
  for (int j = 0; j <= 8; ++j) {
    for (int r = 0; r < 5; ++r) fib_approx_pair(j, r);  // throws on a broken contract
  }
  for (int r = 0; r < 5; ++r) {
    for (int j = 2; j < 8; ++j) {
      const ApproxPair p = fib_approx_pair(j, r);
      const ApproxPair q = fib_approx_pair(j + 1, r);
      const mpfr_prec_t bits = q.quality.precision();
      const Real x = abs(to_real(p.a, bits)) * p.quality;
      const Real y = abs(to_real(q.a, bits)) * q.quality;
      if ((abs(x - y) / x).to_double() >= 1e-6) return "unstable product at r=" + std::to_string(r);
    }
  }
  BigInt three = 1;
  for (int j = 0; j <= 60; ++j, three *= 3) {
    const BigInt t = three % 5;
    if (fib(5 * j) % 5 != 0 || fib(5 * j + 1) % 5 != t || fib(5 * j + 2) % 5 != t) {
      return "fibonacci residues at j=" + std::to_string(j);
    }
  }
  return {};
}

std::string check_series() {
  const std::vector<std::int64_t> inv = {100, -100, 1000, -1000, 10000, -10000};
  for (std::int64_t x : inv) {
    for (std::int64_t y : inv) {
      const Rational al(1, x);
      const Rational be(1, y);
      const double m = std::max(std::abs(al.to_double()), std::abs(be.to_double()));
      if (std::abs((z5_exact(al, be, 40) - z5_series3(al, be, 40)).to_double()) > kZ5SeriesK * std::pow(m, 4)) {
        return "z5 remainder too large";
      }
      const double bound = kZ3rSeriesKa * std::pow(std::abs(al.to_double()), 3) + kZ3rSeriesKb * std::pow(be.to_double(), 4);
      if (std::abs((z3r_exact(al, be, 40) - z3r_series2(al, be, 40)).to_double()) > bound) return "z3r remainder too large";
    }
  }
  return {};
}

std::vector<FamilyBound> legal_bounds(std::int64_t n) {
  std::vector<FamilyBound> out;
  if (n >= 25) out.push_back(thm1_bound(n));
  if (n % 6 == 0) {
    out.push_back(lift6_bound(n));
    out.push_back(z3r_quad_bound(n, default_quad_q(n)));
  }
  if (n % 5 == 0) out.push_back(z5_dip_bound(n, 13, -21));
  out.push_back(z3i_bound(n, 13, -15));
  out.push_back(z3i_bound(n, -32, 37));
  std::erase_if(out, [](const FamilyBound& b) { return !b.legal; });
  return out;
}

std::string check_realizability(std::int64_t n_max) {
  for (std::int64_t n = 12; n <= n_max; ++n) {
    for (const auto& b : legal_bounds(n)) {
      const Magnitude m = eval_magnitude(b.config, 30);
      if (abs(m.value - b.value.value).to_double() > 2 * m.err_bound) return fmt(to_string(b.family), n);
      if (b.config.size() <= kMaxClassifiedRoots && is_vanishing(b.config).vanishes()) return fmt("vanishing", n);
    }
  }
  return {};
}

std::string check_dominance(std::int64_t n_max) {
  for (std::int64_t n = 12; n <= n_max; ++n) {
    const MinRecord f = exact_min_5(n);
    for (const auto& b : legal_bounds(n)) {
      if (f.value.approx() > b.value.approx() + 1e-12) return fmt(to_string(b.family), n);
    }
  }
  return {};
}

std::string check_mitm(std::int64_t n_max) {
  for (std::int64_t n = 7; n <= n_max; ++n) {
    if (auto d = same_record(exact_min_mitm(6, n), exact_min_naive(6, n)); !d.empty()) return fmt(d, n);
  }
  return {};
}

std::string check_csv(int count) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < count; ++i) {
    const int k = 1 + static_cast<int>(rng() % 8);
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 100000);
    std::vector<std::int64_t> a(static_cast<std::size_t>(k));
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    MinRecord rec;
    rec.k = k;
    rec.n = n;
    rec.witness = canonicalize(RootConfig(n, a));
    rec.value = eval_magnitude(rec.witness, 15 + static_cast<int>(rng() % 46));
    rec.found = true;
    const std::string line = format_record(rec);
    if (format_record(parse_record(line)) != line) return "round trip changed '" + line + "'";
  }
  return {};
}

std::string check_store(const ResultsStore& store) {
  for (const auto& rec : store.rows()) {
    const Magnitude m = eval_magnitude(rec.witness, std::max(rec.value.digits, kMinDigits));
    if (abs(m.value - rec.value.value).to_double() > 2 * (m.err_bound + rec.value.err_bound)) {
      return "row k=" + std::to_string(rec.k) + " n=" + std::to_string(rec.n) + " does not re-evaluate";
    }
  }
  return {};
}

}  // namespace

int run_verify(const VerifyOptions& opts, std::ostream& out) {
  const bool full = opts.level == VerifyLevel::kFull;
  std::optional<ResultsStore> store;
  if (opts.store) store.emplace(*opts.store);  // corrupt content throws kIo before any check runs
  std::vector<Check> checks = {
      {"rotation and reflection invariance", [&] { return check_symmetry(full); }},
      {"classifier soundness and completeness", [&] { return check_classifier(full ? 30 : 20); }},
      {"closed-form oracle equivalence",
       [&] { return full ? check_closed_forms(500, 500, 300) : check_closed_forms(300, 300, 150); }},
      {"pair completion oracle equivalence", [&] { return check_pairs(full ? 400 : 150, full ? 1 : 3); }},
      {"prune soundness", [&] { return check_prune(50, full ? 300 : 200, opts.fault_prune ? 0.5 : 0.0); }},
      {"reduction soundness",
       [&] {
         std::vector<std::int64_t> ns;
         for (std::int64_t n = 5; n <= (full ? 60 : 30); ++n) ns.push_back(n);
         if (full) ns.insert(ns.end(), {75, 90, 101, 113, 120});
         return check_reduction(ns);
       }},
      {"monotone in b", [] { return check_monotone(); }},
      {"determinism across threads and shards",
       [&] { return check_determinism(full ? 20011 : 3001, full ? std::vector<int>{1, 4, 8} : std::vector<int>{1, 4}); }},
      {"approximant lemma", [] { return check_lemma(); }},
      {"series remainders", [] { return check_series(); }},
      {"realizability", [&] { return check_realizability(600); }},
      {"dominance", [&] { return check_dominance(600); }},
      {"meet-in-the-middle equivalence", [&] { return check_mitm(full ? 20 : 14); }},
      {"csv round-trip", [&] { return check_csv(full ? 10000 : 1000); }},
  };
  if (store) checks.push_back({"store re-evaluation", [&] { return check_store(*store); }});

  int failures = 0;
  for (const auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kIo) throw;
      why = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (why.empty()) {
      line << "PASS " << c.name << " (" << secs << " s)";
    } else {
      line << "FAIL " << c.name << ": " << why;
      ++failures;
    }
    out << line.str() << '\n' << std::flush;
  }
  return failures;
}

}  // namespace unitysum::cli
