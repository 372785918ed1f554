#pragma once

// Best completions of a partial sum y by two n-th roots.
//
// e(u/n) + e(v/n) = 2cos(pi d/n) e(s/2n) with d = v - u and s = u + v, so
// for a fixed gap d the pair contributes a vector of fixed length rho_d and
// direction s/2n. |y + rho e(s/2n)| grows with |rho - |y|| and with the
// angle between e(s/2n) and -y, which lets the scan visit only the (d, s)
// cells that can beat a threshold.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "unitysum/angles.hpp"

namespace unitysum {

struct CompletionCandidate {
  std::int64_t u = 0;
  std::int64_t v = 0;  // u <= v
  double total = 0.0;  // |y + e(u/n) + e(v/n)|
  bool vanishing = false;

  friend bool operator==(const CompletionCandidate&, const CompletionCandidate&) = default;
};

// Ranking used everywhere: total, then (u, v).
inline bool completion_less(const CompletionCandidate& a, const CompletionCandidate& b) {
  if (a.total != b.total) return a.total < b.total;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

inline constexpr int kMaxCompletions = 32;
inline constexpr std::int64_t kMaxOracleN = 5000;

// Precomputed tables for one n; cheap to share read-only between threads.
class PairCompleter {
 public:
  explicit PairCompleter(std::int64_t n);

  std::int64_t n() const { return n_; }
  const RootTable& roots() const { return full_; }

  // The total every routine reports for (u, v); oracle and scan agree
  // bit for bit because both call this.
  double total(std::complex<double> y, std::int64_t u, std::int64_t v) const {
    const double x = y.real() + full_.cos(u) + full_.cos(v);
    const double z = y.imag() + full_.sin(u) + full_.sin(v);
    return std::sqrt(x * x + z * z);
  }

  // Calls visit(u, v, total) for every pair with total <= tau, each
  // unordered pair once, in no particular order. `rings` widens the cell
  // window beyond what the bounds require; results do not depend on it.
  template <class Visit>
  void scan(std::complex<double> y, double tau, Visit&& visit, int rings = 1) const;

  // The min(M, n(n+1)/2) best pairs under completion_less.
  std::vector<CompletionCandidate> best(std::complex<double> y, int m, int rings = 1) const;

 private:
  template <class Visit>
  void scan_gap(std::complex<double> y, double r, double s_star, std::int64_t d, double tau, int rings,
                Visit& visit) const;

  std::int64_t n_;
  RootTable full_;  // e(i/n)
  RootTable half_;  // e(i/2n)
};

// Slack added to every threshold so double rounding in the bounds can never
// drop a pair the exact total would keep.
inline constexpr double kScanSlack = 1e-12;

std::vector<CompletionCandidate> complete_pair(std::complex<double> y, std::int64_t n, int m);

// Completes a partial configuration of at most three roots; `vanishing` is
// decided exactly on the full configuration.
std::vector<CompletionCandidate> complete_pair(const RootConfig& partial, int m);

// Exhaustive O(n^2) reference. Throws kOracleTooLarge for n > kMaxOracleN.
std::vector<CompletionCandidate> complete_pair_oracle(std::complex<double> y, std::int64_t n, int m);

// ---------------------------------------------------------------------------

template <class Visit>
void PairCompleter::scan_gap(std::complex<double> y, double r, double s_star, std::int64_t d, double tau,
                             int rings, Visit& visit) const {
  const std::int64_t n = n_;
  const std::int64_t two_n = 2 * n;
  const double rho = 2.0 * half_.cos(d);
  const bool half_turn = 2 * d == n;
  if (std::abs(rho - r) > tau) return;

  auto emit = [&](std::int64_t s) {
    // s = 2u + d (mod 2n)
    std::int64_t u = ((s - d) / 2) % n;
    if (u < 0) u += n;
    if (half_turn && u >= n / 2) return;
    std::int64_t v = u + d;
    if (v >= n) v -= n;
    const std::int64_t lo = u < v ? u : v;
    const std::int64_t hi = u < v ? v : u;
    const double t = total(y, lo, hi);
    if (t <= tau) visit(lo, hi, t);
  };
  auto emit_all = [&] {
    for (std::int64_t s = d % 2; s < two_n; s += 2) emit(s);
  };

  // |y + rho e(theta)|^2 = (rho - r)^2 + 4 rho r sin^2(delta/2)
  if (rho * r <= 0.0) {
    emit_all();
    return;
  }
  const double q = (tau * tau - (rho - r) * (rho - r)) / (4.0 * rho * r);
  if (q >= 1.0) {
    emit_all();
    return;
  }
  const double delta = 2.0 * std::asin(std::sqrt(std::max(q, 0.0)));
  const double width = static_cast<double>(n) * delta / std::numbers::pi;
  const auto lo = static_cast<std::int64_t>(std::floor(s_star - width)) - 2 * rings;
  const auto hi = static_cast<std::int64_t>(std::ceil(s_star + width)) + 2 * rings;
  if (hi - lo + 1 >= two_n) {
    emit_all();
    return;
  }
  for (std::int64_t s = lo; s <= hi; ++s) {
    std::int64_t sm = s % two_n;
    if (sm < 0) sm += two_n;
    if ((sm - d) % 2 != 0) continue;
    emit(sm);
  }
}

template <class Visit>
void PairCompleter::scan(std::complex<double> y, double tau, Visit&& visit, int rings) const {
  const std::int64_t n = n_;
  const std::int64_t d_cap = n / 2;
  const double r = std::abs(y);
  const double t = tau + kScanSlack;
  // Direction of -y in units of 1/2n turns.
  double psi = std::atan2(-y.imag(), -y.real());
  if (psi < 0) psi += 2.0 * std::numbers::pi;
  const double s_star = static_cast<double>(n) * psi / std::numbers::pi;

  // rho_d = 2 cos(pi d/n) is decreasing in d; keep |rho_d - r| <= t.
  const double scale = static_cast<double>(n) / std::numbers::pi;
  std::int64_t d_lo = 0;
  std::int64_t d_hi = d_cap;
  if (r + t < 2.0) d_lo = static_cast<std::int64_t>(std::floor(scale * std::acos((r + t) / 2.0))) - rings;
  if (r - t > 0.0) {
    d_hi = static_cast<std::int64_t>(std::ceil(scale * std::acos(std::min((r - t) / 2.0, 1.0)))) + rings;
  }
  d_lo = std::max<std::int64_t>(d_lo, 0);
  d_hi = std::min(d_hi, d_cap);
  for (std::int64_t d = d_lo; d <= d_hi; ++d) scan_gap(y, r, s_star, d, t, rings, visit);
}

}  // namespace unitysum
