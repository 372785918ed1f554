#include "unitysum/pair_completion.hpp"

#include <algorithm>

#include "unitysum/errors.hpp"
#include "unitysum/vanishing.hpp"

namespace unitysum {

namespace {

void check_m(int m) {
  if (m < 1 || m > kMaxCompletions) fail(ErrorCode::kInvalidArgument, "M must be in [1, 32]");
}

std::int64_t pair_count(std::int64_t n) { return n * (n + 1) / 2; }

void keep_best(std::vector<CompletionCandidate>& list, std::size_t m) {
  std::sort(list.begin(), list.end(), completion_less);
  if (list.size() > m) list.resize(m);
}

}  // namespace

PairCompleter::PairCompleter(std::int64_t n) : n_(n), full_(n), half_(2 * n) {}

std::vector<CompletionCandidate> PairCompleter::best(std::complex<double> y, int m, int rings) const {
  check_m(m);
  if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) fail(ErrorCode::kInvalidArgument, "y not finite");
  const auto want = static_cast<std::size_t>(std::min<std::int64_t>(m, pair_count(n_)));
  const double r = std::abs(y);
  // Grows until the certified scan holds enough pairs; every pair with
  // total <= tau is present, so the first `want` after sorting are exact.
  // The excess over the floor max(r - 2, 0) doubles; doubling tau itself
  // would blow the window up for r > 2.
  const double floor = std::max(r - 2.0, 0.0);
  const auto nd = static_cast<double>(n_);
  double excess = 1.0 / (nd * nd);
  double tau = floor + excess;
  std::vector<CompletionCandidate> found;
  for (;;) {
    found.clear();
    scan(y, tau, [&](std::int64_t u, std::int64_t v, double t) {
      if (t <= tau) found.push_back({u, v, t, false});
    }, rings);
    if (found.size() >= want) break;
    excess *= 2.0;
    tau = floor + excess;
  }
  keep_best(found, want);
  return found;
}

std::vector<CompletionCandidate> complete_pair(std::complex<double> y, std::int64_t n, int m) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  return PairCompleter(n).best(y, m);
}

std::vector<CompletionCandidate> complete_pair(const RootConfig& partial, int m) {
  if (partial.size() > 3) fail(ErrorCode::kUnsupportedK, "partial configuration must have at most 3 roots");
  const std::int64_t n = partial.n();
  const PairCompleter pc(n);
  auto list = pc.best(pc.roots().sum(partial.angles()), m);
  std::vector<std::int64_t> full(partial.angles().begin(), partial.angles().end());
  for (auto& c : list) {
    std::vector<std::int64_t> all = full;
    all.push_back(c.u);
    all.push_back(c.v);
    std::sort(all.begin(), all.end());
    c.vanishing = vanishes_sorted(all, n);
  }
  return list;
}

std::vector<CompletionCandidate> complete_pair_oracle(std::complex<double> y, std::int64_t n, int m) {
  check_m(m);
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (n > kMaxOracleN) fail(ErrorCode::kOracleTooLarge, "oracle limited to n <= 5000");
  const PairCompleter pc(n);
  const auto want = static_cast<std::size_t>(std::min<std::int64_t>(m, pair_count(n)));
  std::vector<CompletionCandidate> top;
  top.reserve(want + 1);
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = u; v < n; ++v) {
      const CompletionCandidate c{u, v, pc.total(y, u, v), false};
      if (top.size() == want && !completion_less(c, top.back())) continue;
      top.insert(std::upper_bound(top.begin(), top.end(), c, completion_less), c);
      if (top.size() > want) top.pop_back();
    }
  }
  return top;
}

}  // namespace unitysum
