// Re-derives the smallest n from which the k = 3 and k = 4 closed forms
// agree with the exhaustive oracle. Usage: scan_thresholds [max_n3] [max_n4]

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "unitysum/closed_forms.hpp"
#include "unitysum/search.hpp"

namespace us = unitysum;

namespace {

// Returns the first n after which every n up to max_n agrees.
std::int64_t scan(int k, std::int64_t first, std::int64_t max_n) {
  std::int64_t threshold = first;
  for (std::int64_t n = first; n <= max_n; ++n) {
    const double closed = us::closed_form(k, n).value.approx();
    const double oracle = us::exact_min_naive(k, n).value.approx();
    if (std::abs(closed - oracle) > 1e-12 * std::max(1.0, oracle)) {
      std::printf("k=%d n=%lld closed %.15g oracle %.15g\n", k, static_cast<long long>(n), closed, oracle);
      threshold = n + 1;
    }
  }
  return threshold;
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t max3 = argc > 1 ? std::atoll(argv[1]) : 500;
  const std::int64_t max4 = argc > 2 ? std::atoll(argv[2]) : 300;
  std::printf("n_min3 = %lld (scanned to %lld)\n", static_cast<long long>(scan(3, 1, max3)),
              static_cast<long long>(max3));
  std::printf("n_min4 = %lld (scanned to %lld)\n", static_cast<long long>(scan(4, 2, max4)),
              static_cast<long long>(max4));
  return 0;
}
