#pragma once

// Closed forms for f(2,n), f(3,n), f(4,n) together with witness
// configurations, and the triangular lattice used in the k = 3 argument.

#include <cstdint>
#include <string>

#include "unitysum/angles.hpp"

namespace unitysum {

// Least n from which each formula is certified against the exhaustive
// oracle (tools/scan_thresholds.cpp re-derives them). The k = 4 formula has
// two listed exceptions, n = 2 and n = 4, which f4_closed handles itself.
inline constexpr std::int64_t kF3MinN = 1;
inline constexpr std::int64_t kF4MinN = 2;

struct ClosedFormResult {
  int k = 0;
  std::int64_t n = 0;
  Magnitude value;
  RootConfig witness;
  std::string regime;
};

// 2 sin(pi/n) for even n, 2 sin(pi/2n) for odd n; n = 1 gives 2.
ClosedFormResult f2_closed(std::int64_t n, int digits = 30);

// Throws kBelowThreshold for n < kF3MinN.
ClosedFormResult f3_closed(std::int64_t n, int digits = 30);

// Throws kInvalidArgument for n < 2.
ClosedFormResult f4_closed(std::int64_t n, int digits = 30);

// Dispatch on k in {2, 3, 4}.
ClosedFormResult closed_form(int k, std::int64_t n, int digits = 30);

// (p + q*sqrt(3)) / 2 with rational p, q.
struct Sqrt3Half {
  Rational p;
  Rational q;
  double to_double() const;
};

// t(alpha, beta) = alpha e(1/12) + beta e(-1/12) in units of 1/n.
struct LatticeVector {
  Sqrt3Half x;
  Sqrt3Half y;

  // Always rational: both coordinates are pure (p or q*sqrt3 only).
  Rational norm_squared() const;
  double length() const;
};

// t(a + offset, b + offset); offset must be 0, 1/3 or -1/3.
LatticeVector lattice_t(std::int64_t a, std::int64_t b, const Rational& offset);

}  // namespace unitysum
