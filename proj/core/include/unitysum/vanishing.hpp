#pragma once

// Exact zero test for sums of at most five roots of unity.
//
// A vanishing sum splits into minimal vanishing sums, and the only minimal
// ones with fewer than six terms are rotated regular p-gons for p = 2, 3, 5.
// So k <= 5 roots vanish iff they partition into antipodal pairs, triangles
// and pentagons; everything here is integer arithmetic on numerators.

#include <cstdint>
#include <span>
#include <vector>

#include "unitysum/angles.hpp"

namespace unitysum {

enum class VanishKind {
  kNotVanishing,
  kPair,              // k = 2: {c, c + n/2}
  kTriangle,          // k = 3: {c, c + n/3, c + 2n/3}
  kTwoPairs,          // k = 4: two antipodal pairs
  kPentagon,          // k = 5: {c, c + n/5, ..., c + 4n/5}
  kTrianglePlusPair,  // k = 5: triangle and antipodal pair
};

const char* to_string(VanishKind kind);

struct VanishDecomposition {
  VanishKind kind = VanishKind::kNotVanishing;
  std::vector<std::vector<std::int64_t>> parts;

  bool vanishes() const { return kind != VanishKind::kNotVanishing; }
};

inline constexpr std::size_t kMaxClassifiedRoots = 5;

// Throws Error(kUnsupportedK) when the config has more than five roots.
VanishDecomposition is_vanishing(const RootConfig& config);

// Allocation-free yes/no form for hot loops. `sorted` must be ascending,
// each entry in [0, n), size <= 5.
bool vanishes_sorted(std::span<const std::int64_t> sorted, std::int64_t n);

}  // namespace unitysum
