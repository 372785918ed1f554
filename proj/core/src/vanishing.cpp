#include "unitysum/vanishing.hpp"

#include <array>

#include "unitysum/errors.hpp"

namespace unitysum {

const char* to_string(VanishKind kind) {
  switch (kind) {
    case VanishKind::kNotVanishing: return "not-vanishing";
    case VanishKind::kPair: return "pair";
    case VanishKind::kTriangle: return "triangle";
    case VanishKind::kTwoPairs: return "two-pairs";
    case VanishKind::kPentagon: return "pentagon";
    case VanishKind::kTrianglePlusPair: return "triangle-plus-pair";
  }
  return "unknown";
}

namespace {

bool antipodal(std::int64_t a, std::int64_t b, std::int64_t n) {
  if (n % 2 != 0) return false;
  const std::int64_t d = a > b ? a - b : b - a;
  return d == n / 2;
}

// Sorted triple forming a coset of the order-3 subgroup.
bool triangle(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n) {
  if (n % 3 != 0) return false;
  const std::int64_t step = n / 3;
  return b - a == step && c - b == step;
}

bool pentagon(std::span<const std::int64_t> s, std::int64_t n) {
  if (n % 5 != 0) return false;
  const std::int64_t step = n / 5;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i + 1] - s[i] != step) return false;
  }
  return true;
}

// Index sets used for k = 4 and k = 5.
constexpr std::array<std::array<int, 4>, 3> kPairings4 = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};

struct Split5 {
  int pair[2];
  int tri[3];
};

constexpr std::array<Split5, 10> kSplits5 = {{
    {{0, 1}, {2, 3, 4}}, {{0, 2}, {1, 3, 4}}, {{0, 3}, {1, 2, 4}}, {{0, 4}, {1, 2, 3}},
    {{1, 2}, {0, 3, 4}}, {{1, 3}, {0, 2, 4}}, {{1, 4}, {0, 2, 3}}, {{2, 3}, {0, 1, 4}},
    {{2, 4}, {0, 1, 3}}, {{3, 4}, {0, 1, 2}},
}};

VanishDecomposition classify(std::span<const std::int64_t> s, std::int64_t n) {
  VanishDecomposition out;
  switch (s.size()) {
    case 2:
      if (antipodal(s[0], s[1], n)) out = {VanishKind::kPair, {{s[0], s[1]}}};
      break;
    case 3:
      if (triangle(s[0], s[1], s[2], n)) out = {VanishKind::kTriangle, {{s[0], s[1], s[2]}}};
      break;
    case 4:
      for (const auto& p : kPairings4) {
        if (antipodal(s[p[0]], s[p[1]], n) && antipodal(s[p[2]], s[p[3]], n)) {
          out = {VanishKind::kTwoPairs, {{s[p[0]], s[p[1]]}, {s[p[2]], s[p[3]]}}};
          break;
        }
      }
      break;
    case 5:
      if (pentagon(s, n)) {
        out = {VanishKind::kPentagon, {{s.begin(), s.end()}}};
        break;
      }
      if (n % 6 != 0) break;
      for (const auto& sp : kSplits5) {
        if (antipodal(s[sp.pair[0]], s[sp.pair[1]], n) &&
            triangle(s[sp.tri[0]], s[sp.tri[1]], s[sp.tri[2]], n)) {
          out = {VanishKind::kTrianglePlusPair,
                 {{s[sp.tri[0]], s[sp.tri[1]], s[sp.tri[2]]}, {s[sp.pair[0]], s[sp.pair[1]]}}};
          break;
        }
      }
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

VanishDecomposition is_vanishing(const RootConfig& config) {
  if (config.size() > kMaxClassifiedRoots) {
    fail(ErrorCode::kUnsupportedK, "exact classification is offered for k <= 5 only");
  }
  return classify(config.angles(), config.n());
}

bool vanishes_sorted(std::span<const std::int64_t> sorted, std::int64_t n) {
  return classify(sorted, n).vanishes();
}

}  // namespace unitysum
