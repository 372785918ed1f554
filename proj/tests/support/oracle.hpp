#pragma once

// Reference computations for the tests. Deliberately share nothing with the
// library: 50-digit binary floats from Boost, angles reduced as plain
// 2*pi*a/n, brute-force enumeration, a separate canonical form.

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Float = boost::multiprecision::cpp_bin_float_50;

inline Float pi() { return boost::math::constants::pi<Float>(); }

inline Float cos_turns(std::int64_t a, std::int64_t n) {
  return boost::multiprecision::cos(2 * pi() * Float(a) / Float(n));
}

inline Float sin_turns(std::int64_t a, std::int64_t n) {
  return boost::multiprecision::sin(2 * pi() * Float(a) / Float(n));
}

struct Table {
  std::vector<Float> c;
  std::vector<Float> s;

  explicit Table(std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) {
      c.push_back(cos_turns(i, n));
      s.push_back(sin_turns(i, n));
    }
  }
};

inline Float magnitude(const std::vector<std::int64_t>& a, std::int64_t n) {
  Float x = 0;
  Float y = 0;
  for (auto v : a) {
    x += cos_turns(v, n);
    y += sin_turns(v, n);
  }
  return boost::multiprecision::sqrt(x * x + y * y);
}

// Least sorted rotation-to-zero, with and without reflection.
inline std::vector<std::int64_t> canonical(std::vector<std::int64_t> a, std::int64_t n) {
  std::vector<std::int64_t> best;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::int64_t p : a) {
      std::vector<std::int64_t> cur;
      for (std::int64_t x : a) {
        const std::int64_t d = reflect ? p - x : x - p;
        cur.push_back(((d % n) + n) % n);
      }
      std::sort(cur.begin(), cur.end());
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

// Calls f on every sorted k-multiset of [0, n) whose least element is 0.
inline void multisets_with_zero(int k, std::int64_t n, const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> cur(static_cast<std::size_t>(k), 0);
  std::function<void(int, std::int64_t)> rec = [&](int depth, std::int64_t start) {
    if (depth == k) {
      f(cur);
      return;
    }
    for (std::int64_t v = start; v < n; ++v) {
      cur[static_cast<std::size_t>(depth)] = v;
      rec(depth + 1, v);
    }
  };
  rec(1, 0);
}

struct Minimum {
  Float value;
  std::vector<std::int64_t> witness;  // canonical
};

// Smallest nonzero |sum|; exact zeros are those below 1e-40. Values within
// 1e-35 of each other count as ties and the least canonical witness wins.
inline Minimum brute_min(int k, std::int64_t n) {
  const Table t(n);
  const Float zero("1e-40");
  const Float tie("1e-35");
  Minimum best{Float(1e9), {}};
  multisets_with_zero(k, n, [&](const std::vector<std::int64_t>& a) {
    Float x = 0;
    Float y = 0;
    for (auto v : a) {
      x += t.c[static_cast<std::size_t>(v)];
      y += t.s[static_cast<std::size_t>(v)];
    }
    const Float m = boost::multiprecision::sqrt(x * x + y * y);
    if (m < zero) return;
    if (m < best.value - tie) {
      best = {m, canonical(a, n)};
    } else if (boost::multiprecision::abs(m - best.value) <= tie) {
      auto c = canonical(a, n);
      if (c < best.witness) best.witness = c;
      if (m < best.value) best.value = m;
    }
  });
  return best;
}

}  // namespace oracle
