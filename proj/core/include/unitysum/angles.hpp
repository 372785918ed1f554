#pragma once

// Exact angles, root configurations and their extended-precision evaluation.
//
// An n-th root of unity is stored as its integer numerator a in [0, n); the
// root itself is e(a/n) = exp(2*pi*i*a/n). Trigonometric values are never
// computed from a floating-point angle: the rational a/n is folded into the
// first octant exactly, in integer arithmetic, before any real evaluation.

#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "unitysum/ext_real.hpp"

namespace unitysum {

inline constexpr std::size_t kMaxRoots = 16;
inline constexpr int kMinDigits = 15;
inline constexpr int kMaxDigits = 60;

// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  Real to_real(mpfr_prec_t bits) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// The root e(num/den); den is the globally fixed n, no reduction applied.
struct RationalAngle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den);

  friend auto operator<=>(const RationalAngle&, const RationalAngle&) = default;
};

// A multiset of k numerators over a common denominator n, kept sorted.
class RootConfig {
 public:
  RootConfig() = default;
  // Throws Error(kInvalidConfig) unless 1 <= k <= kMaxRoots and every
  // numerator lies in [0, n).
  RootConfig(std::int64_t n, std::vector<std::int64_t> numerators);
  RootConfig(std::int64_t n, std::initializer_list<std::int64_t> numerators)
      : RootConfig(n, std::vector<std::int64_t>(numerators)) {}

  // Like the constructor but reduces every numerator mod n first.
  static RootConfig from_residues(std::int64_t n, std::vector<std::int64_t> numerators);

  std::int64_t n() const { return n_; }
  std::size_t size() const { return angles_.size(); }
  std::span<const std::int64_t> angles() const { return angles_; }
  std::int64_t operator[](std::size_t i) const { return angles_[i]; }
  RationalAngle angle(std::size_t i) const { return {angles_[i], n_}; }

  RootConfig rotated(std::int64_t shift) const;
  RootConfig reflected() const;

  std::string to_string() const;

  friend bool operator==(const RootConfig&, const RootConfig&) = default;
  friend auto operator<=>(const RootConfig& a, const RootConfig& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.angles_ <=> b.angles_;
  }

 private:
  std::int64_t n_ = 1;
  std::vector<std::int64_t> angles_;
};

// Least element, in lexicographic order of the sorted numerators, among all
// rotations that move some root to 0, with and without reflection.
RootConfig canonicalize(const RootConfig& config);

// Nonnegative extended-precision value with a certified absolute error.
struct Magnitude {
  Real value;
  int digits = 30;
  double err_bound = 0.0;

  double approx() const { return value.to_double(); }
  std::string str() const { return value.sci(digits); }
};

struct CosSin {
  Real cos;
  Real sin;
};

// cos and sin of 2*pi*num/den. |den| must be <= 2^60. Absolute error of each
// component is below kTrigErrorUlps * 2^-bits.
CosSin cos_sin_turns(std::int64_t num, std::int64_t den, mpfr_prec_t bits);
CosSin cos_sin_turns(const Rational& turns, mpfr_prec_t bits);
inline constexpr double kTrigErrorUlps = 4.0;

// |sum_i e(a_i/n)| with err_bound <= 10^(2-digits).
// Throws kPrecisionUnachievable for digits > kMaxDigits and kInvalidArgument
// for digits < kMinDigits.
Magnitude eval_magnitude(const RootConfig& config, int digits = 30);

// Double-precision table of e(i/n) built through the exact octant fold in
// long double; each entry is within one rounding of the true value.
class RootTable {
 public:
  explicit RootTable(std::int64_t n);

  std::int64_t n() const { return n_; }
  double cos(std::int64_t i) const { return cos_[static_cast<std::size_t>(i)]; }
  double sin(std::int64_t i) const { return sin_[static_cast<std::size_t>(i)]; }
  const double* cos_data() const { return cos_.data(); }
  const double* sin_data() const { return sin_.data(); }

  std::complex<double> sum(std::span<const std::int64_t> numerators) const;

 private:
  std::int64_t n_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

// Long-double evaluation of e(num/den) through the same exact fold.
std::complex<long double> unit_root_ld(std::int64_t num, std::int64_t den);

}  // namespace unitysum
