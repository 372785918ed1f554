#include "unitysum/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "unitysum/errors.hpp"

namespace unitysum {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::kInvalidArgument, "rational overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// num/den turns == quarter/4 + sign * q/(8*den) turns, 0 <= q <= den.
struct OctantFold {
  int quarter;
  int sign;
  std::int64_t q;
  std::int64_t den;
};

constexpr std::int64_t kMaxTrigDen = std::int64_t{1} << 60;

OctantFold fold(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || den > kMaxTrigDen) fail(ErrorCode::kInvalidArgument, "turn denominator out of range");
  const i128 t = mod(num, den);
  const i128 m = 8 * t;
  const auto octant = static_cast<int>(m / den);
  const auto q = static_cast<std::int64_t>(m - static_cast<i128>(octant) * den);
  if (octant % 2 == 0) return {octant / 2, +1, q, den};
  return {((octant + 1) / 2) % 4, -1, den - q, den};
}

template <class T>
void rotate_quarter(int quarter, T& c, T& s) {
  switch (quarter) {
    case 0: break;
    case 1: { T t = -s; s = c; c = t; break; }
    case 2: { c = -c; s = -s; break; }
    default: { T t = s; s = -c; c = t; break; }
  }
}

// num/den with den > 0, reduced in 128 bits before narrowing.
Rational reduced(i128 num, i128 den) {
  i128 x = num < 0 ? -num : num;
  i128 y = den;
  while (y != 0) {
    const i128 r = x % y;
    x = y;
    y = r;
  }
  const i128 g = x == 0 ? 1 : x;
  return Rational(narrow(num / g), narrow(den / g));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Real Rational::to_real(mpfr_prec_t bits) const {
  Real out(static_cast<long>(num_), bits);
  return out / static_cast<long>(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return reduced(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                 static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return reduced(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RationalAngle::RationalAngle(std::int64_t num_in, std::int64_t den_in) : num(num_in), den(den_in) {
  if (den < 1 || num < 0 || num >= den) {
    fail(ErrorCode::kInvalidConfig, "angle numerator must lie in [0, den)");
  }
}

RootConfig::RootConfig(std::int64_t n, std::vector<std::int64_t> numerators)
    : n_(n), angles_(std::move(numerators)) {
  if (n_ < 1) fail(ErrorCode::kInvalidConfig, "n must be >= 1");
  if (angles_.empty() || angles_.size() > kMaxRoots) {
    fail(ErrorCode::kInvalidConfig, "number of roots must be in [1, 16]");
  }
  for (std::int64_t a : angles_) {
    if (a < 0 || a >= n_) fail(ErrorCode::kInvalidConfig, "numerator outside [0, n)");
  }
  std::sort(angles_.begin(), angles_.end());
}

RootConfig RootConfig::from_residues(std::int64_t n, std::vector<std::int64_t> numerators) {
  if (n < 1) fail(ErrorCode::kInvalidConfig, "n must be >= 1");
  for (auto& a : numerators) a = mod(a, n);
  return RootConfig(n, std::move(numerators));
}

RootConfig RootConfig::rotated(std::int64_t shift) const {
  std::vector<std::int64_t> out(angles_);
  for (auto& a : out) a = mod(a + shift, n_);
  return RootConfig(n_, std::move(out));
}

RootConfig RootConfig::reflected() const {
  std::vector<std::int64_t> out(angles_);
  for (auto& a : out) a = mod(-a, n_);
  return RootConfig(n_, std::move(out));
}

std::string RootConfig::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " {";
  for (std::size_t i = 0; i < angles_.size(); ++i) os << (i ? "," : "") << angles_[i];
  os << "}";
  return os.str();
}

RootConfig canonicalize(const RootConfig& config) {
  const std::int64_t n = config.n();
  const std::size_t k = config.size();
  std::vector<std::int64_t> best;
  std::vector<std::int64_t> cur(k);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t pivot = 0; pivot < k; ++pivot) {
      const std::int64_t p = config[pivot];
      for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t a = reflect ? p - config[i] : config[i] - p;
        cur[i] = mod(a, n);
      }
      std::sort(cur.begin(), cur.end());
      if (best.empty() || cur < best) best = cur;
    }
  }
  return RootConfig(n, std::move(best));
}

CosSin cos_sin_turns(std::int64_t num, std::int64_t den, mpfr_prec_t bits) {
  const OctantFold f = fold(num, den);
  CosSin out{Real(1L, bits), Real(0L, bits)};
  if (f.q != 0) {
    // x = 2*pi*q/(8*den) in [0, pi/4].
    Real x = Real::pi(bits);
    x *= static_cast<long>(f.q);
    x /= static_cast<long>(f.den);
    x = ldexp(x, -2);
    mpfr_sin_cos(out.sin.get(), out.cos.get(), x.get(), MPFR_RNDN);
    if (f.sign < 0) out.sin = -out.sin;
  }
  rotate_quarter(f.quarter, out.cos, out.sin);
  return out;
}

CosSin cos_sin_turns(const Rational& turns, mpfr_prec_t bits) {
  return cos_sin_turns(turns.num(), turns.den(), bits);
}

Magnitude eval_magnitude(const RootConfig& config, int digits) {
  if (digits > kMaxDigits) {
    fail(ErrorCode::kPrecisionUnachievable, "at most " + std::to_string(kMaxDigits) + " digits supported");
  }
  if (digits < kMinDigits) {
    fail(ErrorCode::kInvalidArgument, "at least " + std::to_string(kMinDigits) + " digits required");
  }
  const mpfr_prec_t bits = Real::bits_for_digits(digits);
  Real sum_cos(0L, bits);
  Real sum_sin(0L, bits);
  for (std::int64_t a : config.angles()) {
    const CosSin cs = cos_sin_turns(a, config.n(), bits);
    sum_cos += cs.cos;
    sum_sin += cs.sin;
  }
  Magnitude out{hypot(sum_cos, sum_sin), digits, 0.0};
  // Component error: k trig values plus k-1 roundings of partial sums of
  // size <= k. hypot adds half an ulp of a value <= k.
  const auto k = static_cast<double>(config.size());
  const double unit = std::ldexp(1.0, -static_cast<int>(bits));
  const double component = (kTrigErrorUlps * k + k * (k - 1.0)) * unit;
  out.err_bound = (std::sqrt(2.0) * component + k * unit) * (1.0 + 1e-12);
  return out;
}

std::complex<long double> unit_root_ld(std::int64_t num, std::int64_t den) {
  const OctantFold f = fold(num, den);
  long double c = 1.0L;
  long double s = 0.0L;
  if (f.q != 0) {
    const long double x = std::numbers::pi_v<long double> * static_cast<long double>(f.q) /
                          (4.0L * static_cast<long double>(f.den));
    c = std::cos(x);
    s = f.sign * std::sin(x);
  }
  rotate_quarter(f.quarter, c, s);
  return {c, s};
}

RootTable::RootTable(std::int64_t n) : n_(n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "table size must be >= 1");
  cos_.resize(static_cast<std::size_t>(n));
  sin_.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const auto z = unit_root_ld(i, n);
    cos_[static_cast<std::size_t>(i)] = static_cast<double>(z.real());
    sin_[static_cast<std::size_t>(i)] = static_cast<double>(z.imag());
  }
}

std::complex<double> RootTable::sum(std::span<const std::int64_t> numerators) const {
  double x = 0.0;
  double y = 0.0;
  for (std::int64_t a : numerators) {
    x += cos(a);
    y += sin(a);
  }
  return {x, y};
}

}  // namespace unitysum
