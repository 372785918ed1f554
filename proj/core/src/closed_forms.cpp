#include "unitysum/closed_forms.hpp"

#include <cmath>

#include "unitysum/errors.hpp"

namespace unitysum {

namespace {

void check_digits(int digits) {
  if (digits > kMaxDigits) fail(ErrorCode::kPrecisionUnachievable, "too many digits");
  if (digits < kMinDigits) fail(ErrorCode::kInvalidArgument, "too few digits");
}

// sin(2*pi*num/den)
Real sin_turns(std::int64_t num, std::int64_t den, mpfr_prec_t bits) {
  return cos_sin_turns(num, den, bits).sin;
}

Magnitude formula(Real value, int digits) {
  const double unit = std::ldexp(1.0, -static_cast<int>(value.precision()));
  return Magnitude{abs(value), digits, 32.0 * unit};
}

ClosedFormResult make(int k, std::int64_t n, Real value, int digits, std::vector<std::int64_t> witness,
                      std::string regime) {
  return ClosedFormResult{k, n, formula(std::move(value), digits),
                          RootConfig::from_residues(n, std::move(witness)), std::move(regime)};
}

}  // namespace

ClosedFormResult f2_closed(std::int64_t n, int digits) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  check_digits(digits);
  const mpfr_prec_t bits = Real::bits_for_digits(digits);
  if (n == 1) return make(2, n, Real(2L, bits), digits, {0, 0}, "n = 1");
  if (n % 2 == 0) {
    return make(2, n, sin_turns(1, 2 * n, bits) * 2L, digits, {0, n / 2 - 1}, "n even");
  }
  return make(2, n, sin_turns(1, 4 * n, bits) * 2L, digits, {0, (n - 1) / 2}, "n odd");
}

ClosedFormResult f3_closed(std::int64_t n, int digits) {
  if (n < kF3MinN || n < 1) fail(ErrorCode::kBelowThreshold, "n below the certified threshold");
  check_digits(digits);
  const mpfr_prec_t bits = Real::bits_for_digits(digits);
  if (n % 3 == 0) {
    return make(3, n, sin_turns(1, 2 * n, bits) * 2L, digits, {1, n / 3, 2 * n / 3}, "n = 0 mod 3");
  }
  // sqrt(3) sin(2 pi/3n) -+ 2 sin^2(pi/3n)
  Real lead = sqrt(Real(3L, bits)) * sin_turns(1, 3 * n, bits);
  Real corr = square(sin_turns(1, 6 * n, bits)) * 2L;
  if (n % 3 == 2) {
    const std::int64_t c = (n + 1) / 3;
    return make(3, n, lead - corr, digits, {0, c, n - c}, "n = 2 mod 3");
  }
  const std::int64_t c = (n - 1) / 3;
  return make(3, n, lead + corr, digits, {0, c, n - c}, "n = 1 mod 3");
}

ClosedFormResult f4_closed(std::int64_t n, int digits) {
  if (n < kF4MinN) fail(ErrorCode::kInvalidArgument, "f(4,n) needs n >= 2");
  check_digits(digits);
  const mpfr_prec_t bits = Real::bits_for_digits(digits);
  if (n == 2) return make(4, n, Real(2L, bits), digits, {0, 0, 0, 1}, "small-n exception");
  if (n == 4) return make(4, n, sqrt(Real(2L, bits)), digits, {0, 0, 1, 2}, "small-n exception");
  if (n % 2 == 0) {
    const std::int64_t a = n / 2 - 1;
    return make(4, n, square(sin_turns(1, 2 * n, bits)) * 4L, digits, {0, a, a, 2 * a}, "n even");
  }
  const std::int64_t a = (n - 1) / 2;
  return make(4, n, square(sin_turns(1, 4 * n, bits)) * 4L, digits, {0, a, a, 2 * a}, "n odd");
}

ClosedFormResult closed_form(int k, std::int64_t n, int digits) {
  switch (k) {
    case 2: return f2_closed(n, digits);
    case 3: return f3_closed(n, digits);
    case 4: return f4_closed(n, digits);
    default: fail(ErrorCode::kUnsupportedK, "closed forms exist for k in {2,3,4}");
  }
}

double Sqrt3Half::to_double() const { return (p.to_double() + q.to_double() * std::sqrt(3.0)) / 2.0; }

Rational LatticeVector::norm_squared() const {
  // ((p + q r3)/2)^2 with one of p, q zero in each coordinate.
  auto sq = [](const Sqrt3Half& c) { return (c.p * c.p + Rational(3) * c.q * c.q) * Rational(1, 4); };
  return sq(x) + sq(y);
}

double LatticeVector::length() const { return std::sqrt(norm_squared().to_double()); }

LatticeVector lattice_t(std::int64_t a, std::int64_t b, const Rational& offset) {
  if (!(offset == Rational(0) || offset == Rational(1, 3) || offset == Rational(-1, 3))) {
    fail(ErrorCode::kInvalidArgument, "offset must be 0 or +-1/3");
  }
  // e(+-1/12) = (sqrt3 +- i)/2
  const Rational alpha = Rational(a) + offset;
  const Rational beta = Rational(b) + offset;
  return LatticeVector{Sqrt3Half{Rational(0), alpha + beta}, Sqrt3Half{alpha - beta, Rational(0)}};
}

}  // namespace unitysum
