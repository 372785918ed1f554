#pragma once

// Extended-precision real numbers backed by MPFR.
//
// Every Real carries its own precision in bits. Binary operations round to
// the larger of the two operand precisions. All MPFR calls use
// round-to-nearest, so each elementary operation has error at most half an
// ulp of its result; callers that need certified bounds account for that.

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace unitysum {

class Real {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 128;

  Real() : Real(kDefaultBits) {}
  explicit Real(mpfr_prec_t bits);
  Real(double value, mpfr_prec_t bits);
  Real(long value, mpfr_prec_t bits);
  Real(int value, mpfr_prec_t bits) : Real(static_cast<long>(value), bits) {}
  Real(long long value, mpfr_prec_t bits)
      : Real(static_cast<long>(value), bits) {}

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  // Parses a decimal string ("1.25e-3", "-7", ...). Throws Error on junk.
  static Real parse(std::string_view text, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);

  // Bits needed to carry `digits` significant decimals plus guard bits.
  static mpfr_prec_t bits_for_digits(int digits, int guard_bits = 32);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  Real with_precision(mpfr_prec_t bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }

  // Scientific notation with exactly `significant` significant decimals,
  // round-to-nearest-even on the exact binary value.
  std::string sci(int significant) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  // Binary exponent e with 2^(e-1) <= |x| < 2^e; only meaningful if nonzero.
  long exponent() const { return mpfr_get_exp(value_); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_less_p(a.value_, b.value_) != 0;
  }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_lessequal_p(a.value_, b.value_) != 0;
  }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }
  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real log(const Real& x);
Real hypot(const Real& x, const Real& y);
Real square(const Real& x);

// x * 2^e, exact.
Real ldexp(const Real& x, long e);

}  // namespace unitysum
