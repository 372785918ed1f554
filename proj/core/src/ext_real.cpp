#include "unitysum/ext_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unitysum/errors.hpp"

namespace unitysum {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kPrecisionUnachievable: return "precision-unachievable";
    case ErrorCode::kUnsupportedK: return "unsupported-k";
    case ErrorCode::kBelowThreshold: return "below-threshold";
    case ErrorCode::kCostGuard: return "cost-guard";
    case ErrorCode::kOracleTooLarge: return "oracle-too-large";
    case ErrorCode::kIllegalCongruence: return "illegal-congruence";
    case ErrorCode::kNotPte: return "not-a-pte-solution";
    case ErrorCode::kOutOfRegime: return "out-of-regime";
    case ErrorCode::kSignCondition: return "sign-condition";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kEmptySelection: return "empty-selection";
  }
  return "unknown";
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // mpfr_swap needs an initialized target; a 2-bit placeholder is enough.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, mpfr_prec_t bits) {
  Real out(bits);
  std::string buf(text);
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(out.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    fail(ErrorCode::kInvalidArgument, "not a decimal number: '" + buf + "'");
  }
  return out;
}

Real Real::pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

mpfr_prec_t Real::bits_for_digits(int digits, int guard_bits) {
  // log2(10) = 3.3219...
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + guard_bits;
}

Real Real::with_precision(mpfr_prec_t bits) const {
  Real out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string Real::sci(int significant) const {
  significant = std::max(significant, 1);
  char* raw = nullptr;
  const int len = mpfr_asprintf(&raw, "%.*RNe", significant - 1, value_);
  if (len < 0 || raw == nullptr) fail(ErrorCode::kIo, "mpfr_asprintf failed");
  std::string out(raw, static_cast<std::size_t>(len));
  mpfr_free_str(raw);
  return out;
}

namespace {

mpfr_prec_t joint(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  if (precision() < rhs.precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (precision() < rhs.precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (precision() < rhs.precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (precision() < rhs.precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sin(const Real& x) {
  Real out(x.precision());
  mpfr_sin(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real cos(const Real& x) {
  Real out(x.precision());
  mpfr_cos(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real hypot(const Real& x, const Real& y) {
  Real out(joint(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real square(const Real& x) {
  Real out(x.precision());
  mpfr_sqr(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real ldexp(const Real& x, long e) {
  Real out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), e, MPFR_RNDN);
  return out;
}

}  // namespace unitysum
