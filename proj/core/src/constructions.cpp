#include "unitysum/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "unitysum/errors.hpp"
#include "unitysum/vanishing.hpp"

namespace unitysum {

namespace {

mpfr_prec_t bits_of(int digits) {
  if (digits > kMaxDigits) fail(ErrorCode::kPrecisionUnachievable, "too many digits");
  if (digits < kMinDigits) fail(ErrorCode::kInvalidArgument, "too few digits");
  return Real::bits_for_digits(digits);
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// 1 + 2c(p + alpha) + 2c(q + beta) for rational base angles p, q.
Real two_cos_sum(const Rational& p, const Rational& alpha, const Rational& q, const Rational& beta,
                 mpfr_prec_t bits) {
  Real out(1L, bits);
  out += cos_sin_turns(p + alpha, bits).cos * 2L;
  out += cos_sin_turns(q + beta, bits).cos * 2L;
  return out;
}

Real pi_power(int e, mpfr_prec_t bits) {
  Real out(1L, bits);
  const Real pi = Real::pi(bits);
  for (int i = 0; i < e; ++i) out *= pi;
  return out;
}

Real sin_pi_5(mpfr_prec_t bits) { return cos_sin_turns(1, 10, bits).sin; }

FamilyBound realize(Family family, std::int64_t n, std::vector<std::int64_t> params,
                    std::vector<std::int64_t> numerators) {
  FamilyBound out;
  out.family = family;
  out.n = n;
  out.params = std::move(params);
  out.config = RootConfig::from_residues(n, std::move(numerators));
  out.value = eval_magnitude(out.config, 30);
  bool zero = false;
  if (out.config.size() <= kMaxClassifiedRoots) {
    zero = is_vanishing(out.config).vanishes();
  } else {
    zero = out.value.value < Real(1e-35, out.value.value.precision());
  }
  out.legal = !zero;
  if (zero) out.reason = "configuration vanishes";
  return out;
}

FamilyBound illegal(Family family, std::int64_t n, std::vector<std::int64_t> params, std::string reason) {
  FamilyBound out;
  out.family = family;
  out.n = n;
  out.params = std::move(params);
  out.legal = false;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

Real phi(mpfr_prec_t bits) {
  Real out = sqrt(Real(5L, bits));
  out += Real(1L, bits);
  return ldexp(out, -1);
}

BigInt fib(int m) {
  if (m < 0) fail(ErrorCode::kInvalidArgument, "fib index must be >= 0");
  BigInt a = 0;
  BigInt b = 1;
  for (int i = 0; i < m; ++i) {
    BigInt t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

Real to_real(const BigInt& x, mpfr_prec_t bits) { return Real::parse(x.str(), bits); }

ApproxPair fib_approx_pair(int j, int r) {
  if (j < 0 || r < 0 || r > 4) fail(ErrorCode::kInvalidArgument, "need j >= 0 and r in [0, 4]");
  const int s = 20 * j;
  ApproxPair out;
  out.j = j;
  out.r = r;
  switch (r) {
    case 0:
      out.a = 5 * fib(s + 1);
      out.b = -5 * fib(s + 2);
      break;
    case 1:
      out.a = fib(s + 1) + 2 * fib(s + 20);
      out.b = -(fib(s + 2) + 2 * fib(s + 21));
      break;
    case 4:
      out.a = fib(s + 11) + 2 * fib(s + 30);
      out.b = -(fib(s + 12) + 2 * fib(s + 31));
      break;
    case 3:
      out.a = fib(s + 26) + 2 * fib(s + 5);
      out.b = -(fib(s + 27) + 2 * fib(s + 6));
      break;
    default:
      out.a = fib(s + 36) + 2 * fib(s + 15);
      out.b = -(fib(s + 37) + 2 * fib(s + 16));
      break;
  }
  // a*phi + b cancels about bitlen(a) bits.
  const auto bits = static_cast<mpfr_prec_t>(2 * msb(abs(out.a)) + 128);
  out.quality = to_real(out.a, bits) * phi(bits) + to_real(out.b, bits);
  const BigInt a5 = ((out.a % 5) + 5) % 5;
  const BigInt b5 = ((out.b % 5) + 5) % 5;
  if (a5 != r || b5 != (2 * r) % 5 || out.quality.sign() <= 0) {
    fail(ErrorCode::kInvalidConfig, "approximant pair violates its contract");
  }
  return out;
}

Real z5_exact(const Rational& alpha, const Rational& beta, int digits) {
  return two_cos_sum(Rational(1, 5), alpha, Rational(2, 5), beta, bits_of(digits));
}

Real z5_series3(const Rational& alpha, const Rational& beta, int digits) {
  if (std::abs(alpha.to_double()) > 0.05 || std::abs(beta.to_double()) > 0.05) {
    fail(ErrorCode::kOutOfRegime, "series needs |alpha|, |beta| <= 0.05");
  }
  const mpfr_prec_t bits = bits_of(digits);
  const Real p = phi(bits);
  const Real s = sin_pi_5(bits);
  const Real al = alpha.to_real(bits);
  const Real be = beta.to_real(bits);
  // -4 pi s [al phi + be] - 2 pi^2 [al^2/phi - be^2 phi] + (8 pi^3 s/3)[al^3 phi + be^3]
  Real lin = (al * p + be) * s * pi_power(1, bits) * (-4L);
  Real quad = (square(al) / p - square(be) * p) * pi_power(2, bits) * (-2L);
  Real cub = (square(al) * al * p + square(be) * be) * s * pi_power(3, bits) * 8L / 3L;
  return lin + quad + cub;
}

Real z3i_exact(const Rational& alpha, const Rational& beta, int digits) {
  return two_cos_sum(Rational(1, 3), alpha, Rational(1, 4), beta, bits_of(digits));
}

Real z3r_exact(const Rational& alpha, const Rational& beta, int digits) {
  return two_cos_sum(Rational(1, 6), alpha, Rational(1, 2), beta, bits_of(digits));
}

Real z3r_series2(const Rational& alpha, const Rational& beta, int digits) {
  const mpfr_prec_t bits = bits_of(digits);
  const Real al = alpha.to_real(bits);
  const Real be = beta.to_real(bits);
  Real lin = al * sqrt(Real(3L, bits)) * pi_power(1, bits) * (-2L);
  Real quad = (square(be) * 2L - square(al)) * pi_power(2, bits) * 2L;
  return lin + quad;
}

const char* to_string(Family family) {
  switch (family) {
    case Family::kZ5Fib: return "z5-fib";
    case Family::kZ5Dip: return "z5-dip";
    case Family::kZ3i: return "z3i";
    case Family::kLift6: return "lift6";
    case Family::kZ3rQuad: return "z3r-quad";
    case Family::kPte: return "pte";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "z5-fib" || name == "thm1") return Family::kZ5Fib;
  if (name == "z5-dip") return Family::kZ5Dip;
  if (name == "z3i") return Family::kZ3i;
  if (name == "lift6" || name == "z3r-lift") return Family::kLift6;
  if (name == "z3r-quad") return Family::kZ3rQuad;
  if (name == "pte") return Family::kPte;
  fail(ErrorCode::kInvalidArgument, "unknown family '" + std::string(name) + "'");
}

namespace {

struct PairAB {
  std::int64_t a;
  std::int64_t b;
  friend auto operator<=>(const PairAB&, const PairAB&) = default;
};

std::set<PairAB> thm1_candidates(std::int64_t n) {
  const std::int64_t r = mod(-n, 5);
  const auto limit = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n))));
  std::set<PairAB> out;
  // Fibonacci sequences; (-a, -b) of residue -r covers the negative side.
  for (int sign : {1, -1}) {
    const auto rr = static_cast<int>(sign > 0 ? r : mod(-r, 5));
    for (int j = 0;; ++j) {
      const ApproxPair p = fib_approx_pair(j, rr);
      if (abs(p.a) > limit) break;
      out.insert({sign * p.a.convert_to<std::int64_t>(), sign * p.b.convert_to<std::int64_t>()});
    }
  }
  // Best approximations of -a*phi by b in the residue class 2r (mod 5).
  const double ph = std::numbers::phi;
  const std::int64_t t = mod(2 * r, 5);
  for (int sign : {1, -1}) {
    double record = std::numeric_limits<double>::infinity();
    for (std::int64_t m = 1; m <= limit; ++m) {
      const std::int64_t a = sign * m;
      if (mod(a, 5) != r) continue;
      auto lo = static_cast<std::int64_t>(std::floor(-static_cast<double>(a) * ph));
      lo -= mod(lo - t, 5);
      for (std::int64_t b : {lo, lo + 5}) {
        const double q = std::abs(static_cast<double>(a) * ph + static_cast<double>(b));
        if (q < record) {
          record = q;
          out.insert({a, b});
        }
      }
    }
  }
  return out;
}

bool better(const FamilyBound& a, const FamilyBound& b) {
  if (!b.legal) return a.legal;
  if (!a.legal) return false;
  return a.value.value < b.value.value;
}

}  // namespace

FamilyBound thm1_bound(std::int64_t n) {
  if (n < 25) fail(ErrorCode::kInvalidArgument, "thm1_bound needs n >= 25");
  FamilyBound best = illegal(Family::kZ5Fib, n, {}, "no approximant pair in range");
  for (const auto& [a, b] : thm1_candidates(n)) {
    if ((n + a) % 5 != 0 || (2 * n + b) % 5 != 0) {
      fail(ErrorCode::kIllegalCongruence, "approximant pair has the wrong residues");
    }
    const std::int64_t x = (n + a) / 5;
    const std::int64_t y = (2 * n + b) / 5;
    FamilyBound cand = realize(Family::kZ5Fib, n, {a, b}, {0, x, -x, y, -y});
    if (better(cand, best)) best = std::move(cand);
  }
  return best;
}

DipLocation dip_locate(int j) {
  if (j < 3) fail(ErrorCode::kInvalidArgument, "dip_locate needs j >= 3");
  DipLocation out;
  out.j = j;
  out.a = fib(2 * j - 1).convert_to<std::int64_t>();
  out.b = -fib(2 * j).convert_to<std::int64_t>();
  const mpfr_prec_t bits = 256;
  const Real p = phi(bits);
  const Real s = sin_pi_5(bits);
  const Real a(static_cast<long>(out.a), bits);
  const Real b(static_cast<long>(out.b), bits);
  const Real A = (a * p + b) * s * pi_power(1, bits) * 4L;
  const Real B = (square(a) / p - square(b) * p) * pi_power(2, bits) * 2L;
  const Real C = -((square(a) * a * p + square(b) * b) * s * pi_power(3, bits) * 8L / 3L);
  if (A.sign() <= 0 || B.sign() >= 0 || C.sign() <= 0) {
    fail(ErrorCode::kSignCondition, "dip needs A > 0, B < 0, C > 0");
  }
  const Real one(1L, bits);
  const Real disc = one - A * C * 4L / square(B);
  const Real n0 = -(B / (A * 2L)) * (one + sqrt(disc));
  out.A = A.to_double();
  out.B = B.to_double();
  out.C = C.to_double();
  out.n0 = n0.to_double();
  out.n_star = 5 * static_cast<std::int64_t>(std::llround(out.n0 / 5.0));
  return out;
}

FamilyBound z5_dip_bound(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 5) fail(ErrorCode::kInvalidArgument, "n must be >= 5");
  if (n % 5 != 0) return illegal(Family::kZ5Dip, n, {a, b}, "needs 5 | n");
  const std::int64_t x = n / 5 + a;
  const std::int64_t y = 2 * n / 5 + b;
  return realize(Family::kZ5Dip, n, {a, b}, {0, x, -x, y, -y});
}

FamilyBound z3i_bound(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (mod(a + n, 3) != 0 || mod(b + n, 4) != 0) {
    return illegal(Family::kZ3i, n, {a, b}, "needs a = -n (mod 3) and b = -n (mod 4)");
  }
  const std::int64_t x = (n + a) / 3;
  const std::int64_t y = (n + b) / 4;
  return realize(Family::kZ3i, n, {a, b}, {0, x, -x, y, -y});
}

FamilyBound z3r_bound(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (n % 6 != 0) return illegal(Family::kZ3rQuad, n, {a, b}, "needs 6 | n");
  const std::int64_t x = n / 6 + a;
  return realize(Family::kZ3rQuad, n, {a, b}, {0, x, -x, n / 2 + b, n / 2 - b});
}

FamilyBound lift6_bound(std::int64_t n) {
  FamilyBound out = z3r_bound(n, 0, 1);
  out.family = Family::kLift6;
  out.params.clear();
  return out;
}

std::int64_t default_quad_q(std::int64_t n) {
  return std::max<std::int64_t>(1, std::llround(std::pow(static_cast<double>(n), 21.0 / 32.0)));
}

QuadApprox quad_approx(const Real& xi, std::int64_t Q) {
  if (Q < 1) fail(ErrorCode::kInvalidArgument, "Q must be >= 1");
  if (!xi.is_finite()) fail(ErrorCode::kInvalidArgument, "xi must be finite");
  QuadApprox best;
  Real best_res(xi.precision());
  for (std::int64_t q = 1; q <= Q; ++q) {
    Real x = xi * static_cast<long>(q) * static_cast<long>(q);
    Real p(x.precision());
    mpfr_round(p.get(), x.get());
    Real res = abs(x - p);
    if (q == 1 || res < best_res) {
      best_res = res;
      best.q = q;
      best.p = mpfr_get_si(p.get(), MPFR_RNDN);
    }
  }
  best.residual = best_res.to_double();
  return best;
}

FamilyBound z3r_quad_bound(std::int64_t n, std::int64_t Q) {
  if (Q < 1 || Q > n) fail(ErrorCode::kInvalidArgument, "need 1 <= Q <= n");
  if (n % 6 != 0) return illegal(Family::kZ3rQuad, n, {}, "needs 6 | n");
  const mpfr_prec_t bits = Real::bits_for_digits(40);
  // 2 pi/(sqrt3 n)
  Real xi = Real::pi(bits) * 2L / sqrt(Real(3L, bits)) / static_cast<long>(n);
  const QuadApprox qa = quad_approx(xi, Q);
  // a = +p puts the linear term against the quadratic one.
  FamilyBound out = z3r_bound(n, qa.p, qa.q);
  out.params = {qa.p, qa.q, Q};
  return out;
}

bool is_pte(const PteSolution& s) {
  if (s.a.size() != s.b.size() || s.a.empty()) return false;
  const std::size_t m = s.m();
  for (std::size_t e = 0; e < m; ++e) {
    BigInt lhs = 0;
    BigInt rhs = 0;
    for (std::size_t i = 0; i < m; ++i) {
      lhs += boost::multiprecision::pow(BigInt(s.a[i]), static_cast<unsigned>(e));
      rhs += boost::multiprecision::pow(BigInt(s.b[i]), static_cast<unsigned>(e));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

FamilyBound pte_sum(const PteSolution& s, std::int64_t n) {
  if (s.a.size() != s.b.size() || s.a.empty() || s.m() > 12) {
    fail(ErrorCode::kInvalidArgument, "need two lists of equal length m in [1, 12]");
  }
  if (n < 2 || n % 2 != 0) fail(ErrorCode::kInvalidArgument, "pte sums need even n");
  if (!is_pte(s)) fail(ErrorCode::kNotPte, "power sums differ");
  std::vector<std::int64_t> params(s.a);
  params.insert(params.end(), s.b.begin(), s.b.end());
  std::vector<std::int64_t> nums(s.a);
  for (std::int64_t b : s.b) nums.push_back(b + n / 2);
  return realize(Family::kPte, n, std::move(params), std::move(nums));
}

RootConfig lift_root(const RootConfig& config, std::size_t i) {
  const std::int64_t n = config.n();
  if (n % 6 != 0) fail(ErrorCode::kIllegalCongruence, "lifting needs 6 | n");
  if (i >= config.size()) fail(ErrorCode::kInvalidArgument, "root index out of range");
  std::vector<std::int64_t> nums(config.angles().begin(), config.angles().end());
  const std::int64_t x = nums[i];
  nums[i] = x + n / 6;
  nums.push_back(x - n / 6);
  return RootConfig::from_residues(n, std::move(nums));
}

FamilyBound family_bound(Family family, std::int64_t n, const FamilyParams& params) {
  auto need_ab = [&](const char* what) {
    if (!params.a || !params.b) fail(ErrorCode::kInvalidArgument, std::string(what) + " needs a and b");
  };
  switch (family) {
    case Family::kZ5Fib:
      if (n < 25) return illegal(family, n, {}, "needs n >= 25");
      return thm1_bound(n);
    case Family::kZ5Dip: {
      std::int64_t a = 0;
      std::int64_t b = 0;
      if (params.j) {
        const DipLocation d = dip_locate(*params.j);
        a = d.a;
        b = d.b;
      } else {
        need_ab("z5-dip");
        a = *params.a;
        b = *params.b;
      }
      if (n < 5) return illegal(family, n, {a, b}, "needs n >= 5");
      return z5_dip_bound(n, a, b);
    }
    case Family::kZ3i:
      need_ab("z3i");
      return z3i_bound(n, *params.a, *params.b);
    case Family::kLift6:
      return lift6_bound(n);
    case Family::kZ3rQuad: {
      const std::int64_t Q = params.Q ? *params.Q : default_quad_q(n);
      if (Q > n) return illegal(family, n, {}, "needs Q <= n");
      return z3r_quad_bound(n, Q);
    }
    case Family::kPte:
      if (!params.pte) fail(ErrorCode::kInvalidArgument, "pte needs a solution");
      if (n % 2 != 0) return illegal(family, n, {}, "needs even n");
      return pte_sum(*params.pte, n);
  }
  fail(ErrorCode::kInvalidArgument, "unknown family");
}

std::vector<FamilyBound> envelope(Family family, std::int64_t from, std::int64_t to,
                                  std::optional<std::pair<std::int64_t, std::int64_t>> filter,
                                  const FamilyParams& params, std::int64_t stride) {
  if (from < 1 || to < from || stride < 1) fail(ErrorCode::kEmptySelection, "empty range");
  std::vector<FamilyBound> out;
  bool any_legal = false;
  for (std::int64_t n = from; n <= to; n += stride) {
    if (filter && mod(n, filter->first) != filter->second) continue;
    out.push_back(family_bound(family, n, params));
    any_legal = any_legal || out.back().legal;
  }
  if (out.empty()) fail(ErrorCode::kEmptySelection, "no n in range passes the filter");
  if (!any_legal) fail(ErrorCode::kIllegalCongruence, "family is illegal on the whole range");
  return out;
}

}  // namespace unitysum
