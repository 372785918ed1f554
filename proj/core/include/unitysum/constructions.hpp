#pragma once

// Constructive upper bounds for f(5, n): perturbed pentagons z5, the
// triangle-plus-pair families z3i and z3r, the k = 4 lift, and sums built
// from Prouhet-Tarry-Escott solutions.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unitysum/angles.hpp"

namespace unitysum {

using BigInt = boost::multiprecision::cpp_int;

Real phi(mpfr_prec_t bits);
BigInt fib(int m);
Real to_real(const BigInt& x, mpfr_prec_t bits);

// a*phi + b small and positive with a = r, b = 2r (mod 5).
struct ApproxPair {
  int j = 0;
  int r = 0;
  BigInt a;
  BigInt b;
  Real quality;  // a*phi + b
};

// Throws kInvalidArgument unless j >= 0 and r in [0, 4].
ApproxPair fib_approx_pair(int j, int r);

// |a| * (a*phi + b) is constant in j for each r; the largest (r = 2, 3) is
// about 21893. Frozen with 25% headroom.
inline constexpr double kApproxPairConstant = 27400.0;

// 1 + 2c(1/5 + alpha) + 2c(2/5 + beta), signed.
Real z5_exact(const Rational& alpha, const Rational& beta, int digits = 30);

// Third-order expansion of z5 about (0, 0). Throws kOutOfRegime unless
// |alpha|, |beta| <= 0.05.
Real z5_series3(const Rational& alpha, const Rational& beta, int digits = 30);

// 1 + 2c(1/3 + alpha) + 2c(1/4 + beta), signed.
Real z3i_exact(const Rational& alpha, const Rational& beta, int digits = 30);

// 1 + 2c(1/6 + alpha) + 2c(1/2 + beta), signed.
Real z3r_exact(const Rational& alpha, const Rational& beta, int digits = 30);

// -2 pi sqrt3 alpha + 2 pi^2 (2 beta^2 - alpha^2)
Real z3r_series2(const Rational& alpha, const Rational& beta, int digits = 30);

// Calibrated remainder constants; see the series tests.
//   |z5_exact - z5_series3| <= kZ5SeriesK * max(|alpha|, |beta|)^4
//   |z3r_exact - z3r_series2| <= kZ3rSeriesKa |alpha|^3 + kZ3rSeriesKb beta^4
inline constexpr double kZ5SeriesK = 120.0;
inline constexpr double kZ3rSeriesKa = 80.0;
inline constexpr double kZ3rSeriesKb = 140.0;

enum class Family { kZ5Fib, kZ5Dip, kZ3i, kLift6, kZ3rQuad, kPte };

const char* to_string(Family family);
// Accepts the canonical names plus "thm1" and "z3r-lift". Throws
// kInvalidArgument on anything else.
Family parse_family(std::string_view name);

struct FamilyBound {
  Family family = Family::kZ5Fib;
  std::int64_t n = 0;
  std::vector<std::int64_t> params;
  Magnitude value;
  RootConfig config;
  bool legal = false;
  std::string reason;  // why legal is false
};

// Best of the Fibonacci-type pairs (a, b), a = -n and b = -2n (mod 5),
// |a| <= sqrt(n): the sequences of fib_approx_pair for both signs and the
// successive best approximations of -a*phi inside the residue classes.
// Config {0, +-(n + a)/5, +-(2n + b)/5}. Throws kInvalidArgument for n < 25.
FamilyBound thm1_bound(std::int64_t n);

// n^(4/3) * thm1_bound(n) stays below this on the calibration grid.
inline constexpr double kThm1Constant = 6.8;

struct DipLocation {
  int j = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  double A = 0;
  double B = 0;
  double C = 0;
  double n0 = 0;
  std::int64_t n_star = 0;
};

// a = F(2j-1), b = -F(2j); g(n) = A n^2 + B n + C is -n^3 times the cubic
// expansion of z5(a/n, b/n). Throws kSignCondition unless A > 0, B < 0,
// C > 0 and kInvalidArgument for j < 3.
DipLocation dip_locate(int j);

// z5(a/n, b/n), legal when 5 | n. Config {0, +-(n/5 + a), +-(2n/5 + b)}.
FamilyBound z5_dip_bound(std::int64_t n, std::int64_t a, std::int64_t b);

// z3i(a/3n, b/4n), legal when a = -n (mod 3) and b = -n (mod 4).
FamilyBound z3i_bound(std::int64_t n, std::int64_t a, std::int64_t b);

// z3r(a/n, b/n), legal when 6 | n. Config {0, +-(n/6 + a), n/2 +- b}.
FamilyBound z3r_bound(std::int64_t n, std::int64_t a, std::int64_t b);

// z3r(0, 1/n) = 4 sin^2(pi/n).
FamilyBound lift6_bound(std::int64_t n);

// z3r(p/n, q/n) with (p, q) = quad_approx(2 pi/(sqrt3 n), Q); requires
// 1 <= Q <= n.
FamilyBound z3r_quad_bound(std::int64_t n, std::int64_t Q);

// Default Q for z3r_quad_bound: n^(21/32) rounded, at least 1.
std::int64_t default_quad_q(std::int64_t n);

struct QuadApprox {
  std::int64_t p = 0;
  std::int64_t q = 0;
  double residual = 0;
};

// argmin over 1 <= q <= Q of |q^2 xi - round(q^2 xi)|, smallest q on ties.
QuadApprox quad_approx(const Real& xi, std::int64_t Q);

struct PteSolution {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  std::size_t m() const { return a.size(); }
};

// Equal power sums for exponents 0..m-1, checked in exact integers.
bool is_pte(const PteSolution& s);

// sum e(a_i/n) - sum e(b_i/n) realized with -e(x) = e(x + 1/2). Throws
// kNotPte, and kInvalidArgument for odd n or m > 12.
FamilyBound pte_sum(const PteSolution& s, std::int64_t n);

// Replaces root i by the pair e(x + 1/6) + e(x - 1/6) = e(x), turning a
// k-root configuration into a (k+1)-root one with the same sum. Needs 6 | n.
RootConfig lift_root(const RootConfig& config, std::size_t i);

struct FamilyParams {
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::optional<int> j;
  std::optional<std::int64_t> Q;
  std::optional<PteSolution> pte;
};

// One bound at n; illegal n come back with legal = false.
FamilyBound family_bound(Family family, std::int64_t n, const FamilyParams& params);

// family_bound over the range. Throws kEmptySelection for an empty range
// and kIllegalCongruence when no n in it is legal.
std::vector<FamilyBound> envelope(Family family, std::int64_t from, std::int64_t to,
                                  std::optional<std::pair<std::int64_t, std::int64_t>> filter,
                                  const FamilyParams& params, std::int64_t stride = 1);

}  // namespace unitysum
