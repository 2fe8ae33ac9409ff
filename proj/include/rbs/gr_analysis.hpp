#pragma once

#include <optional>
#include <string>

#include "rbs/density.hpp"
#include "rbs/polynomial.hpp"
#include "rbs/sturm.hpp"

namespace rbs {

// Density of the sum of n-2 independent uniform[-1,1] variables, evaluated
// exactly at a rational point. Piecewise polynomial of degree n-3 with
// support [-(n-2), n-2], even, nonnegative. n >= 3.
Rational phi(int n, const Rational& t);

// Exact integral of phi(n, .) from a to b (signed if a > b).
Rational phi_integral(int n, const Rational& a, const Rational& b);

// Normalizing constant 1 / ((n-3)! 2^(n-1) phi(n+1, 1)) of the slice
// coordinate density. n >= 4 (the n = 3 slice density is the constant 1).
Rational big_c(int n);

// Density on [0, 1] of |Z_2| where (1, Z_2, ..., Z_n) is uniform on the
// slice {z in [-1,1]^(n-1) : z_2 + ... + z_n = -1}: an even polynomial of
// degree 2*floor((n-3)/2) integrating to exactly 1. n >= 3.
RationalPolynomial pn_prime_poly(int n);

// Denominator polynomial B_n of the radial transfer function: with
// alpha = floor((n-3)/2) and gamma_j the coefficient of s^(2j) in
// pn_prime_poly(n),
//   B_n(s) = prod_{j=0..alpha} (s + 2j)
//          + (n-1) sum_j gamma_j prod_{i != j} (s + 2i).
// Monic of degree alpha + 1. Its root layout decides whether a radial
// density with uniform marginals can exist (see verify_no_gr_density).
// n >= 3.
RationalPolynomial build_B(int n);

struct RationalFunction {
  RationalPolynomial num;
  RationalPolynomial den;
};

// The transfer function n * prod_{j=1..alpha} (s + 2j) / B_n(s): the
// Laplace transform that q_n(t) = g_n(e^-t), the radial law g_n written in
// the exponential variable, must have for the marginals to come out
// uniform. Common linear factors are cancelled; the denominator is cleared
// to its primitive integer form (positive leading coefficient) with the
// numerator scaled by the same positive rational, so equality with a
// displayed reduced form is exact. Invariants: deg(den) - deg(num) = 1 and
// lc(num) = n * lc(den) (equivalently s * transfer(s) -> n as s -> inf,
// i.e. q_n(0) = n). n >= 3.
RationalFunction laplace_transfer(int n);

enum class GrVerdict {
  density_exists_robson,  // n = 3: g(s) = 3 s^2
  density_exists_gerow,   // n = 4: g(s) = 4 s^3
  no_density_proven,
  inconclusive,
};
const char* verdict_name(GrVerdict v);

struct GrReport {
  int n = 0;
  int degree = 0;                  // degree of B_n
  int distinct_real_root_count = 0;
  bool squarefree = false;         // gcd(B_n, B_n') constant
  // Bracket around the largest real root, filled by the n >= 6 root
  // analysis when it certifies nonexistence.
  std::optional<IsolatingInterval> a0_interval;
  int sign_at_minus3 = 0;          // sign of B_n(-3)
  int sign_at_minus2 = 0;          // sign of B_n(-2)
  GrVerdict verdict = GrVerdict::inconclusive;
  std::string reason;
};

// Existence classification of a max-norm radial density with uniform
// marginals on M(n). n = 3, 4: closed-form densities exist. n = 5:
// nonexistence via the closed-form sign change (B_5 has complex roots).
// n >= 6: nonexistence is proven when the exact root analysis certifies
// that B_n has only real simple roots and its largest root lies in
// (-3, -2) with B_n(-3) < 0 < B_n(-2); anything else is inconclusive.
// Existence is never claimed for n >= 5.
GrReport verify_no_gr_density(int n);

// Exact + closed-form cross-checks for the hand-solvable cases:
//   n=3: transfer equals 3/(s+2); the inverse transform q_3(t) = 3 e^{-2t}
//        matches g_3(s) = 3 s^2 on the substitution s = e^{-t}.
//   n=4: transfer equals 4/(s+3); q_4(t) = 4 e^{-3t}, g_4(s) = 4 s^3.
//   n=5: transfer equals 115 (s+2) / (23 s^2 + 130 s + 192); the inverse
//        transform q_5(t) = 5 e^{-65t/23} [cos(wt) - (19/sqrt(191)) sin(wt)],
//        w = sqrt(191)/23, is negative at t = 1.5, so no density exists.
// Returns true iff every check for that n passes. n in {3, 4, 5}.
bool closed_form_check(int n);

// Residual of the uniform-marginal condition for a candidate radial
// density g at t in (0, 1):
//   (1/n) g(t) + (1 - 1/n) int_t^1 g(s) P'_n(t/s) ds/s - 1,
// with the integral done by adaptive Gauss-Kronrod quadrature. Identically
// ~0 for g_3, g_4; bounded away from 0 for g_5.
double rbs_condition_residual(const DensitySpec& g, int n, double t);

// Point density on M(n) of the max-norm model with radial law g:
// h(x) = f(||x||_inf) with
//   f(s) = g(s) / ((n-1) vol_{n-1}(M(n)) s^(n-2)),  s in (0, 1].
// With g = g_n(s) = n s^(n-1) this is n s / ((n-1) vol); e.g. s/(2 sqrt 3)
// for n = 3 and s/8 for n = 4. Throws std::domain_error at s = 0 when
// g(0) != 0 (the density is singular there); returns 0 at s = 0 otherwise.
double gr_density_f(int n, const DensitySpec& g, double s);

// vol_{n-1}(M(n)) = factor * sqrt(n) with an exact rational factor
// 2^n * phi(n+2, 0). n >= 2.
Rational polytope_volume_factor(int n);
double polytope_volume(int n);

}  // namespace rbs
