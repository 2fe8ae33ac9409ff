#pragma once

#include <span>
#include <vector>

namespace rbs {

// Invariant tolerances for points of the balanced polytope
// M(n) = {x in [-1,1]^n : sum_k x_k = 0}.
inline constexpr double kBalanceTolPerCoord = 1e-12;  // |sum| <= 1e-12 * n
inline constexpr double kCoordinateSlack = 1e-15;     // |x_k| <= 1 + 1e-15

// A point of M(n), up to floating-point slack: every coordinate within
// [-1 - 1e-15, 1 + 1e-15] and the coordinate sum within 1e-12 * n of zero.
struct BalancedVector {
  std::vector<double> x;

  int n() const { return static_cast<int>(x.size()); }
  double sum() const;
  double max_abs() const;
  bool satisfies_invariants() const;

  // Validating factory; throws std::invalid_argument when the invariants
  // fail. All samplers construct their outputs through this.
  static BalancedVector checked(std::vector<double> coords);
  // Non-validating factory for negative controls and raw file input.
  static BalancedVector unchecked(std::vector<double> coords);
};

// Membership in M(n) at an explicit tolerance: true iff every |x_k| <= 1+tol
// and |sum x_k| <= tol * n. Throws on n < 2 or size mismatch.
bool contains(int n, std::span<const double> x, double tol);

// n unit vectors in R^(n-1) with pairwise inner products -1/(n-1) (a regular
// simplex frame), built by Cholesky-style factorization of the prescribed
// Gram matrix. Deterministic: equal n gives bit-identical output.
struct SimplexModel {
  int n = 0;
  std::vector<std::vector<double>> u;  // n rows of dimension n-1
};

SimplexModel build_simplex_model(int n);  // n >= 2

// The point of the simplex realization with coordinates x: the unique
// v in R^(n-1) with <v, u_k> = x_k for all k, which for balanced x is
// v = ((n-1)/n) * sum_k x_k u_k.
std::vector<double> embed(const SimplexModel& model, std::span<const double> x);

// r_k = x_k - x_{k+1}, indices cyclic (x_{m+1} = x_1). Requires m >= 2.
std::vector<double> cyclic_difference(std::span<const double> x);

// Membership of r in the image of the cyclic difference map over the cube
// [-1,1]^m. With prefix sums S_1 = 0, S_k = r_1 + ... + r_{k-1}, a preimage
// x_k = x_1 - S_k exists in the cube iff max_k S_k - min_k S_k <= 2; the
// test applies that criterion with slack tol. Preconditions (checked at the
// same tol): sum r = 0 within tol * m and every |r_k| <= 2 + tol.
bool in_L_image(std::span<const double> r, double tol);

// Orders w (entries in [-1,1], summing to zero within 1e-12 * n) so that
// every prefix sum of the reordered sequence stays in [-1,1] (within 1e-12
// slack). Greedy: each step appends an unused entry whose sign opposes the
// running sum; among eligible entries the smallest |value| wins, ties by
// index. Returns 0-based source indices: slot i receives w[perm[i]].
std::vector<int> balanced_greedy_order(std::span<const double> w);

struct OddOrder {
  std::vector<int> perm;  // 0-based: slot i receives w[perm[i]]
  double b = -1.0;        // auxiliary sign
};

// Odd-length ordering with an auxiliary sign b = -1: writing
// z_i = w[perm[i]], the augmented suffix sums
//   (z_j + z_{j+1} + ... + z_{n-4}) + (z_{n-1} + b) / 2,   j = 0..n-4,
// all lie in [-1,1] (within 1e-12 slack), slot n-1 holds a nonnegative
// entry, and slots n-3, n-2 hold the two leftover entries in index order.
// Preconditions as for balanced_greedy_order plus odd n; even n is
// rejected with std::invalid_argument.
OddOrder balanced_order_odd(std::span<const double> w);

}  // namespace rbs
