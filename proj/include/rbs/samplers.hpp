#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbs/density.hpp"
#include "rbs/geometry.hpp"
#include "rbs/random.hpp"

namespace rbs {

// ---------------------------------------------------------------------------
// Sampler configuration
// ---------------------------------------------------------------------------

enum class Method {
  auto_select,   // n=2 -> degenerate, n=3 -> gr_model, n>=4 -> symmetrized
  degenerate,    // mirror constructions; exact uniform marginals, n >= 2
  redistributed, // chord-redistributed cyclic differences, n >= 4
  symmetrized,   // redistributed + uniform coordinate permutation, n >= 4
  gr_model,      // max-norm radial model, n >= 3
};

const char* method_name(Method m);
Method parse_method(const std::string& name);  // throws on unknown name

struct SamplerConfig {
  int n = 0;
  Method method = Method::auto_select;
  std::uint64_t seed = 0;
  std::optional<DensitySpec> g;  // gr_model only

  Method resolved_method() const;
  // gr_model only: the configured density, defaulting to power:(n-1),
  // i.e. g(s) = n s^(n-1).
  DensitySpec resolved_density() const;
  // Throws std::invalid_argument (or InvalidDensityError) on invalid
  // combinations: n < 2; redistributed/symmetrized with n < 4; gr_model
  // with n < 3; g supplied for a non-gr method.
  void validate() const;
};

struct SampleBatch {
  SamplerConfig config;
  std::vector<BalancedVector> items;

  int n() const { return config.n; }
  int count() const { return static_cast<int>(items.size()); }
};

// Draws `count` samples from one seeded stream. Equal (config, count) give
// bit-identical batches; a longer batch extends a shorter one.
SampleBatch sample_batch(const SamplerConfig& config, int count);

// One draw using the resolved method; consumes from `gen`.
BalancedVector sample_one(const SamplerConfig& config, SeededGenerator& gen);

// ---------------------------------------------------------------------------
// Core constructions
// ---------------------------------------------------------------------------

// Moves the pair (x1, x2) along the chord {(y1, y2) : y1 + y2 = x1 + x2} of
// the square [-1,1]^2 to the position parametrized by t in [-1, 1]:
//   y1 = S/2 + (1 - |S|/2) t,  y2 = S/2 - (1 - |S|/2) t,  S = x1 + x2.
// For independent uniform x1, x2, t the outputs are independent uniforms.
// Inputs outside [-1, 1] are rejected with std::invalid_argument.
std::pair<double, double> redistribute_pair(double x1, double x2, double t);

// n = 2m mirror sample: draws X_1..X_m uniform and returns
// (X_1, ..., X_m, -X_1, ..., -X_m). m >= 1. Consumes m uniforms.
BalancedVector sample_even_degenerate(int m, SeededGenerator& gen);

// n = 2m chord-redistributed sample: draws X_1..X_m then T_1..T_m, forms the
// cyclic differences S_k = X_k - X_{k+1} (X_{m+1} = X_1) and redistributes
// each S_k by T_k into the output pair (Y_{2k-1}, Y_{2k}). m >= 2.
BalancedVector sample_even_redistributed(int m, SeededGenerator& gen);

// n = 2m+1 mirror sample: draws X_1..X_m then a fair sign B and returns
// (X_1, ..., X_m, -X_1, ..., -X_{m-1}, -(X_m+B)/2, -(X_m-B)/2). m >= 1.
BalancedVector sample_odd_degenerate(int m, SeededGenerator& gen);

// n = 2m+1 chord-redistributed sample: draws X_1..X_m, T_1..T_m, then a fair
// sign B; redistributes the differences
//   S_k = X_k - X_{k+1}             k = 1..m-2,
//   S_{m-1} = X_{m-1} - (X_m + B)/2,
//   S_m     = -(X_m - B)/2 - X_1,
// into pairs (Y_{2k-1}, Y_{2k}) and appends Y_{2m+1} = X_m. m >= 2.
BalancedVector sample_odd_redistributed(int m, SeededGenerator& gen);

// Applies a uniform random coordinate permutation (Fisher-Yates).
BalancedVector symmetrize(const BalancedVector& y, SeededGenerator& gen);

// symmetrize(sample_odd_redistributed(m)). m >= 2.
BalancedVector sample_odd_symmetrized(int m, SeededGenerator& gen);

// Max-norm (Gerow-Robson) radial model on M(n), n >= 3: draws the radius
// Y_1 from g, then a uniform point of the slice {z in [-1,1]^(n-1) :
// z_2 + ... + z_n = -1} by rejection (draw Z_3..Z_n, set Z_2 = -1 - sum,
// retry until Z_2 lands in [-1, 1]), scales by the radius, applies a fair
// global sign, and finally a uniform coordinate permutation.
BalancedVector sample_gr_model(int n, const DensitySpec& g,
                               SeededGenerator& gen);

// ---------------------------------------------------------------------------
// Deterministic kernels and inverses
// ---------------------------------------------------------------------------

// The even construction as a pure function of its draws (x: m values,
// t: m values). Exposed for inversion round-trips.
std::vector<double> even_redistributed_from(std::span<const double> x,
                                            std::span<const double> t);

// The odd construction as a pure function of its draws (x: m values,
// t: m values, b: +-1).
std::vector<double> odd_redistributed_from(std::span<const double> x,
                                           std::span<const double> t,
                                           double b);

struct EvenPreimage {
  std::vector<double> x;  // m values
  std::vector<double> t;  // m values
};

struct OddPreimage {
  std::vector<double> x;  // m values
  std::vector<double> t;  // m values
  double b = 1.0;
};

// Inverts the even construction: from y (n = 2m, m >= 2) recovers (x, t)
// with even_redistributed_from(x, t) == y. The representative with x_1 = 0
// is used; if it leaves the cube the translation freedom of the cyclic
// differences is used to re-center, and only if no translation fits is
// NotInvertibleError thrown. Whenever every |y_k| < 1/n the x_1 = 0
// representative is already feasible. Pairs at chord endpoints
// (|y_{2k-1} + y_{2k}| = 2) have arbitrary t_k; the convention t_k = 0
// is returned.
EvenPreimage invert_even(std::span<const double> y);

// Inverts the odd construction for a chosen sign b: from y (n = 2m+1,
// m >= 2) recovers (x, t) with odd_redistributed_from(x, t, b) == y.
// Feasible whenever every |y_k| < 1/(2m); otherwise NotInvertibleError.
// Same t convention as invert_even.
OddPreimage invert_odd(std::span<const double> y, double b);

}  // namespace rbs
