#pragma once

#include <string>
#include <vector>

#include "rbs/random.hpp"

namespace rbs {

// Radial density descriptor: a probability density on [0, 1] used by the
// max-norm (Gerow-Robson) model sampler and the analysis module.
//
// Two families:
//   power      g(s) = (p+1) * s^p, p > -1  (normalized by construction);
//              sampled by inverse CDF, s = U^(1/(p+1)).
//   polynomial g(s) = c0 + c1 s + ... + cd s^d; must integrate to 1 within
//              1e-9 and be nonnegative on [0, 1]; sampled by rejection
//              against the envelope sum_i |c_i| >= sup g.
struct DensitySpec {
  enum class Family { power, polynomial };

  Family family = Family::power;
  double exponent = 0.0;        // power family
  std::vector<double> coeffs;   // polynomial family, ascending

  static DensitySpec power(double p);
  static DensitySpec polynomial(std::vector<double> coeffs);

  // "power:P" or "poly:c0,c1,...". Throws std::invalid_argument on
  // malformed text; the result is validated.
  static DensitySpec parse(const std::string& text);
  std::string to_string() const;

  // Throws InvalidDensityError unless this describes a density on [0, 1]
  // (power: exponent > -1; polynomial: integral within 1e-9 of 1 and
  // nonnegative on a 1/1024-step grid).
  void validate() const;

  double pdf(double s) const;

  // One draw from the density. Draw order (for determinism contracts):
  // power consumes one uniform01; polynomial consumes two uniform01 per
  // rejection attempt (location, then envelope height).
  double sample(SeededGenerator& gen) const;
};

}  // namespace rbs
