#pragma once

#include <map>
#include <vector>

#include "rbs/samplers.hpp"

namespace rbs {

// One-sample Kolmogorov-Smirnov test of a single coordinate against the
// uniform CDF on [-1, 1].
struct UniformityResult {
  int coordinate = 0;
  double statistic = 0.0;  // sup-norm distance D, in [0, 1]
  double p_value = 1.0;    // asymptotic tail with small-sample correction
  long count = 0;
};

UniformityResult ks_uniformity(const SampleBatch& batch, int coordinate);

// Secondary binned diagnostic: Pearson statistic of one coordinate against
// equal occupancy of `bins` equal-width cells of [-1, 1]. Degrees of
// freedom are bins - 1; no p-value is attached.
double chi_square_uniformity(const SampleBatch& batch, int coordinate,
                             int bins = 64);

// Pairwise second-moment structure of a batch. The identities tested
// downstream: summing x_k = 0 over a batch with uniform marginals forces
// sum_{k != j} E(X_k X_j) = -n/3, and exchangeable (symmetrized) samplers
// additionally put every single pair at -1/(3(n-1)).
struct CovarianceSummary {
  int n = 0;
  long count = 0;
  std::vector<std::vector<double>> covariance;      // n x n, symmetric
  std::vector<std::vector<double>> standard_error;  // SE of each estimate
  double alpha_hat = 0.0;     // mean off-diagonal entry
  double alpha_target = 0.0;  // -1/(3(n-1))
  double alpha_se = 0.0;
  double sum_identity_hat = 0.0;     // sum of off-diagonal entries
  double sum_identity_target = 0.0;  // -n/3
  double sum_identity_se = 0.0;
};

// Requires at least 1000 samples; throws std::invalid_argument below that.
CovarianceSummary covariance_summary(const SampleBatch& batch);

// Worst-case |sum of coordinates| over the batch. The samplers' contract
// keeps this at or below 1e-12 * n.
double balance_report(const SampleBatch& batch);

struct VarianceReduction {
  double var_iid = 0.0;
  double var_rbs = 0.0;
  double mean_rbs = 0.0;
  // Largest |trial mean| on the balanced side; exactly the quantity that
  // collapses to ~0 when f is linear with zero constant term.
  double max_abs_trial_mean_rbs = 0.0;
};

// Compares Var of the n-sample mean of f under i.i.d. uniform draws against
// the balanced sampler that `auto` resolves to for this n. Each trial draws
// one block of n values; the i.i.d. trials run first, then the balanced
// trials, on the same generator stream. f is given by its coefficients,
// ascending degree. trials >= 100, n >= 2.
VarianceReduction variance_reduction_experiment(const std::vector<double>& f,
                                                int n, long trials,
                                                SeededGenerator& gen);

// Occupancy probe of M(n), n <= 8. Cells are keyed per coordinate by
// sign and magnitude bucket ceil(|x_k| * cells), encoded as the signed
// integer +-bucket (an exact zero counts as +1). A cell is "interior" when
// no coordinate touches the outermost bucket and the cell's box admits
// coordinate sums on both sides of 0 by at least `interior_margin` - such
// cells carry enough volume of M(n) that a full-support sampler must hit
// them. For even n >= 4 the probe also classifies each sample's pair-sum
// vector (y_1+y_2, y_3+y_4, ...) through in_L_image: violations are
// impossible for the unsymmetrized constructions and expected after
// symmetrization.
struct CoverageReport {
  long samples = 0;
  int buckets = 0;
  std::map<std::vector<int>, long> cell_hits;
  long distinct_cells_hit = 0;
  long interior_cells_total = 0;
  long interior_cells_hit = 0;
  double interior_margin = 0.5;
  double l_violation_fraction = -1.0;  // -1 when not applicable (odd n, n=2)
};

CoverageReport coverage_probe(const SamplerConfig& config, int cells,
                              long samples);

}  // namespace rbs
