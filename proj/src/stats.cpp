#include "rbs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rbs/geometry.hpp"

namespace rbs {

namespace {

// Asymptotic Kolmogorov tail Q(lambda) = 2 sum_{k>=1} (-1)^(k-1)
// exp(-2 k^2 lambda^2), clamped to [0, 1].
double ks_tail(double lambda) {
  if (lambda < 1e-3) return 1.0;
  const double a = -2.0 * lambda * lambda;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(a * k * k);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

std::vector<double> coordinate_column(const SampleBatch& batch, int coordinate) {
  if (batch.count() == 0)
    throw std::invalid_argument("stats: empty batch");
  if (coordinate < 0 || coordinate >= batch.n())
    throw std::invalid_argument("stats: coordinate out of range");
  std::vector<double> xs(batch.items.size());
  for (size_t i = 0; i < xs.size(); ++i)
    xs[i] = batch.items[i].x[static_cast<size_t>(coordinate)];
  return xs;
}

double sample_variance(const std::vector<double>& v) {
  const double N = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= N;
  double acc = 0.0;
  for (double x : v) acc += (x - mean) * (x - mean);
  return acc / (N - 1.0);
}

}  // namespace

UniformityResult ks_uniformity(const SampleBatch& batch, int coordinate) {
  std::vector<double> xs = coordinate_column(batch, coordinate);
  std::sort(xs.begin(), xs.end());
  const auto N = static_cast<double>(xs.size());
  double d = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double f = std::clamp((xs[i] + 1.0) / 2.0, 0.0, 1.0);
    d = std::max(d, (static_cast<double>(i) + 1.0) / N - f);
    d = std::max(d, f - static_cast<double>(i) / N);
  }
  // Stephens' finite-N adjustment feeding the asymptotic tail; accurate to
  // the percent level for N as small as ~100.
  const double sn = std::sqrt(N);
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  UniformityResult r;
  r.coordinate = coordinate;
  r.statistic = d;
  r.p_value = ks_tail(lambda);
  r.count = static_cast<long>(xs.size());
  return r;
}

double chi_square_uniformity(const SampleBatch& batch, int coordinate,
                             int bins) {
  if (bins < 2) throw std::invalid_argument("chi_square_uniformity: bins < 2");
  const std::vector<double> xs = coordinate_column(batch, coordinate);
  std::vector<long> counts(static_cast<size_t>(bins), 0);
  for (double x : xs) {
    auto b = static_cast<long>((x + 1.0) / 2.0 * bins);
    b = std::clamp(b, 0L, static_cast<long>(bins - 1));
    ++counts[static_cast<size_t>(b)];
  }
  const double expected = static_cast<double>(xs.size()) / bins;
  double stat = 0.0;
  for (long c : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

CovarianceSummary covariance_summary(const SampleBatch& batch) {
  const long N = batch.count();
  if (N < 1000)
    throw std::invalid_argument(
        "covariance_summary: at least 1000 samples required");
  const int n = batch.n();
  CovarianceSummary s;
  s.n = n;
  s.count = N;
  s.alpha_target = -1.0 / (3.0 * (n - 1));
  s.sum_identity_target = -static_cast<double>(n) / 3.0;

  std::vector<double> mean(static_cast<size_t>(n), 0.0);
  for (const auto& v : batch.items)
    for (int k = 0; k < n; ++k) mean[static_cast<size_t>(k)] += v.x[static_cast<size_t>(k)];
  for (double& m : mean) m /= static_cast<double>(N);

  const auto nn = static_cast<size_t>(n);
  std::vector<std::vector<double>> sum_p(nn, std::vector<double>(nn, 0.0));
  std::vector<std::vector<double>> sum_p2(nn, std::vector<double>(nn, 0.0));
  std::vector<double> q(static_cast<size_t>(N));
  for (size_t t = 0; t < static_cast<size_t>(N); ++t) {
    const auto& x = batch.items[t].x;
    double zsum = 0.0, z2sum = 0.0;
    for (size_t k = 0; k < nn; ++k) {
      const double zk = x[k] - mean[k];
      zsum += zk;
      z2sum += zk * zk;
      for (size_t j = 0; j <= k; ++j) {
        const double p = zk * (x[j] - mean[j]);
        sum_p[k][j] += p;
        sum_p2[k][j] += p * p;
      }
    }
    q[t] = zsum * zsum - z2sum;  // sum over ordered pairs k != j of z_k z_j
  }

  s.covariance.assign(nn, std::vector<double>(nn, 0.0));
  s.standard_error.assign(nn, std::vector<double>(nn, 0.0));
  const double dN = static_cast<double>(N);
  for (size_t k = 0; k < nn; ++k) {
    for (size_t j = 0; j <= k; ++j) {
      const double m1 = sum_p[k][j] / dN;
      const double var_p = std::max(0.0, sum_p2[k][j] / dN - m1 * m1);
      const double cov = sum_p[k][j] / (dN - 1.0);
      const double se = std::sqrt(var_p / dN);
      s.covariance[k][j] = s.covariance[j][k] = cov;
      s.standard_error[k][j] = s.standard_error[j][k] = se;
    }
  }

  double off_sum = 0.0;
  for (size_t k = 0; k < nn; ++k)
    for (size_t j = 0; j < nn; ++j)
      if (k != j) off_sum += s.covariance[k][j];
  s.sum_identity_hat = off_sum;
  s.alpha_hat = off_sum / (static_cast<double>(n) * (n - 1));
  s.sum_identity_se = std::sqrt(sample_variance(q) / dN);
  s.alpha_se = s.sum_identity_se / (static_cast<double>(n) * (n - 1));
  return s;
}

double balance_report(const SampleBatch& batch) {
  if (batch.count() == 0)
    throw std::invalid_argument("balance_report: empty batch");
  double worst = 0.0;
  for (const auto& v : batch.items) worst = std::max(worst, std::abs(v.sum()));
  return worst;
}

VarianceReduction variance_reduction_experiment(const std::vector<double>& f,
                                                int n, long trials,
                                                SeededGenerator& gen) {
  if (f.empty())
    throw std::invalid_argument("variance_reduction_experiment: empty polynomial");
  if (n < 2)
    throw std::invalid_argument("variance_reduction_experiment: n must be >= 2");
  if (trials < 100)
    throw std::invalid_argument(
        "variance_reduction_experiment: at least 100 trials required");
  const auto eval = [&f](double x) {
    double acc = 0.0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  std::vector<double> iid_means(static_cast<size_t>(trials));
  for (auto& m : iid_means) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) acc += eval(gen.uniform_pm1());
    m = acc / n;
  }

  SamplerConfig cfg;
  cfg.n = n;
  cfg.method = Method::auto_select;
  cfg.seed = gen.seed();
  cfg.validate();
  std::vector<double> rbs_means(static_cast<size_t>(trials));
  double max_abs = 0.0, mean_acc = 0.0;
  for (auto& m : rbs_means) {
    const BalancedVector v = sample_one(cfg, gen);
    double acc = 0.0;
    for (double x : v.x) acc += eval(x);
    m = acc / n;
    max_abs = std::max(max_abs, std::abs(m));
    mean_acc += m;
  }

  VarianceReduction out;
  out.var_iid = sample_variance(iid_means);
  out.var_rbs = sample_variance(rbs_means);
  out.mean_rbs = mean_acc / static_cast<double>(trials);
  out.max_abs_trial_mean_rbs = max_abs;
  return out;
}

CoverageReport coverage_probe(const SamplerConfig& config, int cells,
                              long samples) {
  config.validate();
  if (config.n > 8)
    throw std::invalid_argument("coverage_probe: n must be <= 8");
  if (cells < 2)
    throw std::invalid_argument("coverage_probe: need at least 2 buckets");
  if (samples < 1)
    throw std::invalid_argument("coverage_probe: need at least 1 sample");

  const int n = config.n;
  const int B = cells;
  CoverageReport rep;
  rep.samples = samples;
  rep.buckets = B;
  // The pair-sum classification needs at least two pairs.
  const bool check_l = n % 2 == 0 && n >= 4;

  SeededGenerator gen(config.seed);
  long violations = 0;
  std::vector<int> key(static_cast<size_t>(n));
  std::vector<double> r(static_cast<size_t>(n / 2));
  for (long i = 0; i < samples; ++i) {
    const BalancedVector y = sample_one(config, gen);
    for (int k = 0; k < n; ++k) {
      const double v = y.x[static_cast<size_t>(k)];
      int b = static_cast<int>(std::ceil(std::abs(v) * B));
      b = std::clamp(b, 1, B);
      key[static_cast<size_t>(k)] = v < 0.0 ? -b : b;
    }
    ++rep.cell_hits[key];
    if (check_l) {
      for (size_t k = 0; k < r.size(); ++k)
        r[k] = y.x[2 * k] + y.x[2 * k + 1];
      if (!in_L_image(r, 1e-9)) ++violations;
    }
  }
  rep.distinct_cells_hit = static_cast<long>(rep.cell_hits.size());

  // A cell's box contributes lo_k = (b-1)/B .. hi_k = b/B on the positive
  // side and the mirror image on the negative side; the interior rule asks
  // for sum lo <= -margin and sum hi >= +margin with no outermost bucket.
  const double margin = rep.interior_margin;
  const auto interior = [&](const std::vector<int>& cell) {
    double lo = 0.0, hi = 0.0;
    for (int v : cell) {
      if (std::abs(v) >= B) return false;
      if (v > 0) {
        lo += (v - 1.0) / B;
        hi += static_cast<double>(v) / B;
      } else {
        lo += static_cast<double>(v) / B;
        hi += (v + 1.0) / B;
      }
    }
    return lo <= -margin + 1e-12 && hi >= margin - 1e-12;
  };
  for (const auto& [cell, hits] : rep.cell_hits) {
    (void)hits;
    if (interior(cell)) ++rep.interior_cells_hit;
  }

  // Total interior-cell count without enumeration: each non-outermost
  // signed bucket maps bijectively to w = B*lo in {-(B-1), ..., B-2}, and
  // the rule reads sum(w) in [margin*B - n, -margin*B]. Convolution count.
  {
    const int wmin = -(B - 1), wmax = B - 2;
    std::map<long, long> dist;
    dist[0] = 1;
    for (int k = 0; k < n; ++k) {
      std::map<long, long> next;
      for (const auto& [sum, ways] : dist)
        for (int w = wmin; w <= wmax; ++w) next[sum + w] += ways;
      dist = std::move(next);
    }
    const double lo_bound = margin * B - n - 1e-12;
    const double hi_bound = -margin * B + 1e-12;
    long total = 0;
    for (const auto& [sum, ways] : dist)
      if (sum >= lo_bound && sum <= hi_bound) total += ways;
    rep.interior_cells_total = total;
  }

  rep.l_violation_fraction =
      check_l ? static_cast<double>(violations) / static_cast<double>(samples)
              : -1.0;
  return rep;
}

}  // namespace rbs
