#include "rbs/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rbs/errors.hpp"

namespace rbs {

const char* method_name(Method m) {
  switch (m) {
    case Method::auto_select: return "auto";
    case Method::degenerate: return "degenerate";
    case Method::redistributed: return "redistributed";
    case Method::symmetrized: return "symmetrized";
    case Method::gr_model: return "gr";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::auto_select;
  if (name == "degenerate") return Method::degenerate;
  if (name == "redistributed") return Method::redistributed;
  if (name == "symmetrized") return Method::symmetrized;
  if (name == "gr") return Method::gr_model;
  throw std::invalid_argument("unknown method \"" + name + "\"");
}

Method SamplerConfig::resolved_method() const {
  if (method != Method::auto_select) return method;
  if (n == 2) return Method::degenerate;
  if (n == 3) return Method::gr_model;
  return Method::symmetrized;
}

DensitySpec SamplerConfig::resolved_density() const {
  if (g) return *g;
  return DensitySpec::power(static_cast<double>(n - 1));
}

void SamplerConfig::validate() const {
  if (n < 2) throw std::invalid_argument("SamplerConfig: n must be >= 2");
  const Method m = resolved_method();
  if ((m == Method::redistributed || m == Method::symmetrized) && n < 4)
    throw std::invalid_argument(
        "SamplerConfig: redistributed/symmetrized need n >= 4");
  if (m == Method::gr_model && n < 3)
    throw std::invalid_argument("SamplerConfig: gr model needs n >= 3");
  if (g && m != Method::gr_model)
    throw std::invalid_argument(
        "SamplerConfig: a radial density is only meaningful for the gr model");
  if (m == Method::gr_model) resolved_density().validate();
}

BalancedVector sample_one(const SamplerConfig& config, SeededGenerator& gen) {
  config.validate();
  const int n = config.n;
  switch (config.resolved_method()) {
    case Method::degenerate:
      return n % 2 == 0 ? sample_even_degenerate(n / 2, gen)
                        : sample_odd_degenerate((n - 1) / 2, gen);
    case Method::redistributed:
      return n % 2 == 0 ? sample_even_redistributed(n / 2, gen)
                        : sample_odd_redistributed((n - 1) / 2, gen);
    case Method::symmetrized:
      return n % 2 == 0
                 ? symmetrize(sample_even_redistributed(n / 2, gen), gen)
                 : sample_odd_symmetrized((n - 1) / 2, gen);
    case Method::gr_model:
      return sample_gr_model(n, config.resolved_density(), gen);
    case Method::auto_select:
      break;  // unreachable: resolved_method never returns auto_select
  }
  throw std::logic_error("sample_one: unresolved method");
}

SampleBatch sample_batch(const SamplerConfig& config, int count) {
  if (count < 0) throw std::invalid_argument("sample_batch: negative count");
  config.validate();
  SampleBatch batch;
  batch.config = config;
  batch.items.reserve(static_cast<size_t>(count));
  SeededGenerator gen(config.seed);
  for (int i = 0; i < count; ++i) batch.items.push_back(sample_one(config, gen));
  return batch;
}

namespace {

// Chord position for a pair with sum s and parameter t.
inline std::pair<double, double> chord_point(double s, double t) {
  const double mid = 0.5 * s;
  const double half_len = 1.0 - std::abs(mid);
  return {mid + half_len * t, mid - half_len * t};
}

void require_unit_range(double v, const char* what) {
  if (!(std::abs(v) <= 1.0))
    throw std::invalid_argument(std::string(what) + " outside [-1, 1]: " +
                                std::to_string(v));
}

}  // namespace

std::pair<double, double> redistribute_pair(double x1, double x2, double t) {
  require_unit_range(x1, "redistribute_pair: x1");
  require_unit_range(x2, "redistribute_pair: x2");
  require_unit_range(t, "redistribute_pair: t");
  return chord_point(x1 + x2, t);
}

BalancedVector sample_even_degenerate(int m, SeededGenerator& gen) {
  if (m < 1) throw std::invalid_argument("sample_even_degenerate: m >= 1");
  std::vector<double> y(2 * static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) y[static_cast<size_t>(k)] = gen.uniform_pm1();
  for (int k = 0; k < m; ++k)
    y[static_cast<size_t>(m + k)] = -y[static_cast<size_t>(k)];
  return BalancedVector::checked(std::move(y));
}

std::vector<double> even_redistributed_from(std::span<const double> x,
                                            std::span<const double> t) {
  const int m = static_cast<int>(x.size());
  if (m < 2 || static_cast<int>(t.size()) != m)
    throw std::invalid_argument("even_redistributed_from: need m >= 2 draws");
  std::vector<double> y(2 * static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double s = x[k] - x[(k + 1) % m];
    const auto [y1, y2] = chord_point(s, t[k]);
    y[static_cast<size_t>(2 * k)] = y1;
    y[static_cast<size_t>(2 * k + 1)] = y2;
  }
  return y;
}

BalancedVector sample_even_redistributed(int m, SeededGenerator& gen) {
  if (m < 2) throw std::invalid_argument("sample_even_redistributed: m >= 2");
  std::vector<double> x(static_cast<size_t>(m)), t(static_cast<size_t>(m));
  for (auto& v : x) v = gen.uniform_pm1();
  for (auto& v : t) v = gen.uniform_pm1();
  return BalancedVector::checked(even_redistributed_from(x, t));
}

BalancedVector sample_odd_degenerate(int m, SeededGenerator& gen) {
  if (m < 1) throw std::invalid_argument("sample_odd_degenerate: m >= 1");
  std::vector<double> x(static_cast<size_t>(m));
  for (auto& v : x) v = gen.uniform_pm1();
  const double b = gen.rademacher();
  std::vector<double> y(2 * static_cast<size_t>(m) + 1);
  for (int k = 0; k < m; ++k) y[static_cast<size_t>(k)] = x[static_cast<size_t>(k)];
  for (int k = 0; k + 1 < m; ++k)
    y[static_cast<size_t>(m + k)] = -x[static_cast<size_t>(k)];
  y[2 * static_cast<size_t>(m) - 1] = -(x[static_cast<size_t>(m - 1)] + b) / 2.0;
  y[2 * static_cast<size_t>(m)] = -(x[static_cast<size_t>(m - 1)] - b) / 2.0;
  return BalancedVector::checked(std::move(y));
}

std::vector<double> odd_redistributed_from(std::span<const double> x,
                                           std::span<const double> t,
                                           double b) {
  const int m = static_cast<int>(x.size());
  if (m < 2 || static_cast<int>(t.size()) != m)
    throw std::invalid_argument("odd_redistributed_from: need m >= 2 draws");
  if (b != 1.0 && b != -1.0)
    throw std::invalid_argument("odd_redistributed_from: b must be +-1");
  std::vector<double> s(static_cast<size_t>(m));
  for (int k = 0; k + 2 < m; ++k)
    s[static_cast<size_t>(k)] = x[k] - x[k + 1];
  s[static_cast<size_t>(m - 2)] = x[m - 2] - (x[m - 1] + b) / 2.0;
  s[static_cast<size_t>(m - 1)] = -(x[m - 1] - b) / 2.0 - x[0];
  std::vector<double> y(2 * static_cast<size_t>(m) + 1);
  for (int k = 0; k < m; ++k) {
    const auto [y1, y2] = chord_point(s[static_cast<size_t>(k)], t[k]);
    y[static_cast<size_t>(2 * k)] = y1;
    y[static_cast<size_t>(2 * k + 1)] = y2;
  }
  y[2 * static_cast<size_t>(m)] = x[m - 1];
  return y;
}

BalancedVector sample_odd_redistributed(int m, SeededGenerator& gen) {
  if (m < 2) throw std::invalid_argument("sample_odd_redistributed: m >= 2");
  std::vector<double> x(static_cast<size_t>(m)), t(static_cast<size_t>(m));
  for (auto& v : x) v = gen.uniform_pm1();
  for (auto& v : t) v = gen.uniform_pm1();
  const double b = gen.rademacher();
  return BalancedVector::checked(odd_redistributed_from(x, t, b));
}

BalancedVector symmetrize(const BalancedVector& y, SeededGenerator& gen) {
  const auto perm = gen.permutation(y.n());
  std::vector<double> out(y.x.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = y.x[static_cast<size_t>(perm[i])];
  return BalancedVector::checked(std::move(out));
}

BalancedVector sample_odd_symmetrized(int m, SeededGenerator& gen) {
  return symmetrize(sample_odd_redistributed(m, gen), gen);
}

BalancedVector sample_gr_model(int n, const DensitySpec& g,
                               SeededGenerator& gen) {
  if (n < 3) throw std::invalid_argument("sample_gr_model: n >= 3");
  g.validate();
  const double radius = g.sample(gen);
  // Uniform point of the slice z_2 + ... + z_n = -1 of [-1,1]^(n-1):
  // draw the free coordinates, solve for z_2, accept when it is in range.
  std::vector<double> z(static_cast<size_t>(n), 0.0);
  z[0] = 1.0;  // Z_1 = 1 by construction
  for (long attempt = 0;; ++attempt) {
    if (attempt >= 1000000)
      throw std::runtime_error("sample_gr_model: rejection sampling stalled");
    double tail = 0.0;
    for (int k = 2; k < n; ++k) {
      z[static_cast<size_t>(k)] = gen.uniform_pm1();
      tail += z[static_cast<size_t>(k)];
    }
    z[1] = -1.0 - tail;
    if (std::abs(z[1]) <= 1.0) break;
  }
  const double sign = gen.rademacher();
  const auto perm = gen.permutation(n);
  std::vector<double> y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    y[static_cast<size_t>(i)] =
        sign * radius * z[static_cast<size_t>(perm[static_cast<size_t>(i)])];
  return BalancedVector::checked(std::move(y));
}

namespace {

// Chord parameter for a pair (y1, y2): t with (y1, y2) = chord_point(s, t),
// s = y1 + y2; the midpoint convention t = 0 applies when the chord has
// length zero (|s| = 2).
double chord_parameter(double y1, double y2) {
  const double half_len = 1.0 - std::abs(y1 + y2) / 2.0;
  if (half_len < 1e-15) return 0.0;
  const double t = (y1 - y2) / (2.0 * half_len);
  return std::clamp(t, -1.0, 1.0);
}

}  // namespace

EvenPreimage invert_even(std::span<const double> y) {
  const int n = static_cast<int>(y.size());
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("invert_even: need even n >= 4");
  const int m = n / 2;
  for (double v : y)
    if (std::abs(v) > 1.0 + kCoordinateSlack)
      throw std::invalid_argument("invert_even: entry outside [-1, 1]");
  EvenPreimage out;
  out.x.resize(static_cast<size_t>(m));
  out.t.resize(static_cast<size_t>(m));
  // x_1 = 0 representative: x_{k+1} = x_k - (pair sum k).
  double prefix = 0.0, lo = 0.0, hi = 0.0;
  for (int k = 0; k < m; ++k) {
    out.x[static_cast<size_t>(k)] = prefix;
    prefix -= y[2 * k] + y[2 * k + 1];
    lo = std::min(lo, out.x[static_cast<size_t>(k)]);
    hi = std::max(hi, out.x[static_cast<size_t>(k)]);
  }
  const double tol = 1e-12;
  if (std::max(hi, -lo) > 1.0 + tol) {
    // Re-center with the translation freedom of the cyclic differences.
    if (hi - lo > 2.0 + tol)
      throw NotInvertibleError(
          "invert_even: pair sums leave the cyclic difference image");
    const double shift = -(hi + lo) / 2.0;
    for (auto& v : out.x) v += shift;
  }
  for (int k = 0; k < m; ++k)
    out.t[static_cast<size_t>(k)] = chord_parameter(y[2 * k], y[2 * k + 1]);
  return out;
}

OddPreimage invert_odd(std::span<const double> y, double b) {
  const int n = static_cast<int>(y.size());
  if (n < 5 || n % 2 != 1)
    throw std::invalid_argument("invert_odd: need odd n >= 5");
  if (b != 1.0 && b != -1.0)
    throw std::invalid_argument("invert_odd: b must be +-1");
  const int m = (n - 1) / 2;
  for (double v : y)
    if (std::abs(v) > 1.0 + kCoordinateSlack)
      throw std::invalid_argument("invert_odd: entry outside [-1, 1]");
  std::vector<double> r(static_cast<size_t>(m));
  double total = 0.0;
  for (int k = 0; k < m; ++k) {
    r[static_cast<size_t>(k)] = y[2 * k] + y[2 * k + 1];
    total += r[static_cast<size_t>(k)];
  }
  OddPreimage out;
  out.b = b;
  out.x.resize(static_cast<size_t>(m));
  out.t.resize(static_cast<size_t>(m));
  out.x[static_cast<size_t>(m - 1)] = -total;
  // x_k = (x_m + b)/2 + r_k + ... + r_{m-1}  (1-based), built backwards.
  const double half = (out.x[static_cast<size_t>(m - 1)] + b) / 2.0;
  double suffix = 0.0;
  for (int k = m - 2; k >= 0; --k) {
    suffix += r[static_cast<size_t>(k)];
    out.x[static_cast<size_t>(k)] = half + suffix;
  }
  const double tol = 1e-12;
  for (double v : out.x)
    if (std::abs(v) > 1.0 + tol)
      throw NotInvertibleError("invert_odd: recovered draws leave [-1, 1]");
  for (int k = 0; k < m; ++k)
    out.t[static_cast<size_t>(k)] = chord_parameter(y[2 * k], y[2 * k + 1]);
  return out;
}

}  // namespace rbs
