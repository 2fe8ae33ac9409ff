#include "rbs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rbs {

double BalancedVector::sum() const {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double BalancedVector::max_abs() const {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

bool BalancedVector::satisfies_invariants() const {
  if (x.empty()) return false;
  return std::abs(sum()) <= kBalanceTolPerCoord * n() &&
         max_abs() <= 1.0 + kCoordinateSlack;
}

BalancedVector BalancedVector::checked(std::vector<double> coords) {
  BalancedVector v{std::move(coords)};
  if (!v.satisfies_invariants())
    throw std::invalid_argument(
        "BalancedVector: invariants violated (sum " +
        std::to_string(v.sum()) + ", max |x| " + std::to_string(v.max_abs()) +
        ", n " + std::to_string(v.n()) + ")");
  return v;
}

BalancedVector BalancedVector::unchecked(std::vector<double> coords) {
  return BalancedVector{std::move(coords)};
}

bool contains(int n, std::span<const double> x, double tol) {
  if (n < 2) throw std::invalid_argument("contains: n must be >= 2");
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("contains: x has wrong dimension");
  double s = 0.0;
  for (double v : x) {
    if (std::abs(v) > 1.0 + tol) return false;
    s += v;
  }
  return std::abs(s) <= tol * n;
}

SimplexModel build_simplex_model(int n) {
  if (n < 2) throw std::invalid_argument("build_simplex_model: n must be >= 2");
  const int d = n - 1;
  const double off = -1.0 / d;  // prescribed <u_i, u_j>, i != j
  SimplexModel model;
  model.n = n;
  model.u.assign(static_cast<size_t>(n), std::vector<double>(d, 0.0));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < std::min(k, d); ++j) {
      double dot = 0.0;
      for (int i = 0; i < j; ++i) dot += model.u[k][i] * model.u[j][i];
      model.u[k][j] = (off - dot) / model.u[j][j];
    }
    if (k < d) {
      double norm2 = 0.0;
      for (int i = 0; i < k; ++i) norm2 += model.u[k][i] * model.u[k][i];
      model.u[k][k] = std::sqrt(1.0 - norm2);
    }
  }
  return model;
}

std::vector<double> embed(const SimplexModel& model,
                          std::span<const double> x) {
  const int n = model.n;
  if (n < 2 || static_cast<int>(model.u.size()) != n)
    throw std::invalid_argument("embed: malformed model");
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("embed: x has wrong dimension");
  double s = 0.0;
  for (double v : x) s += v;
  if (std::abs(s) > kBalanceTolPerCoord * n)
    throw std::invalid_argument("embed: x is not balanced");
  const int d = n - 1;
  std::vector<double> v(static_cast<size_t>(d), 0.0);
  const double scale = static_cast<double>(n - 1) / n;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] += x[k] * model.u[k][i];
  for (double& c : v) c *= scale;
  return v;
}

std::vector<double> cyclic_difference(std::span<const double> x) {
  const int m = static_cast<int>(x.size());
  if (m < 2) throw std::invalid_argument("cyclic_difference: need m >= 2");
  std::vector<double> r(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k)
    r[static_cast<size_t>(k)] = x[k] - x[(k + 1) % m];
  return r;
}

bool in_L_image(std::span<const double> r, double tol) {
  const int m = static_cast<int>(r.size());
  if (m < 2) throw std::invalid_argument("in_L_image: need m >= 2");
  double sum = 0.0;
  for (double v : r) {
    if (std::abs(v) > 2.0 + tol)
      throw std::invalid_argument("in_L_image: entry outside [-2, 2]");
    sum += v;
  }
  if (std::abs(sum) > tol * m)
    throw std::invalid_argument("in_L_image: r does not sum to zero");
  double prefix = 0.0, lo = 0.0, hi = 0.0;  // S_1 = 0 is always included
  for (int k = 0; k + 1 < m; ++k) {
    prefix += r[k];
    lo = std::min(lo, prefix);
    hi = std::max(hi, prefix);
  }
  return hi - lo <= 2.0 + tol;
}

namespace {

void check_orderable(std::span<const double> w) {
  const int n = static_cast<int>(w.size());
  if (n < 1) throw std::invalid_argument("ordering: empty input");
  double s = 0.0;
  for (double v : w) {
    if (std::abs(v) > 1.0 + kBalanceTolPerCoord)
      throw std::invalid_argument("ordering: entry outside [-1, 1]");
    s += v;
  }
  if (std::abs(s) > kBalanceTolPerCoord * n)
    throw std::invalid_argument("ordering: entries do not sum to zero");
}

// Among unused indices, the one with smallest |w|, ties by index; only
// indices whose value satisfies pred are eligible. Returns -1 if none.
template <typename Pred>
int pick_smallest_abs(std::span<const double> w, const std::vector<bool>& used,
                      Pred pred) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (used[static_cast<size_t>(i)] || !pred(w[i])) continue;
    if (best < 0 || std::abs(w[i]) < std::abs(w[best])) best = i;
  }
  return best;
}

}  // namespace

std::vector<int> balanced_greedy_order(std::span<const double> w) {
  check_orderable(w);
  const int n = static_cast<int>(w.size());
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::vector<int> perm;
  perm.reserve(static_cast<size_t>(n));
  double run = 0.0;
  for (int step = 0; step < n; ++step) {
    int pick;
    if (run > 0.0) {
      pick = pick_smallest_abs(w, used, [](double v) { return v <= 0.0; });
    } else if (run < 0.0) {
      pick = pick_smallest_abs(w, used, [](double v) { return v >= 0.0; });
    } else {
      pick = pick_smallest_abs(w, used, [](double) { return true; });
    }
    // Balance guarantees a sign-opposing entry except for noise-level runs;
    // fall back to an unrestricted pick in that case.
    if (pick < 0) pick = pick_smallest_abs(w, used, [](double) { return true; });
    used[static_cast<size_t>(pick)] = true;
    perm.push_back(pick);
    run += w[pick];
  }
  return perm;
}

OddOrder balanced_order_odd(std::span<const double> w) {
  const int n = static_cast<int>(w.size());
  if (n % 2 == 0)
    throw std::invalid_argument("balanced_order_odd: n must be odd");
  check_orderable(w);
  OddOrder order;
  order.b = -1.0;
  order.perm.assign(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);

  // Slot n-1 takes a nonnegative entry (one exists since the sum is ~0);
  // with b = -1 the augmented suffix sums start from -a, a = (1-z)/2.
  int last = pick_smallest_abs(w, used, [](double v) { return v >= 0.0; });
  if (last < 0) last = pick_smallest_abs(w, used, [](double) { return true; });
  used[static_cast<size_t>(last)] = true;
  order.perm[static_cast<size_t>(n - 1)] = last;
  const double a = (1.0 - w[last]) / 2.0;

  // Fill slots n-4 down to 0, keeping the suffix sum S of the filled slots
  // in [a-1, a+1]: if S >= a append a nonpositive entry (one always exists),
  // otherwise prefer a nonnegative one; if only negatives remain any choice
  // keeps S >= 2a-1 because each entry is at least the sum of the leftovers.
  double suffix = 0.0;
  for (int slot = n - 4; slot >= 0; --slot) {
    int pick;
    if (suffix >= a) {
      pick = pick_smallest_abs(w, used, [](double v) { return v <= 0.0; });
    } else {
      pick = pick_smallest_abs(w, used, [](double v) { return v >= 0.0; });
    }
    if (pick < 0) pick = pick_smallest_abs(w, used, [](double) { return true; });
    used[static_cast<size_t>(pick)] = true;
    order.perm[static_cast<size_t>(slot)] = pick;
    suffix += w[pick];
  }

  // The two leftovers take slots n-3 and n-2 in index order.
  int slot = n - 3;
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<size_t>(i)]) continue;
    order.perm[static_cast<size_t>(slot++)] = i;
  }
  return order;
}

}  // namespace rbs
