#pragma once

#include <vector>

#include "rbs/polynomial.hpp"

namespace rbs {

// Interval known to contain exactly one distinct real root. lo == hi marks an
// exact rational root; otherwise the root lies strictly inside (lo, hi) and
// the polynomial is nonzero at both endpoints.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool is_point() const { return lo == hi; }
};

struct RootIsolation {
  int count = 0;  // number of distinct real roots
  std::vector<IsolatingInterval> intervals;  // ascending, size == count
  bool squarefree = false;  // true iff gcd(p, p') is constant
};

// Sturm chain over the squarefree part of a nonzero polynomial, with exact
// integer arithmetic (primitive-part reduction at every remainder step so
// coefficient growth stays manageable at high degree).
class SturmChain {
 public:
  explicit SturmChain(const RationalPolynomial& p);

  int input_degree() const { return input_degree_; }
  bool input_squarefree() const { return squarefree_; }
  int squarefree_degree() const;

  int variations(const Rational& x) const;
  int variations_neg_inf() const;
  int variations_pos_inf() const;

  // Number of distinct real roots in the half-open interval (a, b], a <= b.
  int count_roots_in(const Rational& a, const Rational& b) const;
  int count_real_roots() const;

  int sign_at(const Rational& x) const;  // sign of the squarefree part
  // Strict bound: every real root r satisfies |r| < bound.
  Rational root_bound() const;

  std::vector<IsolatingInterval> isolate_all() const;
  // Shrinks a bracket around a single root by sign bisection until
  // hi - lo <= width. Requires sign_at(lo) != 0, sign_at(hi) != 0 and
  // exactly one root inside.
  IsolatingInterval refine(Rational lo, Rational hi,
                           const Rational& width) const;

 private:
  void isolate_range(const Rational& a, const Rational& b, int count,
                     std::vector<IsolatingInterval>& out) const;

  std::vector<detail::IntPoly> chain_;
  int input_degree_ = 0;
  bool squarefree_ = false;
};

// Distinct-real-root count and isolating intervals for a nonzero polynomial.
// Throws std::invalid_argument on the zero polynomial.
RootIsolation sturm_distinct_real_roots(const RationalPolynomial& p);

}  // namespace rbs
