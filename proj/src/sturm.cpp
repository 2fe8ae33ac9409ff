#include "rbs/sturm.hpp"

#include <stdexcept>

namespace rbs {

using detail::IntPoly;

SturmChain::SturmChain(const RationalPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument("SturmChain: zero polynomial");
  input_degree_ = p.degree();
  const RationalPolynomial g = poly_gcd(p, p.derivative());
  squarefree_ = (g.degree() == 0);
  const RationalPolynomial sf =
      squarefree_ ? p : p.divide_exact(g);
  IntPoly p0 = sf.content_and_primitive().second;
  chain_.push_back(p0);
  if (detail::ip_degree(p0) >= 1) {
    IntPoly p1 = detail::ip_derivative(p0);
    detail::ip_make_primitive(p1);
    chain_.push_back(std::move(p1));
    while (true) {
      const IntPoly& a = chain_[chain_.size() - 2];
      const IntPoly& b = chain_.back();
      IntPoly r = detail::ip_prem_pos(a, b);
      detail::ip_make_primitive(r);
      if (r.empty()) break;
      for (auto& v : r) v = -v;
      chain_.push_back(std::move(r));
    }
  }
}

int SturmChain::squarefree_degree() const {
  return detail::ip_degree(chain_.front());
}

int SturmChain::variations(const Rational& x) const {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    const int s = detail::ip_sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

namespace {

int sign_at_infinity(const IntPoly& p, bool negative) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (negative && (detail::ip_degree(p) % 2) == 1) s = -s;
  return s;
}

}  // namespace

int SturmChain::variations_neg_inf() const {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    const int s = sign_at_infinity(p, /*negative=*/true);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::variations_pos_inf() const {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    const int s = sign_at_infinity(p, /*negative=*/false);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int SturmChain::count_roots_in(const Rational& a, const Rational& b) const {
  if (a > b) throw std::invalid_argument("count_roots_in: a > b");
  return variations(a) - variations(b);
}

int SturmChain::count_real_roots() const {
  return variations_neg_inf() - variations_pos_inf();
}

int SturmChain::sign_at(const Rational& x) const {
  return detail::ip_sign_at(chain_.front(), x);
}

Rational SturmChain::root_bound() const {
  const IntPoly& p = chain_.front();
  if (detail::ip_degree(p) <= 0) return Rational(1);
  Rational best(0);
  const Rational lead = Rational(p.back()).abs();
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    const Rational ratio = Rational(p[i]).abs() / lead;
    if (ratio > best) best = ratio;
  }
  // Cauchy bound 1 + max|a_i/a_d|, padded and rounded up to an integer so
  // the endpoints are certainly not roots.
  const Rational bound = best + Rational(2);
  Integer ceil_num;
  mpz_cdiv_q(ceil_num.get_mpz_t(), bound.numerator().get_mpz_t(),
             bound.denominator().get_mpz_t());
  return Rational(ceil_num);
}

std::vector<IsolatingInterval> SturmChain::isolate_all() const {
  std::vector<IsolatingInterval> out;
  if (detail::ip_degree(chain_.front()) <= 0) return out;
  const Rational b = root_bound();
  const Rational a = -b;
  isolate_range(a, b, count_roots_in(a, b), out);
  return out;
}

void SturmChain::isolate_range(const Rational& a, const Rational& b,
                               int count,
                               std::vector<IsolatingInterval>& out) const {
  if (count <= 0) return;
  if (count == 1) {
    if (sign_at(b) == 0) {
      out.push_back({b, b});
    } else {
      out.push_back({a, b});
    }
    return;
  }
  const Rational half(1, 2);
  const Rational mid = (a + b) * half;
  if (sign_at(mid) != 0) {
    const int left = count_roots_in(a, mid);
    isolate_range(a, mid, left, out);
    isolate_range(mid, b, count - left, out);
    return;
  }
  // The midpoint is itself a root. Carve out a punctured neighborhood that
  // contains no other root, emit the point, and recurse on both sides.
  Rational delta = (b - a) * Rational(1, 4);
  while (count_roots_in(mid - delta, mid) != 1 ||
         count_roots_in(mid, mid + delta) != 0) {
    delta = delta * half;
  }
  const int left = count_roots_in(a, mid - delta);
  isolate_range(a, mid - delta, left, out);
  out.push_back({mid, mid});
  isolate_range(mid + delta, b, count - left - 1, out);
}

IsolatingInterval SturmChain::refine(Rational lo, Rational hi,
                                     const Rational& width) const {
  int slo = sign_at(lo);
  const int shi = sign_at(hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("refine: endpoints do not bracket a root");
  const Rational half(1, 2);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) * half;
    const int sm = sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RootIsolation sturm_distinct_real_roots(const RationalPolynomial& p) {
  if (p.is_zero())
    throw std::invalid_argument(
        "sturm_distinct_real_roots: zero polynomial");
  RootIsolation out;
  const SturmChain chain(p);
  out.squarefree = chain.input_squarefree();
  out.intervals = chain.isolate_all();
  out.count = chain.count_real_roots();
  if (out.count != static_cast<int>(out.intervals.size()))
    throw std::runtime_error(
        "sturm_distinct_real_roots: isolation disagrees with root count");
  return out;
}

}  // namespace rbs
