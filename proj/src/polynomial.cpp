#include "rbs/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace rbs {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending)
    : c_(std::move(ascending)) {
  normalize();
}

void RationalPolynomial::normalize() {
  while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) c_.push_back(Rational(0));
}

RationalPolynomial RationalPolynomial::constant(const Rational& v) {
  return RationalPolynomial({v});
}

RationalPolynomial RationalPolynomial::monomial(int degree,
                                                const Rational& coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
  c.back() = coeff;
  return RationalPolynomial(std::move(c));
}

Rational RationalPolynomial::coeff(int i) const {
  if (i < 0) throw std::invalid_argument("coeff: negative index");
  if (i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + it->to_double();
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() == 1) return RationalPolynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  if (is_zero()) return RationalPolynomial();
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    a[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return RationalPolynomial(std::move(a));
}

Rational RationalPolynomial::integral(const Rational& a,
                                      const Rational& b) const {
  const RationalPolynomial f = antiderivative();
  return f.eval(b) - f.eval(a);
}

RationalPolynomial RationalPolynomial::divide_exact(
    const RationalPolynomial& d) const {
  if (d.is_zero())
    throw std::invalid_argument("divide_exact: division by zero polynomial");
  if (is_zero()) return RationalPolynomial();
  if (degree() < d.degree())
    throw std::invalid_argument("divide_exact: inexact division");
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(static_cast<size_t>(degree() - d.degree()) + 1,
                             Rational(0));
  const Rational lead = d.leading();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<size_t>(k + d.degree())] / lead;
    quot[static_cast<size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= d.degree(); ++j)
      rem[static_cast<size_t>(k + j)] -= q * d.c_[static_cast<size_t>(j)];
  }
  for (const auto& r : rem)
    if (!r.is_zero())
      throw std::invalid_argument("divide_exact: inexact division");
  return RationalPolynomial(std::move(quot));
}

std::pair<Rational, std::vector<Integer>>
RationalPolynomial::content_and_primitive() const {
  if (is_zero()) return {Rational(1), {}};
  // Common denominator first, then the gcd of the integer numerators.
  Integer den(1);
  for (const auto& q : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                   q.denominator().get_mpz_t());
  std::vector<Integer> ints(c_.size());
  Integer g(0);
  for (size_t i = 0; i < c_.size(); ++i) {
    ints[i] = c_[i].numerator() * (den / c_[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  for (auto& v : ints) v /= g;
  return {Rational(g, den), std::move(ints)};
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[static_cast<size_t>(i)];
    if (a.is_zero() && !(first && i == 0)) continue;
    if (!first) os << " + ";
    os << "(" << a.to_string() << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

RationalPolynomial operator+(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  return a + (-b);
}

RationalPolynomial RationalPolynomial::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
  std::vector<Rational> c(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
  return RationalPolynomial(std::move(c));
}

namespace detail {

void ip_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int ip_degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer ip_content(const IntPoly& p) {
  Integer g(0);
  for (const auto& v : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

void ip_make_primitive(IntPoly& p) {
  ip_trim(p);
  if (p.empty()) return;
  const Integer g = ip_content(p);
  if (g > 1)
    for (auto& v : p) v /= g;
}

IntPoly ip_derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i)
    d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

IntPoly ip_prem_pos(const IntPoly& a, const IntPoly& b) {
  const int da = ip_degree(a);
  const int db = ip_degree(b);
  if (db < 0) throw std::invalid_argument("ip_prem_pos: zero divisor");
  if (da < db) return a;
  const Integer& lb = b.back();
  IntPoly r = a;
  int steps = 0;
  while (ip_degree(r) >= db) {
    const int dr = ip_degree(r);
    const Integer lr = r.back();
    // r <- lb*r - lr*x^(dr-db)*b, which drops the degree of r.
    for (auto& v : r) v *= lb;
    for (int j = 0; j <= db; ++j)
      r[static_cast<size_t>(dr - db + j)] -= lr * b[static_cast<size_t>(j)];
    ip_trim(r);
    ++steps;
  }
  // The loop multiplied the remainder by lb^steps; flip the sign back when
  // that factor is negative so we return a positive multiple.
  if (lb < 0 && (steps % 2) == 1)
    for (auto& v : r) v = -v;
  return r;
}

int ip_sign_at(const IntPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  // sign(p(u/v)) = sign(sum a_i u^i v^(d-i)) for v > 0.
  const Integer u = x.numerator();
  const Integer v = x.denominator();
  Integer acc(0);
  Integer vpow(1);
  // Horner from the top: acc = a_d; acc = acc*u + a_{d-1}*v^1; ...
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (it == p.rbegin()) {
      acc = *it;
    } else {
      vpow *= v;
      acc = acc * u + *it * vpow;
    }
  }
  return sgn(acc);
}

}  // namespace detail

namespace {

using detail::IntPoly;

RationalPolynomial from_int_poly(const IntPoly& p) {
  if (p.empty()) return RationalPolynomial();
  std::vector<Rational> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = Rational(p[i]);
  return RationalPolynomial(std::move(c));
}

}  // namespace

RationalPolynomial poly_gcd(const RationalPolynomial& a,
                            const RationalPolynomial& b) {
  IntPoly pa = a.content_and_primitive().second;
  IntPoly pb = b.content_and_primitive().second;
  if (pa.empty()) std::swap(pa, pb);
  if (pb.empty()) {
    if (!pa.empty() && pa.back() < 0)
      for (auto& v : pa) v = -v;
    return from_int_poly(pa);
  }
  if (detail::ip_degree(pa) < detail::ip_degree(pb)) std::swap(pa, pb);
  // Primitive Euclidean remainder sequence.
  while (true) {
    IntPoly r = detail::ip_prem_pos(pa, pb);
    detail::ip_make_primitive(r);
    if (r.empty()) break;
    pa = std::move(pb);
    pb = std::move(r);
  }
  if (pb.back() < 0)
    for (auto& v : pb) v = -v;
  return from_int_poly(pb);
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.is_zero()) return RationalPolynomial();
  const RationalPolynomial g = poly_gcd(p, p.derivative());
  RationalPolynomial sf = p.divide_exact(g);
  auto [content, prim] = sf.content_and_primitive();
  (void)content;
  return from_int_poly(prim);
}

}  // namespace rbs
