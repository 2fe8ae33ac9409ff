#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rbs/rational.hpp"

namespace rbs {

// Dense univariate polynomial with exact rational coefficients, stored in
// ascending degree order. Normalized so the coefficient list is nonempty and
// has no trailing zeros; the zero polynomial is stored as {0}.
class RationalPolynomial {
 public:
  RationalPolynomial() : c_{Rational(0)} {}
  explicit RationalPolynomial(std::vector<Rational> ascending);

  static RationalPolynomial constant(const Rational& v);
  static RationalPolynomial monomial(int degree, const Rational& coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Coefficient of x^i; zero beyond the degree.
  Rational coeff(int i) const;
  Rational leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  double eval_double(double x) const;

  RationalPolynomial derivative() const;
  RationalPolynomial antiderivative() const;  // constant of integration 0
  Rational integral(const Rational& a, const Rational& b) const;

  // Exact quotient; throws std::invalid_argument if the division leaves a
  // remainder or the divisor is zero.
  RationalPolynomial divide_exact(const RationalPolynomial& d) const;

  // Writes this == content * primitive with content > 0 rational and
  // primitive an integer-coefficient polynomial whose coefficients have
  // gcd 1 (sign of the leading coefficient preserved). The zero polynomial
  // decomposes as 1 * {0}.
  std::pair<Rational, std::vector<Integer>> content_and_primitive() const;

  // Human-readable descending form, e.g. "(-3/23)*s^2 + (24/23)".
  std::string to_string(const std::string& var = "s") const;

  friend RationalPolynomial operator+(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& s,
                                      const RationalPolynomial& p);
  RationalPolynomial operator-() const;
  friend bool operator==(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const RationalPolynomial& a,
                         const RationalPolynomial& b) {
    return !(a == b);
  }

 private:
  void normalize();

  std::vector<Rational> c_;
};

// GCD of two rational polynomials, returned as the primitive
// integer-coefficient representative with positive leading coefficient
// (constant 1 for coprime inputs). gcd(0, 0) is the zero polynomial.
RationalPolynomial poly_gcd(const RationalPolynomial& a,
                            const RationalPolynomial& b);

// p with repeated factors collapsed: p / gcd(p, p'). Primitive integer
// coefficients, leading sign preserved from p.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

namespace detail {

// Integer-coefficient helpers shared by the GCD and Sturm machinery.
// Polynomials are ascending std::vector<Integer>, no trailing zeros
// (zero polynomial = empty vector).
using IntPoly = std::vector<Integer>;

void ip_trim(IntPoly& p);
int ip_degree(const IntPoly& p);  // -1 for the zero polynomial
Integer ip_content(const IntPoly& p);
void ip_make_primitive(IntPoly& p);
IntPoly ip_derivative(const IntPoly& p);
// Positive-scalar multiple of the remainder of a by b (pseudo-remainder with
// the sign of the implied multiplier corrected to be positive).
IntPoly ip_prem_pos(const IntPoly& a, const IntPoly& b);
// Sign of p at the rational point x (homogeneous integer evaluation).
int ip_sign_at(const IntPoly& p, const Rational& x);

}  // namespace detail

}  // namespace rbs
