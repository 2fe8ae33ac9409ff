#include "rbs/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rbs {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(long num, long den)
    : Rational(Integer(num), Integer(den)) {}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
  }
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(unsigned long e) const {
  Rational out;
  mpz_pow_ui(out.q_.get_num_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(out.q_.get_den_mpz_t(), q_.get_den_mpz_t(), e);
  // num/den coprime implies num^e/den^e coprime; no canonicalization needed.
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  Rational out;
  mpq_inv(out.q_.get_mpq_t(), q_.get_mpq_t());
  return out;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= b.q_;
  return *this;
}

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace rbs
